use crate::graph::{Graph, Orientation};
use crate::group::{Elem, Group};
use crate::ordering::coloring_number;

use super::{
    check_dimensions, forbid_multiplier, oriented_adjacency, Budget, CheckError, Coloring, EdgeLabeling,
    ListAssignment, Meter,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub coloring: Option<Coloring>,
    pub nodes: u64,
}

/// Finds an `(A, L, f)`-coloring, or `None` when none exists.
pub fn solve(
    g: &Graph,
    o: &Orientation,
    group: &Group,
    f: &EdgeLabeling,
    lists: &ListAssignment,
) -> Result<Option<Coloring>, CheckError> {
    Ok(solve_with_budget(g, o, group, f, lists, Budget::unlimited())?.coloring)
}

pub fn solve_with_budget(
    g: &Graph,
    o: &Orientation,
    group: &Group,
    f: &EdgeLabeling,
    lists: &ListAssignment,
    budget: Budget,
) -> Result<SolveOutcome, CheckError> {
    check_dimensions(g, o, group, f, lists)?;
    let problem = Problem::new(g, o, group);
    let meter = Meter::new(budget);
    let mut scratch = Scratch::default();
    let found = problem.solve(f.values(), lists.lists().iter().map(|l| l.bits()), &mut scratch, &meter)?;
    Ok(SolveOutcome {
        coloring: found.then(|| Coloring { colors: scratch.colors.iter().map(|&c| Elem::raw(c as usize)).collect() }),
        nodes: scratch.nodes,
    })
}

/// Static part of a solver instance: the graph, its orientation and a
/// variable order. Labels and lists are supplied per call.
pub(crate) struct Problem<'a> {
    group: &'a Group,
    adj: Vec<Vec<(usize, usize, bool)>>,
    order: Vec<usize>,
}

#[derive(Default)]
pub(crate) struct Scratch {
    domains: Vec<u64>,
    trail: Vec<(usize, u64)>,
    pub(crate) colors: Vec<u8>,
    pub(crate) nodes: u64,
    mults: Vec<Vec<Elem>>,
}

const CHARGE_EVERY: u64 = 1 << 12;

impl<'a> Problem<'a> {
    pub(crate) fn new(g: &Graph, o: &Orientation, group: &'a Group) -> Problem<'a> {
        Problem {
            group,
            adj: oriented_adjacency(g, o),
            order: coloring_number(g).ordering,
        }
    }

    /// Backtracking with forward checking over the degeneracy order. On
    /// success the coloring is left in `scratch.colors`.
    pub(crate) fn solve(
        &self,
        labels: &[Elem],
        lists: impl Iterator<Item = u64>,
        scratch: &mut Scratch,
        meter: &Meter,
    ) -> Result<bool, CheckError> {
        let n = self.adj.len();
        scratch.domains.clear();
        scratch.domains.extend(lists);
        scratch.trail.clear();
        scratch.colors.clear();
        scratch.colors.resize(n, u8::MAX);
        scratch.nodes = 0;
        // For each vertex and adjacency entry, the multiplier turning the
        // vertex's color into the color it forbids at that neighbor.
        scratch.mults.resize_with(n, Vec::new);
        for (v, entries) in self.adj.iter().enumerate() {
            let m = &mut scratch.mults[v];
            m.clear();
            // Entry (w, e, w_is_tail) seen from w: v is the neighbor, and v is
            // the tail exactly when w is not.
            m.extend(entries.iter().map(|&(_, e, w_is_tail)| forbid_multiplier(self.group, labels[e], !w_is_tail)));
        }
        if scratch.domains.contains(&0) {
            return Ok(false);
        }
        let mut pending = 0u64;
        let found = self.search(0, scratch, meter, &mut pending)?;
        meter.charge(pending)?;
        Ok(found)
    }

    fn search(&self, depth: usize, s: &mut Scratch, meter: &Meter, pending: &mut u64) -> Result<bool, CheckError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let mut dom = s.domains[v];
        while dom != 0 {
            let c = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            s.nodes += 1;
            *pending += 1;
            if *pending >= CHARGE_EVERY {
                meter.charge(*pending)?;
                *pending = 0;
            }
            s.colors[v] = c as u8;
            let mark = s.trail.len();
            let mut wiped = false;
            for (i, &(w, _, _)) in self.adj[v].iter().enumerate() {
                if s.colors[w] != u8::MAX {
                    continue;
                }
                let forb = self.group.op(s.mults[v][i], Elem::raw(c)).index();
                let d = s.domains[w];
                if d >> forb & 1 == 1 {
                    s.trail.push((w, d));
                    let nd = d & !(1u64 << forb);
                    s.domains[w] = nd;
                    if nd == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped && self.search(depth + 1, s, meter, pending)? {
                return Ok(true);
            }
            while s.trail.len() > mark {
                let (w, d) = s.trail.pop().expect("trail entry");
                s.domains[w] = d;
            }
            s.colors[v] = u8::MAX;
        }
        Ok(false)
    }
}
