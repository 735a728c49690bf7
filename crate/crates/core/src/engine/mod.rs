//! The (A, L, f)-coloring solver and the exhaustive and randomized checkers
//! built on it.
//!
//! A labeling `f` assigns a group element to every edge relative to an
//! [`Orientation`]; a coloring `c` is valid when `c(x) ∈ L(x)` for every
//! vertex and `c(tail) - c(head) != f(e)` for every edge, where `a - b` is
//! `op(a, inverse(b))`.

mod checks;
mod enumerate;
mod frontier;
mod greedy;
mod hard;
pub mod naive;
mod par;
mod randomized;
mod solve;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Orientation};
use crate::group::{Elem, ElemSet, Group};

pub use checks::{check_d_group_choosable, check_group_choosable, check_group_colorable, check_list_sizes};
pub use greedy::{greedy, two_phase_total, TwoPhaseError};
pub use hard::{c3t_hard_labeling, HardInstance};
pub use randomized::{randomized_colorability, RandomizedOptions, RandomizedReport};
pub use solve::{solve, solve_with_budget, SolveOutcome};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CheckError {
    #[error("budget exceeded after {nodes} nodes ({reason})")]
    BudgetExceeded { nodes: u64, reason: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("list size {size} exceeds group order {order}")]
    ListTooLarge { size: usize, order: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("frontier of {coords} vertices does not fit the state encoding")]
    FrontierTooWide { coords: usize },
}

impl CheckError {
    pub fn is_budget(&self) -> bool {
        matches!(self, CheckError::BudgetExceeded { .. } | CheckError::FrontierTooWide { .. })
    }
}

/// Edge labels relative to an orientation, indexed by edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    values: Vec<Elem>,
}

impl EdgeLabeling {
    pub fn zero(g: &Graph, group: &Group) -> EdgeLabeling {
        EdgeLabeling { values: vec![group.zero(); g.edge_count()] }
    }

    pub fn from_values(values: Vec<Elem>) -> EdgeLabeling {
        EdgeLabeling { values }
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, e: usize) -> Elem {
        self.values[e]
    }

    pub fn set(&mut self, e: usize, x: Elem) {
        self.values[e] = x;
    }
}

/// One list of allowed colors per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<ElemSet>,
}

impl ListAssignment {
    pub fn full(n: usize, group: &Group) -> ListAssignment {
        ListAssignment { lists: vec![group.full_set(); n] }
    }

    pub fn from_sets(lists: Vec<ElemSet>) -> ListAssignment {
        ListAssignment { lists }
    }

    pub fn lists(&self) -> &[ElemSet] {
        &self.lists
    }

    pub fn get(&self, v: usize) -> ElemSet {
        self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// The common list size, when all lists have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.lists.first()?.len();
        self.lists.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).min().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    pub colors: Vec<Elem>,
}

/// Checks a coloring against lists and labels, independently of any solver.
pub fn is_valid_coloring(
    g: &Graph,
    o: &Orientation,
    group: &Group,
    f: &EdgeLabeling,
    lists: &ListAssignment,
    c: &Coloring,
) -> bool {
    if c.colors.len() != g.vertex_count() || lists.len() != g.vertex_count() || f.len() != g.edge_count() {
        return false;
    }
    let in_lists = c.colors.iter().zip(lists.lists()).all(|(&x, l)| x.index() < group.order() && l.contains(x));
    in_lists
        && (0..g.edge_count()).all(|e| {
            let (t, h) = o.arc(g, e);
            group.sub(c.colors[t], c.colors[h]) != f.get(e)
        })
}

pub(crate) fn check_dimensions(
    g: &Graph,
    o: &Orientation,
    group: &Group,
    f: &EdgeLabeling,
    lists: &ListAssignment,
) -> Result<(), CheckError> {
    let mismatch = |what: String| Err(CheckError::DimensionMismatch(what));
    if o.len() != g.edge_count() {
        return mismatch(format!("orientation covers {} edges, graph has {}", o.len(), g.edge_count()));
    }
    if f.len() != g.edge_count() {
        return mismatch(format!("labeling covers {} edges, graph has {}", f.len(), g.edge_count()));
    }
    if lists.len() != g.vertex_count() {
        return mismatch(format!("{} lists for {} vertices", lists.len(), g.vertex_count()));
    }
    let full = group.full_set().bits();
    if f.values().iter().any(|x| x.index() >= group.order()) || lists.lists().iter().any(|l| l.bits() & !full != 0) {
        return mismatch(format!("elements outside {}", group.name()));
    }
    Ok(())
}

/// A labeled arc of a witness: `c(tail) - c(head)` must avoid `label`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledArc {
    pub tail: usize,
    pub head: usize,
    pub label: usize,
}

/// A concrete `(f, L)` instance admitting no coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub arcs: Vec<LabeledArc>,
    pub lists: Vec<Vec<usize>>,
}

impl Witness {
    pub fn new(g: &Graph, o: &Orientation, f: &EdgeLabeling, lists: &ListAssignment) -> Witness {
        Witness {
            arcs: (0..g.edge_count())
                .map(|e| {
                    let (tail, head) = o.arc(g, e);
                    LabeledArc { tail, head, label: f.get(e).index() }
                })
                .collect(),
            lists: lists.lists().iter().map(|l| l.iter().map(Elem::index).collect()).collect(),
        }
    }

    /// Rebuilds the orientation, labeling and lists on `g`.
    pub fn to_instance(&self, g: &Graph, group: &Group) -> Result<(Orientation, EdgeLabeling, ListAssignment), CheckError> {
        let bad = |m: String| CheckError::DimensionMismatch(m);
        if self.arcs.len() != g.edge_count() || self.lists.len() != g.vertex_count() {
            return Err(bad("witness does not match the graph".into()));
        }
        let pairs: Vec<(usize, usize)> = self.arcs.iter().map(|a| (a.tail, a.head)).collect();
        let o = Orientation::from_arcs(g, &pairs).map_err(|e| bad(e.to_string()))?;
        let mut values = vec![group.zero(); g.edge_count()];
        for a in &self.arcs {
            let e = g.edge_between(a.tail, a.head).ok_or_else(|| bad("arc is not an edge".into()))?;
            values[e] = group.elem(a.label).map_err(|e| bad(e.to_string()))?;
        }
        let lists = self
            .lists
            .iter()
            .map(|l| l.iter().map(|&i| group.elem(i)).collect::<Result<ElemSet, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| bad(e.to_string()))?;
        Ok((o, EdgeLabeling::from_values(values), ListAssignment::from_sets(lists)))
    }

    /// Re-runs the solver on the witness; true when it is indeed unsolvable.
    pub fn recheck(&self, g: &Graph, group: &Group) -> Result<bool, CheckError> {
        let (o, f, lists) = self.to_instance(g, group)?;
        Ok(solve(g, &o, group, &f, &lists)?.is_none())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Wall time; left out of serialized output so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Compares node counts only; wall time differs between identical runs.
impl PartialEq for SearchStats {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes
    }
}

impl Eq for SearchStats {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// Hard limits on an exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 20_000_000_000, max_seconds: 1800.0 }
    }
}

impl Budget {
    pub const NODES_ENV: &'static str = "GTC_BUDGET_NODES";
    pub const SECONDS_ENV: &'static str = "GTC_BUDGET_SECONDS";

    pub fn unlimited() -> Budget {
        Budget { max_nodes: u64::MAX, max_seconds: f64::INFINITY }
    }

    /// The default budget with `GTC_BUDGET_NODES` / `GTC_BUDGET_SECONDS` applied.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Some(n) = std::env::var(Self::NODES_ENV).ok().and_then(|s| s.parse().ok()) {
            b.max_nodes = n;
        }
        if let Some(s) = std::env::var(Self::SECONDS_ENV).ok().and_then(|s| s.parse().ok()) {
            b.max_seconds = s;
        }
        b
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    /// Memoized search over the adversary's choices, vertex by vertex.
    #[default]
    Frontier,
    /// Enumerate every normalized `(f, L)` and solve each one.
    Enumerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exec {
    Parallel,
    Sequential,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub orientation_seed: u64,
    pub budget: Budget,
    pub engine: Engine,
    pub exec: Exec,
}

impl CheckOptions {
    pub fn with_budget(budget: Budget) -> CheckOptions {
        CheckOptions { budget, ..CheckOptions::default() }
    }
}

/// Shared node/time accounting for one check, usable from several workers.
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    nodes: std::sync::atomic::AtomicU64,
    abort: std::sync::atomic::AtomicBool,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Meter {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0.into(),
            abort: false.into(),
        }
    }

    /// Adds `n` nodes; errors once the node or time budget is spent.
    pub(crate) fn charge(&self, n: u64) -> Result<(), CheckError> {
        use std::sync::atomic::Ordering::Relaxed;
        let total = self.nodes.fetch_add(n, Relaxed) + n;
        if self.abort.load(Relaxed) {
            return Err(self.exceeded("aborted"));
        }
        if total > self.budget.max_nodes {
            self.abort.store(true, Relaxed);
            return Err(self.exceeded("node limit"));
        }
        if self.start.elapsed().as_secs_f64() > self.budget.max_seconds {
            self.abort.store(true, Relaxed);
            return Err(self.exceeded("time limit"));
        }
        Ok(())
    }

    pub(crate) fn exceeded(&self, reason: &str) -> CheckError {
        CheckError::BudgetExceeded {
            nodes: self.nodes.load(std::sync::atomic::Ordering::Relaxed),
            reason: reason.to_string(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

/// Adjacency with orientation baked in: for each vertex, `(neighbor, edge,
/// neighbor_is_tail)`.
pub(crate) fn oriented_adjacency(g: &Graph, o: &Orientation) -> Vec<Vec<(usize, usize, bool)>> {
    (0..g.vertex_count())
        .map(|v| {
            g.adjacency(v)
                .iter()
                .map(|&(w, e)| (w, e, o.arc(g, e).0 == w))
                .collect()
        })
        .collect()
}

/// Left multiplier `m` such that the color forbidden at `v` by neighbor color
/// `x` is `m * x`, for an edge with label `f`.
#[inline]
pub(crate) fn forbid_multiplier(group: &Group, f: Elem, neighbor_is_tail: bool) -> Elem {
    // neighbor -> v:  c(w) - c(v) != f  <=>  c(v) != f^-1 c(w)
    // v -> neighbor:  c(v) - c(w) != f  <=>  c(v) != f c(w)
    if neighbor_is_tail {
        group.inverse(f)
    } else {
        f
    }
}

/// All subsets of `{0..order}` with exactly `size` elements, in increasing
/// order of their bit masks.
pub(crate) fn subsets_of_size(order: usize, size: usize) -> Vec<ElemSet> {
    if size > order {
        return Vec::new();
    }
    let mut out = Vec::new();
    if size == 0 {
        out.push(ElemSet::EMPTY);
        return out;
    }
    // Gosper's hack.
    let mut x: u64 = (1u64 << size) - 1;
    let limit_bits = order as u32;
    loop {
        out.push(ElemSet::from_bits(x));
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if limit_bits < 64 && x >> limit_bits != 0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(5, 5).len(), 1);
        assert_eq!(subsets_of_size(3, 0), vec![ElemSet::EMPTY]);
        assert!(subsets_of_size(3, 4).is_empty());
        assert!(subsets_of_size(6, 3).iter().all(|s| s.len() == 3 && s.bits() < 64));
    }

    #[test]
    fn witness_roundtrip() {
        let g = graph::cycle(3).unwrap();
        let group = Group::parse("Z3").unwrap();
        let o = graph::orient(&g, 4);
        let f = EdgeLabeling::from_values(vec![group.elem(1).unwrap(), group.zero(), group.elem(2).unwrap()]);
        let l = ListAssignment::full(3, &group);
        let w = Witness::new(&g, &o, &f, &l);
        let (o2, f2, l2) = w.to_instance(&g, &group).unwrap();
        assert_eq!((o2, f2, l2), (o, f, l));
    }

    #[test]
    fn validity_checker() {
        let g = graph::path(2).unwrap();
        let group = Group::parse("Z3").unwrap();
        let o = graph::orient(&g, 0);
        let f = EdgeLabeling::from_values(vec![group.elem(1).unwrap()]);
        let l = ListAssignment::full(2, &group);
        let e = |i| group.elem(i).unwrap();
        assert!(!is_valid_coloring(&g, &o, &group, &f, &l, &Coloring { colors: vec![e(1), e(0)] }));
        assert!(is_valid_coloring(&g, &o, &group, &f, &l, &Coloring { colors: vec![e(0), e(0)] }));
        assert!(!is_valid_coloring(&g, &o, &group, &f, &l, &Coloring { colors: vec![e(0)] }));
    }
}
