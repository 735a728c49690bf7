//! Exhaustive check by listing every normalized instance and solving it.

use std::sync::atomic::{AtomicU64, Ordering::Relaxed};

use crate::graph::{Graph, Orientation};
use crate::group::{Elem, Group};

use super::checks::Adversary;
use super::par::find_first;
use super::solve::{Problem, Scratch};
use super::{CheckError, CheckOptions, EdgeLabeling, ListAssignment, Meter, SearchStats, Status, Verdict, Witness};

const BLOCK: u64 = 1 << 12;

pub(crate) fn run(g: &Graph, o: &Orientation, group: &Group, adv: &Adversary, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let meter = Meter::new(opts.budget);
    let total = adv.instance_count(group);
    if total > opts.budget.max_nodes {
        return Err(CheckError::BudgetExceeded {
            nodes: 0,
            reason: format!("{total} instances exceed the node limit"),
        });
    }
    let problem = Problem::new(g, o, group);
    let free: Vec<usize> = (0..g.edge_count()).filter(|&e| adv.free_edge[e]).collect();
    let decode = |mut idx: u64, labels: &mut Vec<Elem>, lists: &mut Vec<u64>| {
        lists.clear();
        for opts in &adv.list_options {
            let k = opts.len() as u64;
            lists.push(opts[(idx % k) as usize].bits());
            idx /= k;
        }
        labels.clear();
        labels.resize(g.edge_count(), group.zero());
        for &e in &free {
            let k = group.order() as u64;
            labels[e] = Elem::raw((idx % k) as usize);
            idx /= k;
        }
    };
    let blocks = total.div_ceil(BLOCK) as usize;
    let block_nodes: Vec<AtomicU64> = (0..blocks).map(|_| AtomicU64::new(0)).collect();
    let found = find_first(blocks, opts.exec, |b| {
        let mut scratch = Scratch::default();
        let (mut labels, mut lists) = (Vec::new(), Vec::new());
        let mut nodes = 0;
        let start = b as u64 * BLOCK;
        let mut result = None;
        for idx in start..(start + BLOCK).min(total) {
            decode(idx, &mut labels, &mut lists);
            match problem.solve(&labels, lists.iter().copied(), &mut scratch, &meter) {
                Ok(true) => nodes += scratch.nodes,
                Ok(false) => {
                    nodes += scratch.nodes;
                    result = Some(Ok(idx));
                    break;
                }
                Err(e) => {
                    result = Some(Err(e));
                    break;
                }
            }
        }
        block_nodes[b].store(nodes, Relaxed);
        result
    });
    let counted = |upto: usize| block_nodes[..upto].iter().map(|n| n.load(Relaxed)).sum::<u64>();
    match found {
        None => Ok(Verdict {
            status: Status::Holds,
            witness: None,
            stats: SearchStats { nodes: counted(blocks), elapsed: meter.elapsed() },
        }),
        Some((_, Err(e))) => Err(e),
        Some((b, Ok(idx))) => {
            let (mut labels, mut lists) = (Vec::new(), Vec::new());
            decode(idx, &mut labels, &mut lists);
            let f = EdgeLabeling::from_values(labels);
            let l = ListAssignment::from_sets(lists.into_iter().map(crate::group::ElemSet::from_bits).collect());
            Ok(Verdict {
                status: Status::Fails,
                witness: Some(Witness::new(g, o, &f, &l)),
                stats: SearchStats { nodes: counted(b + 1), elapsed: meter.elapsed() },
            })
        }
    }
}
