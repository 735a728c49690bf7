use crate::derived::{total_graph, DerivedGraph};
use crate::graph::{cycle, orient, Graph, Orientation};
use crate::group::Group;

use super::{CheckError, EdgeLabeling};

/// The labeling of `T(C_{3t})` over `Z3` that admits no coloring.
#[derive(Clone, Debug)]
pub struct HardInstance {
    pub base: Graph,
    pub total: DerivedGraph,
    pub orientation: Orientation,
    pub labeling: EdgeLabeling,
    pub group: Group,
}

/// With `n = 3t` and `e_i` the vertex of base edge `i`, sets
/// `f(e_{n-2} -> e_{n-1}) = 1`, `f(e_{n-1} -> e_0) = 2` and zero elsewhere,
/// on the seed-0 orientation with those two arcs fixed as stated.
pub fn c3t_hard_labeling(t: usize) -> Result<HardInstance, CheckError> {
    if t == 0 {
        return Err(CheckError::Precondition("t must be at least 1".into()));
    }
    let n = 3 * t;
    let base = cycle(n).map_err(|e| CheckError::Precondition(e.to_string()))?;
    let total = total_graph(&base);
    let group = Group::cyclic(3).expect("Z3");
    let g = &total.graph;
    let mut orientation = orient(g, 0);
    let mut labeling = EdgeLabeling::zero(g, &group);
    let e = |i: usize| total.edge_vertex(i).expect("edge vertex");
    for (tail, head, value) in [(e(n - 2), e(n - 1), 1), (e(n - 1), e(0), 2)] {
        orientation.set_arc(g, tail, head);
        let idx = g.edge_between(tail, head).expect("consecutive edges are adjacent");
        labeling.set(idx, group.elem(value).expect("in Z3"));
    }
    Ok(HardInstance { base, total, orientation, labeling, group })
}
