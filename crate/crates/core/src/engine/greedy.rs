use thiserror::Error;

use crate::derived::{line_graph, DerivedGraph, Origin};
use crate::graph::{Graph, Orientation};
use crate::group::{Elem, Group};
use crate::ordering::coloring_number;

use super::{check_dimensions, forbid_multiplier, oriented_adjacency, CheckError, Coloring, EdgeLabeling, ListAssignment};

/// Colors vertices in `ordering`, each with the first list element not
/// forbidden by an already colored neighbor. Vertices missing from
/// `ordering` stay uncolored, so `None` is also returned for a partial order.
pub fn greedy(
    g: &Graph,
    ordering: &[usize],
    group: &Group,
    o: &Orientation,
    f: &EdgeLabeling,
    lists: &ListAssignment,
) -> Option<Coloring> {
    check_dimensions(g, o, group, f, lists).ok()?;
    let adj = oriented_adjacency(g, o);
    let mut colors: Vec<Option<Elem>> = vec![None; g.vertex_count()];
    greedy_into(&adj, ordering, group, f, lists, &mut colors).ok()?;
    colors.into_iter().collect::<Option<Vec<_>>>().map(|colors| Coloring { colors })
}

/// Greedy pass over `ordering`; on a dead end returns the stuck vertex.
fn greedy_into(
    adj: &[Vec<(usize, usize, bool)>],
    ordering: &[usize],
    group: &Group,
    f: &EdgeLabeling,
    lists: &ListAssignment,
    colors: &mut [Option<Elem>],
) -> Result<(), usize> {
    for &v in ordering {
        let mut avail = lists.get(v);
        for &(w, e, w_is_tail) in &adj[v] {
            if let Some(cw) = colors[w] {
                avail.remove(group.op(forbid_multiplier(group, f.get(e), w_is_tail), cw));
            }
        }
        colors[v] = Some(avail.first().ok_or(v)?);
    }
    Ok(())
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TwoPhaseError {
    #[error("list at {element:?} has {size} elements, needs at least {required}")]
    Precondition { element: Origin, size: usize, required: usize },
    #[error("phase {phase} ran out of colors at {element:?}")]
    PhaseFailure { phase: u8, element: Origin },
    #[error(transparent)]
    Input(#[from] CheckError),
}

/// Total coloring in two passes: base vertices greedily in the degeneracy
/// order of `g`, then edge vertices greedily in the degeneracy order of the
/// line graph, each edge list having lost the colors its two ends forbid.
///
/// `estimate` bounds the list chromatic index from above; every list must
/// have at least `estimate + 2` elements.
pub fn two_phase_total(
    g: &Graph,
    total: &DerivedGraph,
    o: &Orientation,
    group: &Group,
    f: &EdgeLabeling,
    lists: &ListAssignment,
    estimate: usize,
) -> Result<Coloring, TwoPhaseError> {
    let t = &total.graph;
    check_dimensions(t, o, group, f, lists)?;
    if t.vertex_count() != g.vertex_count() + g.edge_count() {
        return Err(CheckError::DimensionMismatch("derived graph is not the total graph of g".into()).into());
    }
    let required = estimate + 2;
    if let Some(v) = (0..t.vertex_count()).find(|&v| lists.get(v).len() < required) {
        return Err(TwoPhaseError::Precondition { element: total.origin[v], size: lists.get(v).len(), required });
    }
    let adj = oriented_adjacency(t, o);
    let mut colors: Vec<Option<Elem>> = vec![None; t.vertex_count()];
    let locate = |o: Origin| total.origin.iter().position(|&x| x == o).expect("derived vertex");
    let phase1: Vec<usize> = coloring_number(g).ordering.into_iter().map(|v| locate(Origin::Vertex(v))).collect();
    greedy_into(&adj, &phase1, group, f, lists, &mut colors)
        .map_err(|v| TwoPhaseError::PhaseFailure { phase: 1, element: total.origin[v] })?;
    let phase2: Vec<usize> = coloring_number(&line_graph(g).graph)
        .ordering
        .into_iter()
        .map(|e| locate(Origin::Edge(e)))
        .collect();
    greedy_into(&adj, &phase2, group, f, lists, &mut colors)
        .map_err(|v| TwoPhaseError::PhaseFailure { phase: 2, element: total.origin[v] })?;
    Ok(Coloring { colors: colors.into_iter().map(|c| c.expect("every vertex colored")).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::total_graph;
    use crate::engine::is_valid_coloring;
    use crate::graph::{self, orient};
    use crate::group::ElemSet;

    #[test]
    fn trees_with_pairs_always_succeed() {
        let g = graph::random_tree(9, 3, 4).unwrap();
        let z3 = Group::parse("Z3").unwrap();
        let o = orient(&g, 1);
        let ord = coloring_number(&g).ordering;
        for a in 0..3 {
            let f = EdgeLabeling::from_values(vec![z3.elem(a).unwrap(); g.edge_count()]);
            let l = ListAssignment::from_sets(vec![ElemSet::from_bits(0b110); 9]);
            let c = greedy(&g, &ord, &z3, &o, &f, &l).unwrap();
            assert!(is_valid_coloring(&g, &o, &z3, &f, &l, &c));
        }
    }

    #[test]
    fn empty_list_dead_ends() {
        let g = Graph::empty(1);
        let z2 = Group::parse("Z2").unwrap();
        let o = orient(&g, 0);
        let l = ListAssignment::from_sets(vec![ElemSet::EMPTY]);
        assert_eq!(greedy(&g, &[0], &z2, &o, &EdgeLabeling::zero(&g, &z2), &l), None);
    }

    #[test]
    fn two_phase_on_p3() {
        let g = graph::path(3).unwrap();
        let t = total_graph(&g);
        let z5 = Group::parse("Z5").unwrap();
        let o = orient(&t.graph, 0);
        let f = EdgeLabeling::zero(&t.graph, &z5);
        let l = ListAssignment::from_sets(vec![ElemSet::from_bits(0b01111); 5]);
        let estimate = coloring_number(&line_graph(&g).graph).col;
        let c = two_phase_total(&g, &t, &o, &z5, &f, &l, estimate).unwrap();
        assert!(is_valid_coloring(&t.graph, &o, &z5, &f, &l, &c));
        let small = ListAssignment::from_sets(vec![ElemSet::from_bits(0b111); 5]);
        assert!(matches!(
            two_phase_total(&g, &t, &o, &z5, &f, &small, estimate),
            Err(TwoPhaseError::Precondition { required: 4, .. })
        ));
    }
}
