//! Total graphs and line graphs, with a map from each derived vertex back to
//! the base element it stands for.
//!
//! In a total graph the base vertices come first with their own ids, followed
//! by one vertex per base edge in edge-index order.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Vertex(usize),
    Edge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedGraph {
    pub graph: Graph,
    pub origin: Vec<Origin>,
}

impl DerivedGraph {
    /// Derived vertex standing for base vertex `v` (total graphs only).
    pub fn vertex_of(&self, v: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == Origin::Vertex(v))
    }

    /// Derived vertex standing for base edge `e`.
    pub fn edge_vertex(&self, e: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == Origin::Edge(e))
    }
}

pub fn total_graph(g: &Graph) -> DerivedGraph {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    edges.extend(line_edges(g).into_iter().map(|(a, b)| (n + a, n + b)));
    let origin = (0..n)
        .map(Origin::Vertex)
        .chain((0..g.edge_count()).map(Origin::Edge))
        .collect();
    DerivedGraph {
        graph: Graph::new(n + g.edge_count(), &edges).expect("total graph is simple"),
        origin,
    }
}

pub fn line_graph(g: &Graph) -> DerivedGraph {
    DerivedGraph {
        graph: Graph::new(g.edge_count(), &line_edges(g)).expect("line graph is simple"),
        origin: (0..g.edge_count()).map(Origin::Edge).collect(),
    }
}

/// Pairs of base edges sharing an endpoint, grouped by that endpoint.
fn line_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let inc: Vec<usize> = g.adjacency(v).iter().map(|&(_, e)| e).collect();
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                out.push((inc[i], inc[j]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, is_isomorphic};

    #[test]
    fn total_of_p2_is_triangle() {
        let t = total_graph(&graph::path(2).unwrap());
        assert!(is_isomorphic(&t.graph, &graph::complete(3).unwrap()));
    }

    #[test]
    fn total_of_p3() {
        let t = total_graph(&graph::path(3).unwrap());
        assert_eq!(t.graph.vertex_count(), 5);
        assert_eq!(t.graph.edge_count(), 7);
        // Hand count: ends 0,2 have degree 2, edge-vertices 3,4 have degree 3,
        // the middle vertex has degree 4.
        assert_eq!(t.graph.degree_sequence(), vec![2, 2, 3, 3, 4]);
        assert_eq!(t.graph.degree(1), 4);
        assert_eq!(t.origin[3], Origin::Edge(0));
    }

    #[test]
    fn total_of_cycles_is_4_regular() {
        for n in 3..=6 {
            let t = total_graph(&graph::cycle(n).unwrap());
            assert_eq!(t.graph.vertex_count(), 2 * n);
            assert!((0..2 * n).all(|v| t.graph.degree(v) == 4));
        }
    }

    #[test]
    fn line_graph_examples() {
        let l = line_graph(&graph::path(3).unwrap());
        assert_eq!((l.graph.vertex_count(), l.graph.edge_count()), (2, 1));
        let k3 = graph::complete(3).unwrap();
        assert!(is_isomorphic(&line_graph(&k3).graph, &k3));
        assert!(is_isomorphic(&line_graph(&graph::star(3).unwrap()).graph, &k3));
    }

    #[test]
    fn derived_vertex_lookup() {
        let g = graph::cycle(4).unwrap();
        let t = total_graph(&g);
        assert_eq!(t.vertex_of(2), Some(2));
        assert_eq!(t.edge_vertex(3), Some(7));
        assert_eq!(line_graph(&g).vertex_of(0), None);
    }
}
