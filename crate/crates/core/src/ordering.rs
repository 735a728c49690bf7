//! Degeneracy orderings, block decomposition, and the structural oracles
//! built on top of them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("input graph is disconnected")]
    Disconnected,
}

/// An ordering witnessing the coloring number: every vertex has at most
/// `col - 1` neighbors earlier in `ordering`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyCertificate {
    pub col: usize,
    pub ordering: Vec<usize>,
    /// Indexed by vertex, not by position.
    pub back_degrees: Vec<usize>,
}

impl DegeneracyCertificate {
    pub fn position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ordering.len()];
        for (i, &v) in self.ordering.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        if self.ordering.len() != n || self.back_degrees.len() != n {
            return false;
        }
        for &v in &self.ordering {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let pos = self.position();
        let ok = (0..n).all(|v| g.neighbors(v).filter(|&w| pos[w] < pos[v]).count() == self.back_degrees[v]);
        let max_back = self.back_degrees.iter().copied().max();
        ok && max_back.map_or(self.col == 0, |m| m + 1 == self.col)
    }
}

/// Coloring number by repeated removal of a minimum-degree vertex (ties to
/// the lowest id); the ordering is the reversed removal order.
pub fn coloring_number(g: &Graph) -> DegeneracyCertificate {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut back_degrees = vec![0; n];
    while let Some((d, v)) = queue.pop_first() {
        removed[v] = true;
        removal.push(v);
        back_degrees[v] = d;
        for w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    removal.reverse();
    let col = back_degrees.iter().max().map_or(0, |&m| m + 1);
    DegeneracyCertificate { col, ordering: removal, back_degrees }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted.
    pub blocks: Vec<Vec<usize>>,
    /// Edge indices per block, aligned with `blocks`.
    pub block_edges: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// Biconnected components (isolated vertices form singleton blocks).
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out_blocks = Vec::new();
    let mut out_edges = Vec::new();
    let mut is_cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            out_blocks.push(vec![root]);
            out_edges.push(Vec::new());
            continue;
        }
        let mut root_children = 0;
        // Frames: (vertex, parent edge, next adjacency index).
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let (w, e) = g.adjacency(v)[*idx];
                *idx += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                let Some(&(p, _, _)) = stack.last() else { break };
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    if p == root {
                        root_children += 1;
                    } else {
                        is_cut[p] = true;
                    }
                    let mut es = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        es.push(e);
                        if e == pe {
                            break;
                        }
                    }
                    let verts: BTreeSet<usize> = es.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
                    es.sort_unstable();
                    out_blocks.push(verts.into_iter().collect());
                    out_edges.push(es);
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    BlockDecomposition {
        blocks: out_blocks,
        block_edges: out_edges,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Whether a block (given by its vertex count and edge count) is complete.
fn block_is_complete(vertices: usize, edges: usize) -> bool {
    edges == vertices * vertices.saturating_sub(1) / 2
}

/// True iff some block of the connected graph `g` is neither complete nor a
/// cycle, which characterizes degree-list group choosability.
pub fn d_group_choosable_oracle(g: &Graph) -> Result<bool, OrderingError> {
    if !g.is_connected() {
        return Err(OrderingError::Disconnected);
    }
    let dec = blocks(g);
    Ok(dec.blocks.iter().zip(&dec.block_edges).any(|(vs, es)| {
        let complete = block_is_complete(vs.len(), es.len());
        let cycle = vs.len() >= 3 && es.len() == vs.len() && {
            let mut deg = std::collections::HashMap::new();
            for &e in es {
                let (u, v) = g.edge(e);
                *deg.entry(u).or_insert(0) += 1;
                *deg.entry(v).or_insert(0) += 1;
            }
            deg.values().all(|&d| d == 2)
        };
        !complete && !cycle
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "shape")]
pub enum CoreShape {
    K1,
    /// `C_{2m+2}`; stores the cycle length.
    EvenCycle { length: usize },
    /// `Theta_{2,2,2m}`; stores `m`.
    Theta { m: usize },
    Other,
}

impl CoreShape {
    /// The three shapes whose pruned graphs are 2-choosable.
    pub fn is_two_choosable_shape(self) -> bool {
        !matches!(self, CoreShape::Other)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrunedCore {
    pub core: Graph,
    /// Original vertex id of each core vertex.
    pub kept: Vec<usize>,
    pub shape: CoreShape,
}

/// Deletes degree-1 vertices one at a time (lowest id first) and classifies
/// what remains.
pub fn prune_core(g: &Graph) -> Result<PrunedCore, OrderingError> {
    if !g.is_connected() {
        return Err(OrderingError::Disconnected);
    }
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    loop {
        let Some(v) = (0..n).find(|&v| alive[v] && degree[v] == 1) else { break };
        if remaining == 1 {
            break;
        }
        alive[v] = false;
        remaining -= 1;
        for w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let (core, _) = g.induced(&kept);
    let shape = classify_core(&core);
    Ok(PrunedCore { core, kept, shape })
}

fn classify_core(core: &Graph) -> CoreShape {
    let n = core.vertex_count();
    if n == 1 {
        return CoreShape::K1;
    }
    let degs: Vec<usize> = (0..n).map(|v| core.degree(v)).collect();
    if degs.iter().all(|&d| d == 2) && core.is_connected() {
        return if n.is_multiple_of(2) { CoreShape::EvenCycle { length: n } } else { CoreShape::Other };
    }
    let ends: Vec<usize> = (0..n).filter(|&v| degs[v] == 3).collect();
    if ends.len() != 2 || degs.iter().any(|&d| d != 2 && d != 3) {
        return CoreShape::Other;
    }
    // Trace the three branches leaving the first end vertex.
    let (a, b) = (ends[0], ends[1]);
    let mut lengths = Vec::new();
    for start in core.neighbors(a) {
        let (mut prev, mut cur, mut len) = (a, start, 1);
        while cur != b {
            if degs[cur] != 2 {
                return CoreShape::Other;
            }
            let next = core.neighbors(cur).find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            len += 1;
            if len > n {
                return CoreShape::Other;
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    match lengths.as_slice() {
        [2, 2, l] if l % 2 == 0 && core.edge_count() == 4 + l => CoreShape::Theta { m: l / 2 },
        _ => CoreShape::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::total_graph;
    use crate::graph;

    #[test]
    fn coloring_number_examples() {
        for n in 1..=7 {
            let c = coloring_number(&graph::complete(n).unwrap());
            assert_eq!(c.col, n);
        }
        for seed in 0..10 {
            let t = graph::random_tree(7, seed, 4).unwrap();
            assert_eq!(coloring_number(&t).col, 2);
        }
        let tw6 = total_graph(&graph::wheel(6).unwrap()).graph;
        let cert = coloring_number(&tw6);
        assert_eq!(cert.col, 7);
        assert!(cert.verify(&tw6));
    }

    #[test]
    fn certificate_verifies() {
        let g = graph::theta(3).unwrap();
        let c = coloring_number(&g);
        assert!(c.verify(&g));
        let mut bad = c.clone();
        bad.col += 1;
        assert!(!bad.verify(&g));
    }

    #[test]
    fn coloring_number_is_minimal_on_small_graphs() {
        // Brute force over all orderings for every connected graph on 5 vertices.
        for g in graph::connected_graphs(5) {
            let mut perm: Vec<usize> = (0..5).collect();
            let mut best = usize::MAX;
            loop {
                let mut pos = [0; 5];
                for (i, &v) in perm.iter().enumerate() {
                    pos[v] = i;
                }
                let worst = (0..5).map(|v| g.neighbors(v).filter(|&w| pos[w] < pos[v]).count()).max().unwrap();
                best = best.min(worst + 1);
                if !graph::next_permutation(&mut perm) {
                    break;
                }
            }
            assert_eq!(coloring_number(&g).col, best);
        }
    }

    #[test]
    fn block_examples() {
        let bowtie = graph::Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = blocks(&bowtie);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
        let d = blocks(&graph::cycle(5).unwrap());
        assert_eq!((d.blocks.len(), d.cut_vertices.len()), (1, 0));
        let d = blocks(&graph::path(4).unwrap());
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn blocks_partition_edges() {
        for g in graph::connected_graphs(5) {
            let d = blocks(&g);
            let mut all: Vec<usize> = d.block_edges.concat();
            all.sort_unstable();
            assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
            for i in 0..d.blocks.len() {
                for j in i + 1..d.blocks.len() {
                    let shared = d.blocks[i].iter().filter(|v| d.blocks[j].contains(v)).count();
                    assert!(shared <= 1);
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(!d_group_choosable_oracle(&graph::complete(4).unwrap()).unwrap());
        let diamond = graph::complete(4).unwrap().without_edge(0);
        assert!(d_group_choosable_oracle(&diamond).unwrap());
        for n in 3..8 {
            assert!(!d_group_choosable_oracle(&graph::cycle(n).unwrap()).unwrap());
        }
        let two = graph::disjoint_union(&[&graph::path(2).unwrap(), &graph::path(2).unwrap()]);
        assert_eq!(d_group_choosable_oracle(&two), Err(OrderingError::Disconnected));
    }

    #[test]
    fn core_examples() {
        let t = graph::random_tree(8, 4, 4).unwrap();
        assert_eq!(prune_core(&t).unwrap().shape, CoreShape::K1);
        let mut edges: Vec<_> = graph::cycle(6).unwrap().edges().to_vec();
        edges.push((0, 6));
        let c6p = graph::Graph::new(7, &edges).unwrap();
        assert_eq!(prune_core(&c6p).unwrap().shape, CoreShape::EvenCycle { length: 6 });
        assert_eq!(prune_core(&graph::complete(4).unwrap()).unwrap().shape, CoreShape::Other);
        assert_eq!(prune_core(&graph::cycle(5).unwrap()).unwrap().shape, CoreShape::Other);
        for m in 1..4 {
            assert_eq!(prune_core(&graph::theta(m).unwrap()).unwrap().shape, CoreShape::Theta { m });
        }
        assert_eq!(prune_core(&graph::path(2).unwrap()).unwrap().shape, CoreShape::K1);
    }
}
