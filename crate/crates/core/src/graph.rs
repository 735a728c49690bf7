//! Simple undirected graphs, orientations, and the family generators.
//!
//! Vertex numbering per family is fixed:
//! - `path(n)`: vertices `0..n` in order, edge `i` is `(i, i+1)`.
//! - `cycle(n)`: vertices `0..n` in cyclic order, edge `i` is `(i, i+1 mod n)`.
//! - `wheel(n)`: rim is `cycle(n)` on `0..n`, hub is vertex `n`, spoke `n + i` is `(i, n)`.
//! - `star(k)`: hub `0`, leaves `1..=k`.
//! - `theta(m)`: ends `0` and `1`, short-path middles `2` and `3`, the long path
//!   runs `0, 4, 5, ..., 2m+2, 1`.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameters for {family}: {reason}")]
    ParamsInvalid { family: String, reason: String },
    #[error("cannot parse graph: {0}")]
    Parse(String),
}

/// A simple undirected graph with stable edge indices.
///
/// Edges are stored as `(u, v)` with `u < v`, in insertion order. Adjacency
/// lists are sorted and carry the index of the connecting edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut canon = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if adj[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push((v, i));
            adj[v].push((u, i));
            canon.push((u, v));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v` with the connecting edge index, sorted by neighbor.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    /// Component id per vertex, numbered in order of lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Induced subgraph on `keep` (in the given order); returns the graph and
    /// for each new edge the index of the original edge.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                edges.push((pos[u], pos[v]));
                origin.push(e);
            }
        }
        (Graph::new(keep.len(), &edges).expect("induced subgraph is simple"), origin)
    }

    /// The graph with edge `e` removed; remaining edges keep their relative order.
    pub fn without_edge(&self, e: usize) -> Graph {
        let edges: Vec<_> = self.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p).collect();
        Graph::new(self.n, &edges).expect("subgraph is simple")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Bit mask adjacency; only valid for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n)
            .map(|v| self.neighbors(v).fold(0u64, |m, w| m | 1 << w))
            .collect()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            rotation: None,
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// On-disk graph format. `rotation`, when present, lists each vertex's
/// neighbors in cyclic order around it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }
}

/// Direction of every edge: `forward[e]` means the edge points from its
/// smaller endpoint to its larger one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn from_bits(forward: Vec<bool>) -> Orientation {
        Orientation { forward }
    }

    /// Builds an orientation from a list of `(tail, head)` arcs covering every edge once.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Orientation, GraphError> {
        let mut forward = vec![None; g.edge_count()];
        for &(t, h) in arcs {
            if t >= g.vertex_count() || h >= g.vertex_count() {
                return Err(GraphError::IndexOutOfRange { vertex: t.max(h), n: g.vertex_count() });
            }
            let e = g
                .edge_between(t, h)
                .ok_or_else(|| GraphError::Parse(format!("arc ({t}, {h}) is not an edge")))?;
            if forward[e].replace(t < h).is_some() {
                return Err(GraphError::DuplicateEdge(t.min(h), t.max(h)));
            }
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(e, d)| d.ok_or_else(|| GraphError::Parse(format!("edge {e} has no direction"))))
            .collect::<Result<_, _>>()?;
        Ok(Orientation { forward })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn is_forward(&self, e: usize) -> bool {
        self.forward[e]
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, g: &Graph, e: usize) -> (usize, usize) {
        let (u, v) = g.edge(e);
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        (0..g.edge_count()).map(|e| self.arc(g, e)).collect()
    }

    pub fn set_arc(&mut self, g: &Graph, tail: usize, head: usize) {
        let e = g.edge_between(tail, head).expect("arc must be an edge");
        self.forward[e] = tail < head;
    }

    pub fn flip(&mut self, e: usize) {
        self.forward[e] = !self.forward[e];
    }
}

/// Orients `g`. Seed 0 orients every edge from the endpoint reached first by
/// a breadth-first search started at the lowest vertex of each component (so
/// trees point away from vertex 0). Any other seed draws each direction from
/// a ChaCha stream keyed by the seed.
pub fn orient(g: &Graph, seed: u64) -> Orientation {
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return Orientation { forward: (0..g.edge_count()).map(|_| rng.gen()).collect() };
    }
    let rank = bfs_rank(g);
    let forward = g.edges().iter().map(|&(u, v)| rank[u] < rank[v]).collect();
    Orientation { forward }
}

/// Position of each vertex in a BFS that restarts at the lowest unvisited vertex.
pub fn bfs_rank(g: &Graph) -> Vec<usize> {
    let mut rank = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for s in 0..g.vertex_count() {
        if rank[s] != usize::MAX {
            continue;
        }
        rank[s] = next;
        next += 1;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if rank[w] == usize::MAX {
                    rank[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    rank
}

fn invalid(family: &str, reason: &str) -> GraphError {
    GraphError::ParamsInvalid { family: family.to_string(), reason: reason.to_string() }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path", "needs at least one vertex"));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle", "needs at least three vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("wheel", "rim needs at least three vertices"));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::new(n + 1, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("complete", "needs at least one vertex"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(invalid("bipartite", "both parts must be non-empty"));
    }
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::new(a + b, &edges)
}

pub fn star(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(invalid("star", "needs at least one leaf"));
    }
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::new(k + 1, &edges)
}

/// Two end vertices joined by internally disjoint paths of lengths 2, 2 and 2m.
pub fn theta(m: usize) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(invalid("theta", "m must be at least 1"));
    }
    let mut edges = vec![(0, 2), (2, 1), (0, 3), (3, 1)];
    let long: Vec<usize> = std::iter::once(0).chain(4..4 + 2 * m - 1).chain(std::iter::once(1)).collect();
    edges.extend(long.windows(2).map(|w| (w[0], w[1])));
    Graph::new(2 * m + 3, &edges)
}

/// A uniformly drawn labeled tree on `n` vertices from a seeded Prüfer
/// sequence, redrawn until its maximum degree is at most `max_degree`.
pub fn random_tree(n: usize, seed: u64, max_degree: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("tree", "needs at least one vertex"));
    }
    if n > 2 && max_degree < 2 {
        return Err(invalid("tree", "maximum degree below 2 is impossible beyond two vertices"));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        if degree.iter().any(|&d| d > max_degree) {
            continue;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &c in &code {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, c));
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        return Graph::new(n, &edges);
    }
}

/// A seeded graph on `n` vertices with `m` distinct edges drawn uniformly
/// from all vertex pairs.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(invalid("random", "more edges than vertex pairs"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, pairs, m);
    let mut all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let mut idx: Vec<usize> = picked.into_vec();
    idx.sort_unstable();
    let mut edges = Vec::with_capacity(m);
    let mut at = 0;
    for i in idx {
        edges.push(all.nth(i - at).expect("index below pair count"));
        at = i + 1;
    }
    Graph::new(n, &edges)
}

/// Canonical form of a small graph: the lexicographically least sorted edge
/// list over all vertex relabelings. Brute force, intended for `n <= 8`.
pub fn canonical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    assert!(n <= 8, "canonical form is brute force");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut es: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        es.sort_unstable();
        if best.as_ref().is_none_or(|b| es < *b) {
            best = Some(es);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_edges(a) == canonical_edges(b)
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// All connected graphs on exactly `n` vertices up to isomorphism, in a
/// deterministic order (by edge count, then canonical edge list).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "exhaustive enumeration supports 1..=6 vertices");
    static CACHE: [std::sync::OnceLock<Vec<Graph>>; 7] = [const { std::sync::OnceLock::new() }; 7];
    CACHE[n].get_or_init(|| enumerate_connected(n)).clone()
}

fn enumerate_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<_> = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            let canon = canonical_edges(&g);
            seen.insert((canon.len(), canon));
        }
    }
    seen.into_iter()
        .map(|(_, es)| Graph::new(n, &es).unwrap())
        .collect()
}

/// All graphs without isolated vertices having between 1 and `max_edges`
/// edges (`max_edges <= 4`), up to isomorphism, built as disjoint unions of
/// connected pieces.
pub fn small_edge_graphs(max_edges: usize) -> Vec<Graph> {
    assert!(max_edges <= 4);
    let mut pieces: Vec<Graph> = (2..=max_edges + 1)
        .flat_map(connected_graphs)
        .filter(|g| g.edge_count() <= max_edges)
        .collect();
    pieces.sort_by_key(|g| (g.edge_count(), g.vertex_count()));
    let mut out = Vec::new();
    // Multisets of piece indices in non-decreasing order.
    fn rec(pieces: &[Graph], start: usize, budget: usize, chosen: &mut Vec<usize>, out: &mut Vec<Graph>) {
        if !chosen.is_empty() {
            out.push(disjoint_union(&chosen.iter().map(|&i| &pieces[i]).collect::<Vec<_>>()));
        }
        for i in start..pieces.len() {
            if pieces[i].edge_count() <= budget {
                chosen.push(i);
                rec(pieces, i, budget - pieces[i].edge_count(), chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&pieces, 0, max_edges, &mut Vec::new(), &mut out);
    out
}

pub fn disjoint_union(parts: &[&Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.vertex_count();
    }
    Graph::new(offset, &edges).expect("disjoint union is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_small_graphs() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.edge_count(), 1);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_isomorphic(&k3, &cycle(3).unwrap()));
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.max_degree(), 3);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
        assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(GraphError::IndexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn random_graph_is_seeded() {
        let a = random_graph(9, 14, 5).unwrap();
        assert_eq!((a.vertex_count(), a.edge_count()), (9, 14));
        assert_eq!(a, random_graph(9, 14, 5).unwrap());
        assert_eq!(random_graph(4, 6, 1).unwrap().edge_count(), 6);
        assert!(random_graph(4, 7, 1).is_err());
    }

    #[test]
    fn family_shapes() {
        let w = wheel(6).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count(), w.max_degree()), (7, 12, 6));
        assert_eq!(w.degree(6), 6);
        let c = cycle(5).unwrap();
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c.edge(4), (0, 4));
        assert!(is_isomorphic(&theta(1).unwrap(), &complete_bipartite(2, 3).unwrap()));
        let t3 = theta(3).unwrap();
        assert_eq!(t3.vertex_count(), 9);
        assert_eq!(t3.edge_count(), 10);
        assert_eq!((t3.degree(0), t3.degree(1)), (3, 3));
        assert!(cycle(2).is_err());
        assert!(theta(0).is_err());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let graphs = [
            path(7).unwrap(),
            cycle(6).unwrap(),
            wheel(8).unwrap(),
            complete(6).unwrap(),
            complete_bipartite(3, 4).unwrap(),
            star(5).unwrap(),
            theta(4).unwrap(),
            random_tree(9, 3, 4).unwrap(),
        ];
        for g in &graphs {
            let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn random_tree_deterministic_and_bounded() {
        for seed in 0..30 {
            let a = random_tree(8, seed, 4).unwrap();
            let b = random_tree(8, seed, 4).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.edge_count(), 7);
            assert!(a.is_connected());
            assert!(a.max_degree() <= 4);
        }
        assert_eq!(random_tree(1, 0, 4).unwrap().vertex_count(), 1);
    }

    #[test]
    fn orientation_conventions() {
        let p2 = path(2).unwrap();
        assert_eq!(orient(&p2, 0).arc(&p2, 0), (0, 1));
        let tree = random_tree(8, 11, 4).unwrap();
        let o = orient(&tree, 0);
        // Away from 0: every vertex other than 0 has exactly one incoming arc.
        let mut indeg = [0; 8];
        for (_, h) in o.arcs(&tree) {
            indeg[h] += 1;
        }
        assert_eq!(indeg[0], 0);
        assert!(indeg[1..].iter().all(|&d| d == 1));
        let c3 = cycle(3).unwrap();
        assert_eq!(orient(&c3, 5), orient(&c3, 5));
        assert_eq!(orient(&c3, 1).len(), 3);
    }

    #[test]
    fn orientation_from_arcs() {
        let c3 = cycle(3).unwrap();
        let o = Orientation::from_arcs(&c3, &[(1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(o.arcs(&c3), vec![(1, 0), (2, 1), (0, 2)]);
        assert!(Orientation::from_arcs(&c3, &[(1, 0)]).is_err());
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn small_edge_graph_count() {
        // Graphs without isolated vertices: 1 edge: 1, 2 edges: 2, 3 edges: 5, 4 edges: 11.
        let gs = small_edge_graphs(4);
        let mut by_edges = [0; 5];
        for g in &gs {
            by_edges[g.edge_count()] += 1;
            assert_eq!(g.min_degree().min(1), 1);
        }
        assert_eq!(by_edges, [0, 1, 2, 5, 11]);
    }

    #[test]
    fn json_roundtrip() {
        let g = wheel(5).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }
}
