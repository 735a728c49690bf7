//! Plane graphs given by rotation systems, their faces, and the structural
//! finders: short cycles, k-nets, 2-alternating cycles, light edges, the
//! outerplanar reducible configurations, and small fixed minors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{self, Graph, GraphError, GraphJson};
use crate::ordering::blocks;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("invalid rotation system: {0}")]
    RotationInvalid(String),
    #[error("face walk starting at dart {0}->{1} does not close")]
    WalkNotClosed(usize, usize),
    #[error("graph has {n} vertices, above the minor-test cap of {cap}")]
    SizeExceeded { n: usize, cap: usize },
    #[error("cycle length {length} outside the supported range {min}..={max}")]
    LengthOutOfRange { length: usize, min: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph together with a cyclic order of the neighbors around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    // rot_index[v][i]: position in rotation[v] of the i-th sorted neighbor.
    rot_index: Vec<Vec<usize>>,
}

impl PlaneGraph {
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<PlaneGraph, StructureError> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(StructureError::RotationInvalid(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                n
            )));
        }
        let mut rot_index = Vec::with_capacity(n);
        for (v, rot) in rotation.iter().enumerate() {
            let adj = graph.adjacency(v);
            if rot.len() != adj.len() {
                return Err(StructureError::RotationInvalid(format!(
                    "vertex {v} lists {} neighbors but has degree {}",
                    rot.len(),
                    adj.len()
                )));
            }
            let mut idx = vec![usize::MAX; adj.len()];
            for (pos, &w) in rot.iter().enumerate() {
                let i = adj
                    .binary_search_by_key(&w, |&(x, _)| x)
                    .map_err(|_| StructureError::RotationInvalid(format!("{w} is not a neighbor of {v}")))?;
                if idx[i] != usize::MAX {
                    return Err(StructureError::RotationInvalid(format!("{w} repeated around {v}")));
                }
                idx[i] = pos;
            }
            rot_index.push(idx);
        }
        let pg = PlaneGraph { graph, rotation, rot_index };
        pg.faces()?;
        Ok(pg)
    }

    /// Rotation read off a straight-line drawing: neighbors sorted by angle.
    pub fn from_layout(graph: Graph, points: &[(f64, f64)]) -> Result<PlaneGraph, StructureError> {
        if points.len() != graph.vertex_count() {
            return Err(StructureError::RotationInvalid(format!(
                "{} points for {} vertices",
                points.len(),
                graph.vertex_count()
            )));
        }
        let rotation = (0..graph.vertex_count())
            .map(|v| {
                let (x, y) = points[v];
                let mut nbrs: Vec<(f64, usize)> = graph
                    .neighbors(v)
                    .map(|w| ((points[w].1 - y).atan2(points[w].0 - x), w))
                    .collect();
                nbrs.sort_by(|a, b| a.0.total_cmp(&b.0));
                nbrs.into_iter().map(|(_, w)| w).collect()
            })
            .collect();
        PlaneGraph::new(graph, rotation)
    }

    pub fn from_json(json: &GraphJson) -> Result<PlaneGraph, StructureError> {
        let g = json.to_graph()?;
        let rotation = json
            .rotation
            .clone()
            .ok_or_else(|| StructureError::RotationInvalid("missing \"rotation\" field".into()))?;
        PlaneGraph::new(g, rotation)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { rotation: Some(self.rotation.clone()), ..self.graph.to_json() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// The neighbor following `u` in the rotation at `v`.
    fn successor(&self, v: usize, u: usize) -> usize {
        let adj = self.graph.adjacency(v);
        let i = adj.binary_search_by_key(&u, |&(x, _)| x).expect("dart endpoints are adjacent");
        let rot = &self.rotation[v];
        rot[(self.rot_index[v][i] + 1) % rot.len()]
    }

    fn dart(&self, u: usize, v: usize) -> usize {
        let e = self.graph.edge_between(u, v).expect("dart endpoints are adjacent");
        2 * e + usize::from(u > v)
    }

    /// All face boundary walks. The dart `u -> v` is followed by `v -> w`
    /// where `w` comes after `u` in the rotation at `v`. Each isolated vertex
    /// contributes one face of degree 0.
    pub fn faces(&self) -> Result<Vec<FaceWalk>, StructureError> {
        let m = self.graph.edge_count();
        let mut seen = vec![false; 2 * m];
        let mut out = Vec::new();
        for v in 0..self.graph.vertex_count() {
            if self.graph.degree(v) == 0 {
                out.push(FaceWalk { darts: Vec::new(), isolated: Some(v) });
            }
        }
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            let (a, b) = self.graph.edge(start / 2);
            let (u0, v0) = if start % 2 == 0 { (a, b) } else { (b, a) };
            let mut darts = Vec::new();
            let (mut u, mut v) = (u0, v0);
            loop {
                let d = self.dart(u, v);
                if seen[d] {
                    return Err(StructureError::WalkNotClosed(u0, v0));
                }
                seen[d] = true;
                darts.push((u, v));
                let w = self.successor(v, u);
                (u, v) = (v, w);
                if (u, v) == (u0, v0) {
                    break;
                }
                if darts.len() > 2 * m {
                    return Err(StructureError::WalkNotClosed(u0, v0));
                }
            }
            out.push(FaceWalk { darts, isolated: None });
        }
        Ok(out)
    }

    /// `|V| - |E| + |F|`, which is `2` per component for a spherical embedding.
    pub fn euler_characteristic(&self) -> Result<i64, StructureError> {
        let f = self.faces()?.len() as i64;
        Ok(self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + f)
    }

    pub fn is_spherical(&self) -> Result<bool, StructureError> {
        Ok(self.euler_characteristic()? == 2 * self.graph.component_count() as i64)
    }
}

/// A closed boundary walk, as the sequence of darts traversed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWalk {
    pub darts: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    isolated: Option<usize>,
}

impl FaceWalk {
    /// Number of edge steps in the walk.
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Vertices in walk order, with repeats.
    pub fn vertices(&self) -> Vec<usize> {
        match self.isolated {
            Some(v) => vec![v],
            None => self.darts.iter().map(|&(u, _)| u).collect(),
        }
    }

    /// Number of times the walk passes through `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.vertices().iter().filter(|&&u| u == v).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for v in self.vertices() {
            *m.entry(v).or_insert(0) += 1;
        }
        m
    }

    /// True when the boundary is a cycle.
    pub fn is_simple(&self) -> bool {
        self.degree() >= 3 && self.multiplicities().values().all(|&c| c == 1)
    }
}

/// Every cycle of length `l`, each listed once: it starts at its smallest
/// vertex and its second vertex is smaller than its last.
pub fn cycles_of_length(g: &Graph, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    each_cycle(g, l, &mut |c| {
        out.push(c.to_vec());
        false
    });
    out
}

/// Calls `visit` on each cycle of length `l` until it returns true.
fn each_cycle(g: &Graph, l: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn extend(
        g: &Graph,
        l: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let s = path[0];
        let v = *path.last().expect("path is non-empty");
        if path.len() == l {
            return g.has_edge(v, s) && path[1] < v && visit(path);
        }
        for w in g.neighbors(v) {
            if w <= s || on_path[w] {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            let stop = extend(g, l, path, on_path, visit);
            path.pop();
            on_path[w] = false;
            if stop {
                return true;
            }
        }
        false
    }
    if l < 3 {
        return false;
    }
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on_path[s] = true;
        let stop = extend(g, l, &mut vec![s], &mut on_path, visit);
        on_path[s] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Exact test for a cycle of length `l`; lengths below 3 never occur.
pub fn has_cycle_len(g: &Graph, l: usize) -> bool {
    each_cycle(g, l, &mut |_| true)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub const KNET_MAX_LENGTH: usize = 8;

/// A cycle together with one of its chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Knet {
    pub cycle: Vec<usize>,
    pub chord: (usize, usize),
}

pub fn find_knet(g: &Graph, k: usize) -> Result<Option<Knet>, StructureError> {
    if !(4..=KNET_MAX_LENGTH).contains(&k) {
        return Err(StructureError::LengthOutOfRange { length: k, min: 4, max: KNET_MAX_LENGTH });
    }
    let mut found = None;
    each_cycle(g, k, &mut |c| {
        for i in 0..k {
            // Skip the two cycle neighbors of c[i]; each chord is seen from its lower position.
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if g.has_edge(c[i], c[j]) {
                    found = Some(Knet { cycle: c.to_vec(), chord: (c[i], c[j]) });
                    return true;
                }
            }
        }
        false
    });
    Ok(found)
}

/// An even cycle whose vertices at odd positions all have degree 2 in `g`.
pub fn find_2_alternating_cycle(g: &Graph) -> Option<Vec<usize>> {
    // Walk hub -> degree-2 vertex -> hub; the degree-2 vertex forces the next hub.
    fn extend(g: &Graph, cycle: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let start = cycle[0];
        let hub = *cycle.last().expect("cycle is non-empty");
        for u in g.neighbors(hub) {
            if g.degree(u) != 2 || used[u] {
                continue;
            }
            let next = g.neighbors(u).find(|&x| x != hub).expect("degree two");
            if next == start {
                if cycle.len() >= 3 {
                    cycle.push(u);
                    return true;
                }
                continue;
            }
            if next < start || used[next] {
                continue;
            }
            used[u] = true;
            used[next] = true;
            cycle.push(u);
            cycle.push(next);
            if extend(g, cycle, used) {
                return true;
            }
            cycle.truncate(cycle.len() - 2);
            used[u] = false;
            used[next] = false;
        }
        false
    }
    let mut used = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        used[s] = true;
        let mut cycle = vec![s];
        if extend(g, &mut cycle, &mut used) {
            return Some(cycle);
        }
        used[s] = false;
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LightEdgeRule {
    /// `deg(u) + deg(v) <= s`.
    SumAtMost(usize),
    /// One endpoint of degree 3, the other of degree at most `d`.
    DegreeThreeNeighborAtMost(usize),
}

impl LightEdgeRule {
    pub fn accepts(self, du: usize, dv: usize) -> bool {
        match self {
            LightEdgeRule::SumAtMost(s) => du + dv <= s,
            LightEdgeRule::DegreeThreeNeighborAtMost(d) => (du == 3 && dv <= d) || (dv == 3 && du <= d),
        }
    }
}

/// Index of the first edge satisfying `rule`.
pub fn find_light_edge(g: &Graph, rule: LightEdgeRule) -> Option<usize> {
    g.edges().iter().position(|&(u, v)| rule.accepts(g.degree(u), g.degree(v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OuterplanarConfig {
    /// A vertex of degree 1.
    A,
    /// An edge joining two vertices of degree 2.
    B,
    /// A triangle `uxy` with `deg(u) = 2` and `deg(x) = 3`.
    C,
    /// Two triangles `x u1 v1`, `x u2 v2` on five distinct vertices with
    /// `deg(u1) = deg(u2) = 2` and `deg(x) = 4`.
    D,
}

/// The first of the configurations a, b, c, d present in `g`.
///
/// A triangle through a degree-2 vertex bounds a face in every outerplanar
/// embedding, so the triangle tests need no rotation.
pub fn outerplanar_configuration(g: &Graph) -> Option<OuterplanarConfig> {
    let n = g.vertex_count();
    if (0..n).any(|v| g.degree(v) == 1) {
        return Some(OuterplanarConfig::A);
    }
    if g.edges().iter().any(|&(u, v)| g.degree(u) == 2 && g.degree(v) == 2) {
        return Some(OuterplanarConfig::B);
    }
    // Ears: (u, x, y) with deg(u) = 2 and u, x, y a triangle.
    let ears: Vec<(usize, usize, usize)> = (0..n)
        .filter(|&u| g.degree(u) == 2)
        .filter_map(|u| {
            let mut it = g.neighbors(u);
            let (x, y) = (it.next()?, it.next()?);
            g.has_edge(x, y).then_some((u, x, y))
        })
        .collect();
    if ears.iter().any(|&(_, x, y)| g.degree(x) == 3 || g.degree(y) == 3) {
        return Some(OuterplanarConfig::C);
    }
    for (i, &(u1, x1, y1)) in ears.iter().enumerate() {
        for &(u2, x2, y2) in &ears[i + 1..] {
            for (x, v1) in [(x1, y1), (y1, x1)] {
                for (xx, v2) in [(x2, y2), (y2, x2)] {
                    if x != xx || g.degree(x) != 4 {
                        continue;
                    }
                    let mut five = [x, u1, v1, u2, v2];
                    five.sort_unstable();
                    if five.windows(2).all(|w| w[0] != w[1]) {
                        return Some(OuterplanarConfig::D);
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorId {
    K4,
    K23,
    /// `K_{2,3}` plus an edge between two of its degree-2 vertices.
    K2barPlus,
}

impl MinorId {
    pub fn graph(self) -> Graph {
        match self {
            MinorId::K4 => graph::complete(4),
            MinorId::K23 => graph::complete_bipartite(2, 3),
            MinorId::K2barPlus => Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
        }
        .expect("fixed minor graphs are valid")
    }
}

impl std::str::FromStr for MinorId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k4" => Ok(MinorId::K4),
            "k23" | "k2,3" => Ok(MinorId::K23),
            "k2bar_plus" | "k2barplus" => Ok(MinorId::K2barPlus),
            other => Err(format!("unknown minor {other:?}; expected K4, K23 or K2bar_plus")),
        }
    }
}

pub const DEFAULT_MINOR_CAP: usize = 14;

pub fn has_minor(g: &Graph, h: MinorId) -> Result<bool, StructureError> {
    has_minor_capped(g, h, DEFAULT_MINOR_CAP)
}

/// Exact test whether `h` is a minor of `g`.
///
/// Each fixed minor is 2-connected, so it suffices to look inside blocks. In
/// a connected host every model extends to one whose branch sets partition
/// the vertex set, so the search runs over partitions of a block into
/// `|V(h)|` connected parts and asks whether the quotient contains `h`.
pub fn has_minor_capped(g: &Graph, h: MinorId, cap: usize) -> Result<bool, StructureError> {
    let n = g.vertex_count();
    if n > cap || n > 64 {
        return Err(StructureError::SizeExceeded { n, cap: cap.min(64) });
    }
    let hg = h.graph();
    let target = MinorTarget::new(&hg);
    let decomposition = blocks(g);
    for (verts, edges) in decomposition.blocks.iter().zip(&decomposition.block_edges) {
        if verts.len() < hg.vertex_count() || edges.len() < hg.edge_count() {
            continue;
        }
        let mut adj = vec![0u64; n];
        for &e in edges {
            let (u, v) = g.edge(e);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let all = verts.iter().fold(0u64, |m, &v| m | 1 << v);
        let mut search = PartitionSearch { adj: &adj, target: &target, parts: Vec::new() };
        if search.split(all, hg.vertex_count()) {
            return Ok(true);
        }
    }
    Ok(false)
}

struct MinorTarget {
    edges: Vec<(usize, usize)>,
    perms: Vec<Vec<usize>>,
}

impl MinorTarget {
    fn new(h: &Graph) -> MinorTarget {
        let mut perms = Vec::new();
        let mut p: Vec<usize> = (0..h.vertex_count()).collect();
        permutations(&mut p, 0, &mut perms);
        MinorTarget { edges: h.edges().to_vec(), perms }
    }

    /// Whether the quotient graph (adjacency masks over part indices)
    /// contains the target as a subgraph.
    fn embeds(&self, quotient: &[u32]) -> bool {
        let qe: u32 = quotient.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
        if (qe as usize) < self.edges.len() {
            return false;
        }
        self.perms
            .iter()
            .any(|p| self.edges.iter().all(|&(a, b)| quotient[p[a]] >> p[b] & 1 == 1))
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

struct PartitionSearch<'a> {
    adj: &'a [u64],
    target: &'a MinorTarget,
    parts: Vec<u64>,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

impl PartitionSearch<'_> {
    fn closure(&self, seed: u64, within: u64) -> u64 {
        let mut reach = seed;
        loop {
            let grown = bits(reach).fold(reach, |r, v| r | (self.adj[v] & within));
            if grown == reach {
                return reach;
            }
            reach = grown;
        }
    }

    fn component_count(&self, mut within: u64) -> usize {
        let mut count = 0;
        while within != 0 {
            let c = self.closure(within & within.wrapping_neg(), within);
            within &= !c;
            count += 1;
        }
        count
    }

    fn neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.adj[v])
    }

    /// Splits `rest` into `k` connected parts, testing each completed partition.
    fn split(&mut self, rest: u64, k: usize) -> bool {
        if k == 1 {
            if self.component_count(rest) != 1 {
                return false;
            }
            self.parts.push(rest);
            let hit = self.evaluate();
            self.parts.pop();
            return hit;
        }
        let root = rest & rest.wrapping_neg();
        let frontier = self.adj[root.trailing_zeros() as usize] & rest;
        self.grow(rest, k, root, frontier, 0)
    }

    // Enumerates connected sets containing the lowest vertex of `rest` by
    // deciding frontier vertices one at a time.
    fn grow(&mut self, rest: u64, k: usize, set: u64, frontier: u64, excluded: u64) -> bool {
        if frontier == 0 {
            let remainder = rest & !set;
            if self.component_count(remainder) > k - 1 {
                return false;
            }
            self.parts.push(set);
            let hit = self.split(remainder, k - 1);
            self.parts.pop();
            return hit;
        }
        let v = frontier & frontier.wrapping_neg();
        let vi = v.trailing_zeros() as usize;
        if (rest & !set & !v).count_ones() as usize >= k - 1 {
            let grown = set | v;
            let f = (frontier | (self.adj[vi] & rest)) & !grown & !excluded;
            if self.grow(rest, k, grown, f, excluded) {
                return true;
            }
        }
        self.grow(rest, k, set, frontier & !v, excluded | v)
    }

    fn evaluate(&self) -> bool {
        let quotient: Vec<u32> = self
            .parts
            .iter()
            .map(|&p| {
                let nb = self.neighborhood(p);
                self.parts
                    .iter()
                    .enumerate()
                    .fold(0u32, |m, (j, &q)| if q != p && nb & q != 0 { m | 1 << j } else { m })
            })
            .collect();
        self.target.embeds(&quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, star, wheel};

    pub(crate) fn cube() -> PlaneGraph {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 0),
            (4, 5), (5, 6), (6, 7), (7, 4),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        let g = Graph::new(8, &edges).unwrap();
        let pts = [(-2.0, -2.0), (2.0, -2.0), (2.0, 2.0), (-2.0, 2.0), (-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)];
        PlaneGraph::from_layout(g, &pts).unwrap()
    }

    fn tree_plane(g: Graph) -> PlaneGraph {
        let rotation = (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect();
        PlaneGraph::new(g, rotation).unwrap()
    }

    #[test]
    fn cube_has_six_quadrilaterals() {
        let faces = cube().faces().unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.degree() == 4 && f.is_simple()));
        assert!(cube().is_spherical().unwrap());
    }

    #[test]
    fn tree_has_one_face_walking_every_edge_twice() {
        for g in [path(5).unwrap(), star(4).unwrap(), path(1).unwrap()] {
            let m = g.edge_count();
            let faces = tree_plane(g).faces().unwrap();
            assert_eq!(faces.len(), 1);
            assert_eq!(faces[0].degree(), 2 * m);
        }
    }

    #[test]
    fn star_walk_visits_hub_three_times() {
        // Hand trace: 1->0, 0->2, 2->0, 0->3, 3->0, 0->1.
        let faces = tree_plane(star(3).unwrap()).faces().unwrap();
        assert_eq!(faces[0].multiplicity(0), 3);
        assert_eq!(faces[0].multiplicities(), BTreeMap::from([(0, 3), (1, 1), (2, 1), (3, 1)]));
        assert!(!faces[0].is_simple());
    }

    #[test]
    fn rotation_must_permute_neighbors() {
        let g = cycle(4).unwrap();
        let bad = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![2, 1]];
        assert!(matches!(PlaneGraph::new(g.clone(), bad), Err(StructureError::RotationInvalid(_))));
        let short = vec![vec![1], vec![0, 2], vec![1, 3], vec![2, 0]];
        assert!(PlaneGraph::new(g.clone(), short).is_err());
        assert!(PlaneGraph::new(g, vec![vec![1, 3]]).is_err());
    }

    #[test]
    fn crossing_drawing_is_not_spherical() {
        // K4 with all vertices on a convex quadrilateral draws both diagonals crossing.
        let g = complete(4).unwrap();
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let pg = PlaneGraph::from_layout(g.clone(), &pts).unwrap();
        assert!(!pg.is_spherical().unwrap());
        let good = PlaneGraph::from_layout(g, &[(0.0, 0.0), (4.0, 0.0), (2.0, 3.0), (2.0, 1.0)]).unwrap();
        assert!(good.is_spherical().unwrap());
        assert_eq!(good.faces().unwrap().len(), 4);
    }

    #[test]
    fn json_roundtrip_keeps_rotation() {
        let pg = cube();
        let back = PlaneGraph::from_json(&pg.to_json()).unwrap();
        assert_eq!(back, pg);
        assert!(PlaneGraph::from_json(&pg.graph().to_json()).is_err());
    }

    #[test]
    fn cycle_length_detection() {
        let c5 = cycle(5).unwrap();
        assert!(has_cycle_len(&c5, 5));
        assert!(!has_cycle_len(&c5, 4));
        assert!(!has_cycle_len(&c5, 2));
        assert_eq!(girth(cube().graph()), Some(4));
        assert_eq!(girth(&path(4).unwrap()), None);
        assert_eq!(girth(&c5), Some(5));
        assert_eq!(cycles_of_length(&complete(4).unwrap(), 4).len(), 3);
        assert_eq!(cycles_of_length(&complete(4).unwrap(), 3).len(), 4);
    }

    #[test]
    fn knets() {
        let c5 = cycle(5).unwrap();
        assert_eq!(find_knet(&c5, 5).unwrap(), None);
        let chorded = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let net = find_knet(&chorded, 5).unwrap().unwrap();
        assert_eq!(net.cycle.len(), 5);
        assert_eq!(net.chord, (0, 2));
        // K4 has only 3- and 4-cycles.
        assert_eq!(find_knet(&complete(4).unwrap(), 5).unwrap(), None);
        assert!(find_knet(&complete(4).unwrap(), 4).unwrap().is_some());
        assert!(find_knet(&c5, 3).is_err());
        assert!(find_knet(&c5, 9).is_err());
    }

    #[test]
    fn two_alternating_cycles() {
        let c = find_2_alternating_cycle(&cycle(4).unwrap()).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(find_2_alternating_cycle(&complete(4).unwrap()), None);
        let k23 = complete_bipartite(2, 3).unwrap();
        let c = find_2_alternating_cycle(&k23).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.iter().skip(1).step_by(2).all(|&u| k23.degree(u) == 2));
        // Odd cycles have no alternating structure.
        assert_eq!(find_2_alternating_cycle(&cycle(5).unwrap()), None);
        let c6 = find_2_alternating_cycle(&cycle(6).unwrap()).unwrap();
        assert_eq!(c6.len(), 6);
    }

    #[test]
    fn light_edges() {
        assert_eq!(find_light_edge(cube().graph(), LightEdgeRule::SumAtMost(13)), Some(0));
        assert_eq!(find_light_edge(&complete(7).unwrap(), LightEdgeRule::SumAtMost(9)), None);
        let w = wheel(6).unwrap();
        // Rim edges sum to 6; spokes sum to 9.
        assert_eq!(find_light_edge(&w, LightEdgeRule::SumAtMost(6)), Some(0));
        assert_eq!(find_light_edge(&w, LightEdgeRule::DegreeThreeNeighborAtMost(5)), Some(0));
        assert_eq!(find_light_edge(&wheel(7).unwrap(), LightEdgeRule::SumAtMost(5)), None);
    }

    #[test]
    fn outerplanar_configurations() {
        assert_eq!(outerplanar_configuration(&path(4).unwrap()), Some(OuterplanarConfig::A));
        assert_eq!(outerplanar_configuration(&cycle(6).unwrap()), Some(OuterplanarConfig::B));
        // Fan: path 0-1-2 with apex 3.
        let fan = Graph::new(4, &[(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(fan.degree(0), 2);
        assert_eq!(fan.degree(1), 3);
        assert_eq!(outerplanar_configuration(&fan), Some(OuterplanarConfig::C));
        // Bowtie: two triangles sharing vertex 0.
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(outerplanar_configuration(&bowtie), Some(OuterplanarConfig::B));
        // Bowtie with each far edge replaced by a triangle fan keeps x of degree 4.
        let d = Graph::new(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (2, 5), (5, 6), (6, 4), (2, 6), (5, 4)],
        )
        .unwrap();
        assert_eq!(d.degree(0), 4);
        assert_eq!(outerplanar_configuration(&d), Some(OuterplanarConfig::D));
        assert_eq!(outerplanar_configuration(&complete(4).unwrap()), None);
    }

    #[test]
    fn minor_examples() {
        assert!(has_minor(&complete(4).unwrap(), MinorId::K4).unwrap());
        assert!(!has_minor(&path(6).unwrap(), MinorId::K4).unwrap());
        assert!(!has_minor(&star(5).unwrap(), MinorId::K4).unwrap());
        assert!(has_minor(&wheel(4).unwrap(), MinorId::K4).unwrap());
        assert!(has_minor(&complete_bipartite(2, 3).unwrap(), MinorId::K23).unwrap());
        assert!(!has_minor(&complete_bipartite(2, 3).unwrap(), MinorId::K2barPlus).unwrap());
        assert!(has_minor(&MinorId::K2barPlus.graph(), MinorId::K23).unwrap());
        // K4 has 4 vertices, too few for either 5-vertex minor.
        assert!(!has_minor(&complete(4).unwrap(), MinorId::K23).unwrap());
        assert!(!has_minor(&cycle(8).unwrap(), MinorId::K4).unwrap());
        // The cube contracts to K4 and contains a subdivided K_{2,3}.
        assert!(has_minor(cube().graph(), MinorId::K4).unwrap());
        assert!(has_minor(cube().graph(), MinorId::K23).unwrap());
        let big = path(15).unwrap();
        assert_eq!(has_minor(&big, MinorId::K4), Err(StructureError::SizeExceeded { n: 15, cap: 14 }));
        assert!(!has_minor_capped(&big, MinorId::K4, 20).unwrap());
    }
}
