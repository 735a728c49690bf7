//! Named plane graphs with embeddings, and the abstract graph catalog.
//!
//! Embeddings come from straight-line layouts, or combinatorially from
//! another embedding (subdivision, truncation).

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{self, Graph};
use crate::structure::{PlaneGraph, StructureError};

#[derive(Clone, Debug)]
pub struct PlaneEntry {
    pub name: String,
    pub plane: PlaneGraph,
    /// Known to be outerplanar by construction.
    pub outerplanar: bool,
}

fn ring(n: usize, radius: f64, phase: f64) -> impl Iterator<Item = (f64, f64)> {
    (0..n).map(move |i| {
        let a = phase + TAU * i as f64 / n as f64;
        (radius * a.cos(), radius * a.sin())
    })
}

fn embed(n: usize, edges: &[(usize, usize)], pts: &[(f64, f64)]) -> PlaneGraph {
    let g = Graph::new(n, edges).expect("catalog edges are simple");
    PlaneGraph::from_layout(g, pts).expect("catalog layouts are valid")
}

fn cycle_edges(start: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (start + i, start + (i + 1) % n))
}

pub fn tetrahedron() -> PlaneGraph {
    let pts: Vec<_> = ring(3, 2.0, 0.0).chain([(0.0, 0.0)]).collect();
    embed(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)], &pts)
}

pub fn octahedron() -> PlaneGraph {
    // Outer triangle 0..3, inner triangle 3..6 turned by half a step.
    let pts: Vec<_> = ring(3, 3.0, TAU / 4.0).chain(ring(3, 1.0, TAU / 4.0 + TAU / 6.0)).collect();
    let mut edges: Vec<_> = cycle_edges(0, 3).chain(cycle_edges(3, 3)).collect();
    for i in 0..3 {
        edges.push((i, 3 + i));
        edges.push((i, 3 + (i + 2) % 3));
    }
    embed(6, &edges, &pts)
}

pub fn cube() -> PlaneGraph {
    prism(4)
}

/// Outer pentagon `0..5`, a middle 10-cycle `5..15`, inner pentagon `15..20`.
pub fn dodecahedron() -> PlaneGraph {
    let step = TAU / 10.0;
    let pts: Vec<_> = ring(5, 4.0, 0.0).chain(ring(10, 2.5, 0.0)).chain(ring(5, 1.0, step)).collect();
    let mut edges: Vec<_> = cycle_edges(0, 5).chain(cycle_edges(5, 10)).chain(cycle_edges(15, 5)).collect();
    for i in 0..5 {
        edges.push((i, 5 + 2 * i));
        edges.push((15 + i, 5 + 2 * i + 1));
    }
    embed(20, &edges, &pts)
}

/// Outer triangle `0..3`, hexagon `3..9`, inner triangle `9..12`.
pub fn icosahedron() -> PlaneGraph {
    let base = TAU / 4.0;
    let pts: Vec<_> = ring(3, 6.0, base).chain(ring(6, 2.0, base)).chain(ring(3, 0.8, base + TAU / 6.0)).collect();
    let mut edges: Vec<_> = cycle_edges(0, 3).chain(cycle_edges(3, 6)).chain(cycle_edges(9, 3)).collect();
    for k in 0..3 {
        for j in [2 * k + 5, 2 * k, 2 * k + 1] {
            edges.push((k, 3 + j % 6));
        }
        for j in [2 * k, 2 * k + 1, 2 * k + 2] {
            edges.push((9 + k, 3 + j % 6));
        }
    }
    embed(12, &edges, &pts)
}

/// Outer cycle `0..n`, inner cycle `n..2n`, rung `i -- n+i`.
pub fn prism(n: usize) -> PlaneGraph {
    let pts: Vec<_> = ring(n, 2.0, 0.0).chain(ring(n, 1.0, 0.0)).collect();
    let mut edges: Vec<_> = cycle_edges(0, n).chain(cycle_edges(n, n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    embed(2 * n, &edges, &pts)
}

pub fn antiprism(n: usize) -> PlaneGraph {
    let pts: Vec<_> = ring(n, 3.0, 0.0).chain(ring(n, 1.0, TAU / (2 * n) as f64)).collect();
    let mut edges: Vec<_> = cycle_edges(0, n).chain(cycle_edges(n, n)).collect();
    for i in 0..n {
        edges.push((i, n + i));
        edges.push(((i + 1) % n, n + i));
    }
    embed(2 * n, &edges, &pts)
}

/// Same numbering as [`graph::wheel`].
pub fn wheel(n: usize) -> PlaneGraph {
    let pts: Vec<_> = ring(n, 1.0, 0.0).chain([(0.0, 0.0)]).collect();
    PlaneGraph::from_layout(graph::wheel(n).expect("n >= 3"), &pts).expect("wheel layout")
}

/// Path `0..n` plus an apex `n` adjacent to every path vertex.
pub fn fan(n: usize) -> PlaneGraph {
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    let pts: Vec<_> = (0..n).map(|i| (i as f64, 0.0)).chain([((n - 1) as f64 / 2.0, 1.0)]).collect();
    embed(n + 1, &edges, &pts)
}

pub fn cycle(n: usize) -> PlaneGraph {
    let pts: Vec<_> = ring(n, 1.0, 0.0).collect();
    PlaneGraph::from_layout(graph::cycle(n).expect("n >= 3"), &pts).expect("cycle layout")
}

/// Any rotation of a forest is planar.
pub fn forest(g: Graph) -> Result<PlaneGraph, StructureError> {
    let rotation = (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect();
    PlaneGraph::new(g, rotation)
}

/// `K_{2,n}` with poles `0, 1`.
pub fn k2n(n: usize) -> PlaneGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((0, 2 + i));
        edges.push((1, 2 + i));
    }
    let pts: Vec<_> =
        [(-1.0, 0.0), (1.0, 0.0)].into_iter().chain((0..n).map(|i| (0.0, i as f64 - (n - 1) as f64 / 2.0))).collect();
    embed(n + 2, &edges, &pts)
}

pub fn grid(rows: usize, cols: usize) -> PlaneGraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let pts: Vec<_> = (0..rows * cols).map(|v| ((v % cols) as f64, (v / cols) as f64)).collect();
    embed(rows * cols, &edges, &pts)
}

/// Same numbering as [`graph::theta`]; the long path is drawn below.
pub fn theta(m: usize) -> PlaneGraph {
    let g = graph::theta(m).expect("m >= 1");
    let inner = 2 * m - 1;
    let mut pts = vec![(-1.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, 2.0)];
    pts.extend((0..inner).map(|i| (-1.0 + 2.0 * (i + 1) as f64 / (inner + 1) as f64, -1.0)));
    PlaneGraph::from_layout(g, &pts).expect("theta layout")
}

/// `t` triangles sharing the hub `0`.
pub fn friendship(t: usize) -> PlaneGraph {
    let mut edges = Vec::new();
    let mut pts = vec![(0.0, 0.0)];
    for i in 0..t {
        let (a, b) = (1 + 2 * i, 2 + 2 * i);
        edges.extend([(0, a), (0, b), (a, b)]);
        let mid = TAU * i as f64 / t as f64;
        let half = TAU / (4 * t) as f64;
        pts.push(((mid - half).cos(), (mid - half).sin()));
        pts.push(((mid + half).cos(), (mid + half).sin()));
    }
    embed(2 * t + 1, &edges, &pts)
}

/// Replaces every edge by a path of length two. Edge `e` gets vertex `n + e`.
pub fn subdivide(pg: &PlaneGraph) -> PlaneGraph {
    let g = pg.graph();
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    let mut rotation: Vec<Vec<usize>> = (0..n)
        .map(|v| pg.rotation(v).iter().map(|&w| n + g.edge_between(v, w).expect("adjacent")).collect())
        .collect();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((a, n + e));
        edges.push((n + e, b));
        rotation.push(vec![a, b]);
    }
    let sub = Graph::new(n + g.edge_count(), &edges).expect("subdivision is simple");
    PlaneGraph::new(sub, rotation).expect("subdivision keeps a valid rotation")
}

/// Cuts off every vertex: vertex `v` of degree `d` becomes a `d`-cycle, one
/// new vertex per dart leaving `v`. Needs minimum degree 3.
pub fn truncate(pg: &PlaneGraph) -> Result<PlaneGraph, StructureError> {
    let g = pg.graph();
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) < 3) {
        return Err(StructureError::RotationInvalid(format!("vertex {v} has degree below 3")));
    }
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let id = |v: usize, w: usize| {
        offset[v] + g.adjacency(v).binary_search_by_key(&w, |&(x, _)| x).expect("adjacent")
    };
    let mut edges = Vec::new();
    let mut rotation = vec![Vec::new(); offset[n]];
    for &(a, b) in g.edges() {
        edges.push((id(a, b), id(b, a)));
    }
    for v in 0..n {
        let rot = pg.rotation(v);
        let d = rot.len();
        for j in 0..d {
            let (w, next, prev) = (rot[j], rot[(j + 1) % d], rot[(j + d - 1) % d]);
            edges.push((id(v, w), id(v, next)));
            rotation[id(v, w)] = vec![id(w, v), id(v, next), id(v, prev)];
        }
    }
    PlaneGraph::new(Graph::new(offset[n], &edges)?, rotation)
}

/// A seeded random connected outerplanar graph on `n >= 3` vertices: a random
/// triangulation of the convex `n`-gon, each edge kept with probability
/// `keep`, redrawn until connected.
pub fn random_outerplanar(n: usize, seed: u64, keep: f64) -> PlaneGraph {
    fn split(i: usize, j: usize, rng: &mut ChaCha8Rng, edges: &mut Vec<(usize, usize)>) {
        if j - i < 2 {
            return;
        }
        let k = rng.gen_range(i + 1..j);
        if k - i >= 2 {
            edges.push((i, k));
        }
        if j - k >= 2 {
            edges.push((k, j));
        }
        split(i, k, rng, edges);
        split(k, j, rng, edges);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<_> = ring(n, 1.0, 0.0).collect();
    let mut full: Vec<_> = cycle_edges(0, n).collect();
    split(0, n - 1, &mut rng, &mut full);
    loop {
        let kept: Vec<_> = full.iter().copied().filter(|_| rng.gen_bool(keep)).collect();
        let g = Graph::new(n, &kept).expect("triangulation edges are simple");
        if g.is_connected() {
            return PlaneGraph::from_layout(g, &pts).expect("convex position layout");
        }
    }
}

fn entry(name: impl Into<String>, plane: PlaneGraph, outerplanar: bool) -> PlaneEntry {
    PlaneEntry { name: name.into(), plane, outerplanar }
}

/// The plane catalog: polyhedra, prisms, wheels, fans, cycles, trees,
/// subdivisions, truncations and random outerplanar graphs.
pub fn plane_catalog() -> Vec<PlaneEntry> {
    let mut out = vec![
        entry("tetrahedron", tetrahedron(), false),
        entry("octahedron", octahedron(), false),
        entry("cube", cube(), false),
        entry("dodecahedron", dodecahedron(), false),
        entry("icosahedron", icosahedron(), false),
    ];
    for n in [3, 5, 6, 7, 8] {
        out.push(entry(format!("prism:{n}"), prism(n), false));
    }
    for n in 3..=6 {
        out.push(entry(format!("antiprism:{n}"), antiprism(n), false));
    }
    for n in 4..=12 {
        out.push(entry(format!("wheel:{n}"), wheel(n), false));
    }
    for n in 3..=10 {
        out.push(entry(format!("fan:{n}"), fan(n), true));
    }
    for n in 3..=9 {
        out.push(entry(format!("cycle:{n}"), cycle(n), true));
    }
    for n in [2, 3, 5, 8] {
        out.push(entry(format!("path:{n}"), forest(graph::path(n).expect("n >= 1")).expect("tree"), true));
    }
    for seed in 0..4 {
        let t = graph::random_tree(10, seed, 5).expect("valid tree parameters");
        out.push(entry(format!("tree:10:{seed}"), forest(t).expect("tree"), true));
    }
    for n in 2..=6 {
        out.push(entry(format!("k2n:{n}"), k2n(n), n == 2));
    }
    for (r, c) in [(2, 5), (3, 3), (3, 4), (4, 4)] {
        out.push(entry(format!("grid:{r}x{c}"), grid(r, c), r == 2));
    }
    for m in 1..=3 {
        out.push(entry(format!("theta:{m}"), theta(m), false));
    }
    for t in 2..=5 {
        out.push(entry(format!("friendship:{t}"), friendship(t), true));
    }
    out.push(entry("subdivided:tetrahedron", subdivide(&tetrahedron()), false));
    out.push(entry("subdivided:cube", subdivide(&cube()), false));
    out.push(entry("subdivided:dodecahedron", subdivide(&dodecahedron()), false));
    out.push(entry("subdivided:wheel:6", subdivide(&wheel(6)), false));
    for (name, base) in [
        ("tetrahedron", tetrahedron()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("dodecahedron", dodecahedron()),
        ("icosahedron", icosahedron()),
    ] {
        out.push(entry(format!("truncated:{name}"), truncate(&base).expect("polyhedra have degree >= 3"), false));
    }
    for n in [6, 8, 10, 12] {
        for seed in 0..3 {
            out.push(entry(format!("outerplanar:{n}:{seed}"), random_outerplanar(n, seed, 0.8), true));
        }
    }
    out
}

pub fn outerplanar_catalog() -> Vec<PlaneEntry> {
    plane_catalog().into_iter().filter(|e| e.outerplanar).collect()
}

/// Connected abstract graphs: all connected graphs on 2 to 6 vertices, the
/// plane catalog, and complete and complete bipartite graphs.
pub fn abstract_catalog() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for (i, g) in graph::connected_graphs(n).into_iter().enumerate() {
            out.push((format!("connected:{n}:{i}"), g));
        }
    }
    out.extend(plane_catalog().into_iter().map(|e| (e.name, e.plane.graph().clone())));
    for n in 5..=8 {
        out.push((format!("complete:{n}"), graph::complete(n).expect("n >= 1")));
    }
    for (a, b) in [(3, 3), (3, 4), (2, 7), (4, 5)] {
        out.push((format!("bipartite:{a}:{b}"), graph::complete_bipartite(a, b).expect("non-empty parts")));
    }
    out
}
