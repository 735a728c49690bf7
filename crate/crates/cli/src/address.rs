//! Graph addresses: `family:params` or `file:path`.
//!
//! Plane families (polyhedra, prisms, wheels, fans, cycles, trees, grids,
//! outerplanar samples and their subdivisions and truncations) resolve with an
//! embedding; `complete`, `bipartite`, `connected`, `random` and `edges` are
//! abstract only. A file resolves with an embedding when it carries a rotation.

use std::path::Path;

use gtc_core::catalog;
use gtc_core::derived::{line_graph, total_graph};
use gtc_core::graph::{self, Graph, GraphError, GraphJson};
use gtc_core::structure::{PlaneGraph, StructureError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AddressError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters in `{address}`: {reason}")]
    BadParams { address: String, reason: String },
    #[error("`{0}` has no plane embedding")]
    NotPlane(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Which graph a check runs on: the addressed graph or one derived from it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Derived {
    #[default]
    None,
    Total,
    Line,
}

impl Derived {
    pub fn apply(self, g: &Graph) -> Graph {
        match self {
            Derived::None => g.clone(),
            Derived::Total => total_graph(g).graph,
            Derived::Line => line_graph(g).graph,
        }
    }

    /// `T(name)`, `L(name)` or `name`.
    pub fn describe(self, name: &str) -> String {
        match self {
            Derived::None => name.to_string(),
            Derived::Total => format!("T({name})"),
            Derived::Line => format!("L({name})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Resolved {
    pub graph: Graph,
    pub plane: Option<PlaneGraph>,
}

/// Family name of an address, the part before the first colon.
pub fn family(address: &str) -> &str {
    address.split(':').next().unwrap_or(address)
}

pub fn resolve(address: &str) -> Result<Resolved, AddressError> {
    if let Some(path) = address.strip_prefix("file:") {
        return from_file(Path::new(path));
    }
    if let Some(plane) = resolve_plane_family(address)? {
        return Ok(Resolved { graph: plane.graph().clone(), plane: Some(plane) });
    }
    let graph = resolve_abstract(address)?;
    Ok(Resolved { graph, plane: None })
}

pub fn resolve_graph(address: &str) -> Result<Graph, AddressError> {
    Ok(resolve(address)?.graph)
}

pub fn resolve_plane(address: &str) -> Result<PlaneGraph, AddressError> {
    resolve(address)?.plane.ok_or_else(|| AddressError::NotPlane(address.to_string()))
}

fn from_file(path: &Path) -> Result<Resolved, AddressError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| AddressError::Io { path: shown.clone(), source })?;
    let json: GraphJson = serde_json::from_str(&text).map_err(|source| AddressError::Json { path: shown, source })?;
    let graph = json.to_graph()?;
    let plane = match json.rotation {
        Some(_) => Some(PlaneGraph::from_json(&json)?),
        None => None,
    };
    Ok(Resolved { graph, plane })
}

struct Params<'a> {
    address: &'a str,
    parts: Vec<&'a str>,
}

impl<'a> Params<'a> {
    fn new(address: &'a str) -> Params<'a> {
        Params { address, parts: address.split(':').skip(1).collect() }
    }

    fn bad(&self, reason: impl Into<String>) -> AddressError {
        AddressError::BadParams { address: self.address.to_string(), reason: reason.into() }
    }

    fn count(&self, allowed: std::ops::RangeInclusive<usize>) -> Result<(), AddressError> {
        if allowed.contains(&self.parts.len()) {
            Ok(())
        } else {
            Err(self.bad(format!("expected {}..={} parameters", allowed.start(), allowed.end())))
        }
    }

    fn num<T: std::str::FromStr>(&self, i: usize) -> Result<T, AddressError> {
        let raw = self.parts.get(i).ok_or_else(|| self.bad(format!("missing parameter {}", i + 1)))?;
        raw.parse().map_err(|_| self.bad(format!("`{raw}` is not a number")))
    }

    fn at_least(&self, i: usize, min: usize) -> Result<usize, AddressError> {
        let v: usize = self.num(i)?;
        if v < min {
            return Err(self.bad(format!("parameter {} must be at least {min}", i + 1)));
        }
        Ok(v)
    }

    /// Everything after the family, for nested addresses.
    fn rest(&self) -> &'a str {
        self.address.split_once(':').map_or("", |(_, r)| r)
    }
}

fn resolve_plane_family(address: &str) -> Result<Option<PlaneGraph>, AddressError> {
    let p = Params::new(address);
    let fixed = |pg: PlaneGraph| -> Result<Option<PlaneGraph>, AddressError> {
        p.count(0..=0)?;
        Ok(Some(pg))
    };
    let pg = match family(address) {
        "tetrahedron" => return fixed(catalog::tetrahedron()),
        "octahedron" => return fixed(catalog::octahedron()),
        "cube" => return fixed(catalog::cube()),
        "dodecahedron" => return fixed(catalog::dodecahedron()),
        "icosahedron" => return fixed(catalog::icosahedron()),
        "prism" => {
            p.count(1..=1)?;
            catalog::prism(p.at_least(0, 3)?)
        }
        "antiprism" => {
            p.count(1..=1)?;
            catalog::antiprism(p.at_least(0, 3)?)
        }
        "wheel" => {
            p.count(1..=1)?;
            catalog::wheel(p.at_least(0, 3)?)
        }
        "fan" => {
            p.count(1..=1)?;
            catalog::fan(p.at_least(0, 2)?)
        }
        "cycle" => {
            p.count(1..=1)?;
            catalog::cycle(p.at_least(0, 3)?)
        }
        "k2n" => {
            p.count(1..=1)?;
            catalog::k2n(p.at_least(0, 1)?)
        }
        "theta" => {
            p.count(1..=1)?;
            catalog::theta(p.at_least(0, 1)?)
        }
        "friendship" => {
            p.count(1..=1)?;
            catalog::friendship(p.at_least(0, 1)?)
        }
        "grid" => {
            p.count(1..=1)?;
            let (r, c) = p.parts[0].split_once('x').ok_or_else(|| p.bad("expected RxC"))?;
            let parse = |s: &str| s.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| p.bad("grid sides must be positive"));
            catalog::grid(parse(r)?, parse(c)?)
        }
        "path" => {
            p.count(1..=1)?;
            catalog::forest(graph::path(p.at_least(0, 1)?)?)?
        }
        "star" => {
            p.count(1..=1)?;
            catalog::forest(graph::star(p.at_least(0, 1)?)?)?
        }
        "tree" => {
            p.count(2..=3)?;
            let n = p.at_least(0, 1)?;
            let seed: u64 = p.num(1)?;
            let max_degree = if p.parts.len() == 3 { p.num(2)? } else { 5 };
            catalog::forest(graph::random_tree(n, seed, max_degree)?)?
        }
        "outerplanar" => {
            p.count(2..=3)?;
            let n = p.at_least(0, 3)?;
            let seed: u64 = p.num(1)?;
            let keep: f64 = if p.parts.len() == 3 { p.num(2)? } else { 0.8 };
            if !(0.0..=1.0).contains(&keep) {
                return Err(p.bad("keep probability must lie in [0, 1]"));
            }
            catalog::random_outerplanar(n, seed, keep)
        }
        "subdivided" => catalog::subdivide(&resolve_plane(p.rest())?),
        "truncated" => catalog::truncate(&resolve_plane(p.rest())?)?,
        _ => return Ok(None),
    };
    Ok(Some(pg))
}

fn resolve_abstract(address: &str) -> Result<Graph, AddressError> {
    let p = Params::new(address);
    let g = match family(address) {
        "complete" => {
            p.count(1..=1)?;
            graph::complete(p.at_least(0, 1)?)?
        }
        "bipartite" => {
            p.count(2..=2)?;
            graph::complete_bipartite(p.at_least(0, 1)?, p.at_least(1, 1)?)?
        }
        "connected" => {
            p.count(2..=2)?;
            let n = p.at_least(0, 1)?;
            if n > 6 {
                return Err(p.bad("connected graphs are enumerated up to 6 vertices"));
            }
            let i: usize = p.num(1)?;
            graph::connected_graphs(n).into_iter().nth(i).ok_or_else(|| p.bad("index past the enumeration"))?
        }
        "random" => {
            p.count(3..=3)?;
            graph::random_graph(p.num(0)?, p.num(1)?, p.num(2)?)?
        }
        "edges" => edge_list(&p)?,
        other => return Err(AddressError::UnknownFamily(other.to_string())),
    };
    Ok(g)
}

/// `edges:N:u-v,u-v,...`, with an empty list for an edgeless graph.
fn edge_list(p: &Params) -> Result<Graph, AddressError> {
    p.count(1..=2)?;
    let n: usize = p.num(0)?;
    let mut edges = Vec::new();
    for pair in p.parts.get(1).copied().unwrap_or("").split(',').filter(|s| !s.is_empty()) {
        let (u, v) = pair.split_once('-').ok_or_else(|| p.bad(format!("`{pair}` is not u-v")))?;
        let parse = |s: &str| s.parse::<usize>().map_err(|_| p.bad(format!("`{s}` is not a vertex")));
        edges.push((parse(u)?, parse(v)?));
    }
    Ok(Graph::new(n, &edges)?)
}

/// The `edges:` address of a graph.
pub fn edges_address(g: &Graph) -> String {
    let list: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("edges:{}:{}", g.vertex_count(), list.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names_resolve_to_the_catalog_graphs() {
        for e in catalog::plane_catalog() {
            let r = resolve(&e.name).unwrap();
            assert_eq!(&r.graph, e.plane.graph(), "{}", e.name);
            assert!(r.plane.is_some(), "{}", e.name);
        }
        for (name, g) in catalog::abstract_catalog() {
            assert_eq!(resolve_graph(&name).unwrap(), g, "{name}");
        }
    }

    #[test]
    fn abstract_families_match_generators() {
        assert_eq!(resolve_graph("cycle:5").unwrap(), graph::cycle(5).unwrap());
        assert_eq!(resolve_graph("wheel:6").unwrap(), graph::wheel(6).unwrap());
        assert_eq!(resolve_graph("path:4").unwrap(), graph::path(4).unwrap());
        assert_eq!(resolve_graph("tree:8:3:4").unwrap(), graph::random_tree(8, 3, 4).unwrap());
        let g = graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(resolve_graph(&edges_address(&g)).unwrap(), g);
        assert_eq!(resolve_graph("edges:3:").unwrap().edge_count(), 0);
        assert_eq!(resolve_graph("random:9:14:5").unwrap(), graph::random_graph(9, 14, 5).unwrap());
    }

    #[test]
    fn nested_and_bad_addresses() {
        assert_eq!(resolve_graph("subdivided:wheel:6").unwrap().vertex_count(), 7 + 12);
        assert_eq!(resolve_graph("truncated:cube").unwrap().vertex_count(), 24);
        assert!(matches!(resolve("nosuch:3"), Err(AddressError::UnknownFamily(_))));
        assert!(matches!(resolve("cycle:2"), Err(AddressError::BadParams { .. })));
        assert!(matches!(resolve("cycle:x"), Err(AddressError::BadParams { .. })));
        assert!(matches!(resolve("cube:3"), Err(AddressError::BadParams { .. })));
        assert!(matches!(resolve_plane("complete:4"), Err(AddressError::NotPlane(_))));
        assert!(matches!(resolve("file:/no/such/file.json"), Err(AddressError::Io { .. })));
    }
}
