//! Discharging audits on plane graphs with exact rational charges.
//!
//! Two schemes are supported: the total scheme with `w(v) = 2deg(v) - 6` and
//! `w(f) = deg(f) - 6`, and the four scheme with `w(x) = deg(x) - 4`. On a
//! connected plane graph they sum to `-12` and `-8`.
//!
//! An audit evaluates the reducibility properties of a minimal counterexample,
//! applies the transfer rules, and records every transfer. Independently of
//! the global properties, each element whose local neighborhood satisfies the
//! properties is checked for a nonnegative final charge.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::structure::{has_cycle_len, FaceWalk, PlaneGraph, StructureError};

pub type Q = Ratio<i64>;

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

fn int(n: usize) -> Q {
    Ratio::from_integer(n as i64)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DischargeError {
    #[error("charge sums need a connected plane graph")]
    Disconnected,
    #[error("input contains a {0}-cycle")]
    ForbiddenCycle(usize),
    #[error("k = {k} is below the minimum {min}")]
    KTooSmall { k: usize, min: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChargeScheme {
    Total,
    Four,
}

impl ChargeScheme {
    pub fn vertex_charge(self, deg: usize) -> Q {
        match self {
            ChargeScheme::Total => int(2 * deg) - 6,
            ChargeScheme::Four => int(deg) - 4,
        }
    }

    pub fn face_charge(self, deg: usize) -> Q {
        match self {
            ChargeScheme::Total => int(deg) - 6,
            ChargeScheme::Four => int(deg) - 4,
        }
    }

    /// The total over any connected plane graph.
    pub fn euler_constant(self) -> Q {
        match self {
            ChargeScheme::Total => int(0) - 12,
            ChargeScheme::Four => int(0) - 8,
        }
    }
}

pub fn charge_sum(pg: &PlaneGraph, scheme: ChargeScheme) -> Result<Q, DischargeError> {
    let g = pg.graph();
    if !g.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    let vertices: Q = (0..g.vertex_count()).map(|v| scheme.vertex_charge(g.degree(v))).sum();
    let faces: Q = pg.faces()?.iter().map(|f| scheme.face_charge(f.degree())).sum();
    Ok(vertices + faces)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// 3-face takes 3/2 from each incident vertex of degree at least 5.
    TriangleFromBig,
    /// 3-face takes 3/4 from each incident 4-vertex.
    TriangleFromFour,
    /// 5-face takes 1/3 from each incident vertex of degree at least 5.
    PentagonFromBig,
    /// 5-face takes 1/4 from each incident 4-vertex.
    PentagonFromFour,
    /// An r-face with r >= 6 gives 1 - 4/r to each incident vertex per visit.
    LargeFaceToVertex,
    /// A 3-vertex on a 3-face takes 1/3 from each neighbor off that face.
    PendantThreeVertex,
    /// 3-face takes 1/2 from each incident 5-vertex.
    TriangleFromFive,
    /// 3-face takes 1/3 from each incident 4-vertex.
    TriangleFromFourThird,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transfer {
    pub rule: Rule,
    pub source: Element,
    pub sink: Element,
    pub amount: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub initial: Vec<(Element, Q)>,
    pub transfers: Vec<Transfer>,
    pub final_charges: Vec<(Element, Q)>,
}

impl ChargeLedger {
    fn new(initial: Vec<(Element, Q)>) -> ChargeLedger {
        ChargeLedger { final_charges: initial.clone(), initial, transfers: Vec::new() }
    }

    fn slot(&self, x: Element, n_vertices: usize) -> usize {
        match x {
            Element::Vertex(v) => v,
            Element::Face(f) => n_vertices + f,
        }
    }

    fn apply(&mut self, rule: Rule, source: Element, sink: Element, amount: Q, n_vertices: usize) {
        let (s, t) = (self.slot(source, n_vertices), self.slot(sink, n_vertices));
        self.final_charges[s].1 -= amount;
        self.final_charges[t].1 += amount;
        self.transfers.push(Transfer { rule, source, sink, amount });
    }

    pub fn total_initial(&self) -> Q {
        self.initial.iter().map(|x| x.1).sum()
    }

    pub fn total_final(&self) -> Q {
        self.final_charges.iter().map(|x| x.1).sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.total_initial() == self.total_final()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub id: u8,
    pub statement: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum AuditVerdict {
    /// At least one property fails, so the graph is no counterexample and
    /// nothing is claimed.
    PropertiesFail { failing: Vec<u8> },
    /// All properties hold and every final charge is nonnegative, which
    /// contradicts the negative total.
    Contradiction,
    /// All properties hold but some element ends negative.
    BoundViolated { elements: Vec<Element> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditKind {
    NoFourCycle,
    NoFourFiveCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub kind: AuditKind,
    pub k: usize,
    pub scheme: ChargeScheme,
    pub properties: Vec<PropertyCheck>,
    pub ledger: ChargeLedger,
    /// Elements whose local neighborhood satisfies the properties.
    pub local_checks: usize,
    /// Locally certified elements that still end with negative charge.
    pub local_violations: Vec<Element>,
    pub verdict: AuditVerdict,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn failing_properties(&self) -> Vec<u8> {
        self.properties.iter().filter(|p| !p.holds).map(|p| p.id).collect()
    }
}

/// Degrees, faces and corner incidences shared by both audits.
struct Layout<'a> {
    pg: &'a PlaneGraph,
    deg: Vec<usize>,
    faces: Vec<FaceWalk>,
    // corners[v]: index of the face at each visit of v, with repeats.
    corners: Vec<Vec<usize>>,
}

impl<'a> Layout<'a> {
    fn new(pg: &'a PlaneGraph) -> Result<Layout<'a>, DischargeError> {
        let g = pg.graph();
        let faces = pg.faces()?;
        let mut corners = vec![Vec::new(); g.vertex_count()];
        for (i, f) in faces.iter().enumerate() {
            for &(u, _) in &f.darts {
                corners[u].push(i);
            }
        }
        Ok(Layout { pg, deg: (0..g.vertex_count()).map(|v| g.degree(v)).collect(), faces, corners })
    }

    fn triangle_corners(&self, v: usize) -> usize {
        self.corners[v].iter().filter(|&&f| self.faces[f].degree() == 3).count()
    }

    fn initial(&self, scheme: ChargeScheme) -> ChargeLedger {
        let mut init: Vec<(Element, Q)> =
            self.deg.iter().enumerate().map(|(v, &d)| (Element::Vertex(v), scheme.vertex_charge(d))).collect();
        init.extend(self.faces.iter().enumerate().map(|(i, f)| (Element::Face(i), scheme.face_charge(f.degree()))));
        ChargeLedger::new(init)
    }

    fn final_charge(&self, ledger: &ChargeLedger, x: Element) -> Q {
        ledger.final_charges[ledger.slot(x, self.deg.len())].1
    }

    fn connected(&self) -> PropertyCheck {
        let c = self.pg.graph().component_count();
        PropertyCheck {
            id: 1,
            statement: "G is connected".into(),
            holds: c == 1,
            counterexample: (c != 1).then(|| format!("{c} components")),
        }
    }

    fn triangle_bound(&self) -> PropertyCheck {
        let bad = (0..self.deg.len()).find(|&v| self.triangle_corners(v) > self.deg[v] / 2);
        PropertyCheck {
            id: 2,
            statement: "every vertex v lies on at most floor(deg(v)/2) 3-faces".into(),
            holds: bad.is_none(),
            counterexample: bad.map(|v| {
                format!("vertex {v} of degree {} lies on {} 3-faces", self.deg[v], self.triangle_corners(v))
            }),
        }
    }

    fn min_degree(&self) -> PropertyCheck {
        let bad = (0..self.deg.len()).find(|&v| self.deg[v] < 3);
        PropertyCheck {
            id: 3,
            statement: "minimum degree at least 3".into(),
            holds: bad.is_none(),
            counterexample: bad.map(|v| format!("vertex {v} has degree {}", self.deg[v])),
        }
    }

    fn max_degree(&self, bound: usize) -> PropertyCheck {
        let bad = (0..self.deg.len()).find(|&v| self.deg[v] > bound);
        PropertyCheck {
            id: 0,
            statement: format!("maximum degree at most {bound}"),
            holds: bad.is_none(),
            counterexample: bad.map(|v| format!("vertex {v} has degree {}", self.deg[v])),
        }
    }

    fn edge_property(&self, statement: String, light: impl Fn(usize, usize) -> bool) -> PropertyCheck {
        let g = self.pg.graph();
        let bad = g.edges().iter().find(|&&(u, v)| light(self.deg[u], self.deg[v]));
        PropertyCheck {
            id: 4,
            statement,
            holds: bad.is_none(),
            counterexample: bad.map(|&(u, v)| format!("edge {u}-{v} with degrees {} and {}", self.deg[u], self.deg[v])),
        }
    }

    /// Final check shared by both audits.
    #[allow(clippy::too_many_arguments)]
    fn conclude(
        &self,
        kind: AuditKind,
        k: usize,
        scheme: ChargeScheme,
        properties: Vec<PropertyCheck>,
        ledger: ChargeLedger,
        certified: Vec<Element>,
        notes: Vec<String>,
    ) -> AuditReport {
        let local_violations: Vec<Element> =
            certified.iter().copied().filter(|&x| self.final_charge(&ledger, x) < int(0)).collect();
        let failing: Vec<u8> = properties.iter().filter(|p| !p.holds).map(|p| p.id).collect();
        let verdict = if !failing.is_empty() {
            AuditVerdict::PropertiesFail { failing }
        } else {
            let negative: Vec<Element> =
                ledger.final_charges.iter().filter(|(_, c)| *c < int(0)).map(|&(x, _)| x).collect();
            if negative.is_empty() {
                AuditVerdict::Contradiction
            } else {
                AuditVerdict::BoundViolated { elements: negative }
            }
        };
        AuditReport {
            kind,
            k,
            scheme,
            properties,
            ledger,
            local_checks: certified.len(),
            local_violations,
            verdict,
            notes,
        }
    }
}

fn no4_light(k: usize) -> impl Fn(usize, usize) -> bool {
    move |a, b| 2 * a.min(b) <= k && a + b <= k + 2
}

fn no45_light(a: usize, b: usize) -> bool {
    a.min(b) == 3 && a + b <= 7
}

/// Audit for plane graphs without 4-cycles, with `k >= 6`.
pub fn audit_no4cycle(pg: &PlaneGraph, k: usize) -> Result<AuditReport, DischargeError> {
    if k < 6 {
        return Err(DischargeError::KTooSmall { k, min: 6 });
    }
    let g = pg.graph();
    if has_cycle_len(g, 4) {
        return Err(DischargeError::ForbiddenCycle(4));
    }
    let lay = Layout::new(pg)?;
    let n = g.vertex_count();
    let light = no4_light(k);
    let all_four = lay.faces.iter().position(|f| f.degree() == 3 && f.vertices().iter().all(|&v| lay.deg[v] == 4));
    let properties = vec![
        lay.max_degree(k),
        lay.connected(),
        lay.triangle_bound(),
        lay.min_degree(),
        lay.edge_property(
            format!("no edge uv with min(deg) <= {k}/2 and deg(u) + deg(v) <= {}", k + 2),
            &light,
        ),
        PropertyCheck {
            id: 5,
            statement: "no 3-face with all three vertices of degree 4".into(),
            holds: all_four.is_none(),
            counterexample: all_four.map(|f| format!("face {f} on {:?}", lay.faces[f].vertices())),
        },
    ];

    let scheme = ChargeScheme::Total;
    let mut ledger = lay.initial(scheme);
    for (i, f) in lay.faces.iter().enumerate() {
        for v in f.vertices() {
            let d = lay.deg[v];
            let give = match (f.degree(), d) {
                (3, 5..) => Some((Rule::TriangleFromBig, q(3, 2))),
                (3, 4) => Some((Rule::TriangleFromFour, q(3, 4))),
                (5, 5..) => Some((Rule::PentagonFromBig, q(1, 3))),
                (5, 4) => Some((Rule::PentagonFromFour, q(1, 4))),
                _ => None,
            };
            if let Some((rule, amount)) = give {
                ledger.apply(rule, Element::Vertex(v), Element::Face(i), amount, n);
            }
        }
    }

    let mut certified = Vec::new();
    for v in 0..n {
        if lay.deg[v] >= 3 && lay.triangle_corners(v) <= lay.deg[v] / 2 {
            certified.push(Element::Vertex(v));
        }
    }
    for (i, f) in lay.faces.iter().enumerate() {
        let verts = f.vertices();
        let ok = f.degree() > 0
            && verts.iter().all(|&v| lay.deg[v] >= 3)
            && f.darts.iter().all(|&(u, v)| !light(lay.deg[u], lay.deg[v]))
            && !(f.degree() == 3 && verts.iter().all(|&v| lay.deg[v] == 4));
        if ok {
            certified.push(Element::Face(i));
        }
    }
    let notes = vec!["the 5-vertex case cites \"(b)\"; it is read as property (2)".to_string()];
    Ok(lay.conclude(AuditKind::NoFourCycle, k, scheme, properties, ledger, certified, notes))
}

/// Audit for plane graphs without 4- and 5-cycles, with `k >= 5`. The
/// argument covers maximum degree 5, so property 0 asks for it.
pub fn audit_no45cycle(pg: &PlaneGraph, k: usize) -> Result<AuditReport, DischargeError> {
    if k < 5 {
        return Err(DischargeError::KTooSmall { k, min: 5 });
    }
    let g = pg.graph();
    for len in [4, 5] {
        if has_cycle_len(g, len) {
            return Err(DischargeError::ForbiddenCycle(len));
        }
    }
    let lay = Layout::new(pg)?;
    let n = g.vertex_count();
    let properties = vec![
        lay.max_degree(5),
        lay.connected(),
        lay.triangle_bound(),
        lay.min_degree(),
        lay.edge_property("no edge uv with min(deg) = 3 and deg(u) + deg(v) <= 7".into(), no45_light),
    ];

    let scheme = ChargeScheme::Four;
    let mut ledger = lay.initial(scheme);
    for (i, f) in lay.faces.iter().enumerate() {
        let r = f.degree();
        if r >= 6 {
            let amount = int(1) - q(4, r as i64);
            for v in f.vertices() {
                ledger.apply(Rule::LargeFaceToVertex, Element::Face(i), Element::Vertex(v), amount, n);
            }
        }
    }
    for f in &lay.faces {
        if f.degree() != 3 {
            continue;
        }
        let on_face = f.vertices();
        for &v in &on_face {
            if lay.deg[v] == 3 {
                for u in g.neighbors(v).filter(|u| !on_face.contains(u)) {
                    ledger.apply(Rule::PendantThreeVertex, Element::Vertex(u), Element::Vertex(v), q(1, 3), n);
                }
            }
        }
    }
    for (i, f) in lay.faces.iter().enumerate() {
        if f.degree() != 3 {
            continue;
        }
        for v in f.vertices() {
            let give = match lay.deg[v] {
                5 => Some((Rule::TriangleFromFive, q(1, 2))),
                4 => Some((Rule::TriangleFromFourThird, q(1, 3))),
                _ => None,
            };
            if let Some((rule, amount)) = give {
                ledger.apply(rule, Element::Vertex(v), Element::Face(i), amount, n);
            }
        }
    }

    let in_range = |v: usize| (3..=5).contains(&lay.deg[v]);
    let mut certified = Vec::new();
    for v in 0..n {
        let ok = in_range(v)
            && lay.triangle_corners(v) <= lay.deg[v] / 2
            && g.neighbors(v).all(|w| !no45_light(lay.deg[v], lay.deg[w]))
            && lay.corners[v].iter().all(|&f| !matches!(lay.faces[f].degree(), 4 | 5));
        if ok {
            certified.push(Element::Vertex(v));
        }
    }
    for (i, f) in lay.faces.iter().enumerate() {
        let ok = f.degree() >= 6
            || (f.degree() > 0
                && f.vertices().iter().all(|&v| in_range(v))
                && f.darts.iter().all(|&(u, v)| !no45_light(lay.deg[u], lay.deg[v])));
        if ok {
            certified.push(Element::Face(i));
        }
    }
    let notes = vec![
        "a neighbor off the 3-face gives 1/3 to a 3-vertex once per such face".to_string(),
        "faces give 1 - 4/r once per visit, so cut vertices receive m_v(f) shares".to_string(),
    ];
    Ok(lay.conclude(AuditKind::NoFourFiveCycle, k, scheme, properties, ledger, certified, notes))
}
