//! The verification suite: eleven criteria, each a list of claims with an
//! expected status, evaluated deterministically from a config and a seed.

use std::collections::BTreeSet;

use anyhow::Result;
use gtc_core::catalog::{self, abstract_catalog, plane_catalog};
use gtc_core::derived::{line_graph, total_graph};
use gtc_core::discharge::{charge_sum, ChargeScheme};
use gtc_core::engine::naive::universal_naive;
use gtc_core::engine::{
    check_d_group_choosable, check_group_choosable, check_group_colorable, check_list_sizes, greedy,
    is_valid_coloring, randomized_colorability, solve_with_budget, two_phase_total, Budget, CheckError,
    CheckOptions, EdgeLabeling, Engine, Exec, ListAssignment, RandomizedOptions, Verdict, Witness,
};
use gtc_core::graph::{self, orient, Graph};
use gtc_core::group::{ElemSet, Group};
use gtc_core::ordering::{coloring_number, d_group_choosable_oracle};
use gtc_core::structure::has_cycle_len;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::address::{self, family, Derived};
use crate::check::{audit_is_sound, confirm_witness, hard_labeling_witness, lemma_coverage, run_audit, AuditArg, ListShape, Outcome};

pub const SCHEMA_VERSION: u32 = 1;
pub const CRITERIA: std::ops::RangeInclusive<u8> = 1..=11;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("invalid suite config: {0}")]
    ConfigInvalid(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    Json,
    Markdown,
    #[default]
    Both,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Trials {
    /// Sampled labelings per graph in the randomized colorability claims.
    pub randomized: usize,
    /// Greedy instances in total, ten per random graph.
    pub greedy: usize,
    /// Seeded `(f, L)` pairs per graph and group for the two-phase claims.
    pub two_phase: usize,
    pub trees: usize,
}

impl Default for Trials {
    fn default() -> Self {
        Trials { randomized: 1000, greedy: 1000, two_phase: 100, trees: 20 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Group specs to run; `*` keeps every group.
    pub groups: Vec<String>,
    /// Graph addresses or family names to run; `*` keeps every graph.
    pub graphs: Vec<String>,
    /// Extra plane graphs (`file:` addresses or catalog names) for the
    /// structural, discharging and coloring-number claims.
    pub plane_graphs: Vec<String>,
    /// Criteria to run; empty runs all of them.
    pub criteria: Vec<u8>,
    pub budget: Budget,
    pub trials: Trials,
    pub seed: u64,
    pub format: ReportFormat,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            groups: vec!["*".into()],
            graphs: vec!["*".into()],
            plane_graphs: Vec::new(),
            criteria: Vec::new(),
            budget: Budget::from_env(),
            trials: Trials::default(),
            seed: 0,
            format: ReportFormat::Both,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<SuiteConfig, SuiteError> {
        let config: SuiteConfig = serde_json::from_str(text).map_err(|e| SuiteError::ConfigInvalid(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), SuiteError> {
        let bad = |m: String| Err(SuiteError::ConfigInvalid(m));
        if self.groups.is_empty() || self.graphs.is_empty() {
            return bad("groups and graphs must not be empty; use \"*\" to keep everything".into());
        }
        for g in self.groups.iter().filter(|g| *g != "*") {
            if let Err(e) = Group::parse(g) {
                return bad(format!("group `{g}`: {e}"));
            }
        }
        if let Some(c) = self.criteria.iter().find(|c| !CRITERIA.contains(c)) {
            return bad(format!("criterion {c} does not exist"));
        }
        if self.budget.max_seconds.is_nan() || self.budget.max_seconds < 0.0 {
            return bad("the time budget must be a non-negative number of seconds".into());
        }
        let t = &self.trials;
        if t.randomized == 0 || t.greedy == 0 || t.two_phase == 0 || t.trees == 0 {
            return bad("trial counts must be positive".into());
        }
        Ok(())
    }

    fn wants_criterion(&self, id: u8) -> bool {
        self.criteria.is_empty() || self.criteria.contains(&id)
    }

    fn wants(&self, claim: &Claim) -> bool {
        let group_ok = claim.group.as_ref().is_none_or(|g| self.groups.iter().any(|p| p == "*" || p == g));
        let graph_ok = self.graphs.iter().any(|p| p == "*" || *p == claim.graph || p == family(&claim.graph));
        group_ok && graph_ok
    }

    fn search_options(&self) -> CheckOptions {
        CheckOptions { orientation_seed: self.seed, budget: self.budget, ..CheckOptions::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Holds,
    Fails,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Holds,
    Fails,
    BudgetExceeded,
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    AtMost,
}

/// What a claim evaluates; enough to rerun it from its graph and group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ClaimCheck {
    Choosable { k: usize },
    Colorable,
    DChoosable { fallback: Option<String> },
    HardLabeling,
    /// One solve with full lists and the zero labeling.
    FullListSolve,
    Randomized { trials: usize, seed: u64 },
    Col { relation: Relation, bound: usize },
    Greedy { instances: usize, seed: u64 },
    EngineAgreement { seeds: Vec<u64> },
    Lemmas { outerplanar: Option<bool> },
    CatalogShape,
    Discharge,
    TwoPhase { trials: usize, seed: u64 },
}

impl ClaimCheck {
    /// True for claims decided by the budgeted search engine.
    pub fn searches(&self) -> bool {
        matches!(
            self,
            ClaimCheck::Choosable { .. }
                | ClaimCheck::Colorable
                | ClaimCheck::DChoosable { .. }
                | ClaimCheck::HardLabeling
                | ClaimCheck::FullListSolve
                | ClaimCheck::Randomized { .. }
                | ClaimCheck::EngineAgreement { .. }
        )
    }

    fn list_shape(&self) -> Option<ListShape> {
        match self {
            ClaimCheck::Choosable { k } => Some(ListShape::Uniform(*k)),
            ClaimCheck::DChoosable { .. } => Some(ListShape::Degree),
            ClaimCheck::Colorable | ClaimCheck::HardLabeling | ClaimCheck::FullListSolve | ClaimCheck::Randomized { .. } => {
                Some(ListShape::Full)
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryWitness {
    pub group: String,
    pub instance: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub criterion: u8,
    pub statement: String,
    pub graph: String,
    #[serde(default, skip_serializing_if = "is_plain")]
    pub derived: Derived,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub check: ClaimCheck,
    pub expected: Expected,
}

fn is_plain(d: &Derived) -> bool {
    *d == Derived::None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimEntry {
    #[serde(flatten)]
    pub claim: Claim,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<EntryWitness>,
    /// Whether an independent re-solve of the witness found no coloring.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_confirmed: Option<bool>,
}

impl ClaimEntry {
    /// Matches the expectation, with any witness confirmed.
    pub fn ok(&self) -> bool {
        let matches = matches!(
            (self.status, self.claim.expected),
            (EntryStatus::Holds, Expected::Holds) | (EntryStatus::Fails, Expected::Fails)
        );
        matches && self.witness_confirmed != Some(false)
    }

    pub fn label(&self) -> String {
        let base = match self.status {
            EntryStatus::Holds => "holds",
            EntryStatus::Fails => "fails",
            EntryStatus::BudgetExceeded => return "budget-exceeded".into(),
            EntryStatus::Error => return "error".into(),
        };
        let expected = matches!(
            (self.status, self.claim.expected),
            (EntryStatus::Holds, Expected::Holds) | (EntryStatus::Fails, Expected::Fails)
        );
        match (self.status, expected) {
            (EntryStatus::Fails, true) => "fails (expected)".into(),
            (_, true) => base.into(),
            (_, false) => format!("{base} (unexpected)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionStatus {
    Pass,
    Fail,
    BudgetExceeded,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub status: CriterionStatus,
    pub entries: Vec<ClaimEntry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub entries: usize,
    pub holds: usize,
    pub fails: usize,
    pub fails_expected: usize,
    pub budget_exceeded: usize,
    pub errors: usize,
    pub unexpected: usize,
    pub criteria_passed: usize,
    pub criteria_failed: usize,
    pub criteria_budget_exceeded: usize,
    pub criteria_skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub config: SuiteConfig,
    pub criteria: Vec<CriterionReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn exit_code(&self) -> u8 {
        if self.summary.criteria_failed > 0 {
            1
        } else if self.summary.criteria_budget_exceeded > 0 {
            2
        } else {
            0
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.criteria.iter().flat_map(|c| c.entries.iter())
    }
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "Total graphs of paths are 3-group-choosable and not 2-group-choosable",
        2 => "Total graphs of cycles: hard labeling, Z4 and Z5 colorability, Z3 failures",
        3 => "Total graphs of trees are (Δ+1)-group-choosable and need Δ+1 colors",
        4 => "Coloring-number bounds for total graphs",
        5 => "Brooks-type equality cases for group choosability",
        6 => "Degree-list group choosability agrees with the block oracle",
        7 => "Greedy coloring along a degeneracy certificate",
        8 => "Exhaustive engines agree with the brute-force reference",
        9 => "Structural lemma finders on the plane catalog",
        10 => "Discharging: exact charge sums and sound audits",
        11 => "Two-phase total coloring succeeds with lists of size col(L(G)) + 2",
        _ => "unknown criterion",
    }
}

#[allow(clippy::too_many_arguments)]
fn claim(
    criterion: u8,
    id: String,
    statement: String,
    graph: impl Into<String>,
    derived: Derived,
    group: Option<&str>,
    check: ClaimCheck,
    expected: Expected,
) -> Claim {
    Claim {
        id: format!("c{criterion:02}.{id}"),
        criterion,
        statement,
        graph: graph.into(),
        derived,
        group: group.map(str::to_string),
        check,
        expected,
    }
}

fn cyclic(n: usize) -> String {
    format!("Z{n}")
}

/// Every claim of a criterion before filtering.
pub fn plan(config: &SuiteConfig, id: u8) -> Result<Vec<Claim>> {
    let seed = config.seed;
    let mut out = Vec::new();
    match id {
        1 => {
            for n in 2..=6 {
                for a in ["Z3", "Z4", "Z2xZ2"] {
                    for (k, expected) in [(3, Expected::Holds), (2, Expected::Fails)] {
                        out.push(claim(
                            1,
                            format!("path:{n}.{a}.k{k}"),
                            format!("T(P_{n}) is {k}-group-choosable over {a}"),
                            format!("path:{n}"),
                            Derived::Total,
                            Some(a),
                            ClaimCheck::Choosable { k },
                            expected,
                        ));
                    }
                }
            }
        }
        2 => {
            for t in 1..=2 {
                let n = 3 * t;
                out.push(claim(
                    2,
                    format!("hard.cycle:{n}"),
                    format!("The hard Z3 labeling of T(C_{n}) admits no coloring"),
                    format!("cycle:{n}"),
                    Derived::Total,
                    Some("Z3"),
                    ClaimCheck::HardLabeling,
                    Expected::Fails,
                ));
            }
            for n in 3..=6 {
                out.push(claim(
                    2,
                    format!("colorable.cycle:{n}.Z4"),
                    format!("T(C_{n}) is Z4-colorable"),
                    format!("cycle:{n}"),
                    Derived::Total,
                    Some("Z4"),
                    ClaimCheck::Colorable,
                    Expected::Holds,
                ));
                let trials = config.trials.randomized;
                out.push(claim(
                    2,
                    format!("sampled.cycle:{n}.Z5"),
                    format!("{trials} sampled Z5 labelings of T(C_{n}) are all colorable"),
                    format!("cycle:{n}"),
                    Derived::Total,
                    Some("Z5"),
                    ClaimCheck::Randomized { trials, seed },
                    Expected::Holds,
                ));
            }
            for n in [4, 5] {
                out.push(claim(
                    2,
                    format!("colorable.cycle:{n}.Z3"),
                    format!("T(C_{n}) is Z3-colorable"),
                    format!("cycle:{n}"),
                    Derived::Total,
                    Some("Z3"),
                    ClaimCheck::Colorable,
                    Expected::Fails,
                ));
            }
        }
        3 => {
            // Maximum degrees cycle through 2, 3 and 4; for each tree the
            // first seed giving the target degree is used.
            for i in 0..config.trials.trees {
                let target = 2 + i % 3;
                let n = target + 1 + (i / 3) % (8 - target);
                let (address, delta) = (0u64..)
                    .map(|j| seed.wrapping_add(1000 * i as u64 + j))
                    .map(|s| (format!("tree:{n}:{s}:4"), graph::random_tree(n, s, 4)))
                    .find_map(|(a, g)| g.ok().filter(|g| g.max_degree() == target).map(|g| (a, g.max_degree())))
                    .expect("every degree up to n - 1 occurs");
                let (up, exact) = (cyclic(delta + 1), cyclic(delta));
                out.push(claim(
                    3,
                    format!("{address}.choosable"),
                    format!("T({address}) with Δ = {delta} is {}-group-choosable over {up}", delta + 1),
                    address.clone(),
                    Derived::Total,
                    Some(&up),
                    ClaimCheck::Choosable { k: delta + 1 },
                    Expected::Holds,
                ));
                out.push(claim(
                    3,
                    format!("{address}.full-lists"),
                    format!("T({address}) has a coloring from all of {exact}"),
                    address,
                    Derived::Total,
                    Some(&exact),
                    ClaimCheck::FullListSolve,
                    Expected::Fails,
                ));
            }
        }
        4 => {
            let col_claim = |tag: &str, name: &str, relation: Relation, bound: usize, why: String| {
                let op = if relation == Relation::Equal { "=" } else { "<=" };
                claim(
                    4,
                    format!("{tag}.{name}"),
                    format!("col(T({name})) {op} {bound}{why}"),
                    name,
                    Derived::Total,
                    None,
                    ClaimCheck::Col { relation, bound },
                    Expected::Holds,
                )
            };
            for n in 6..=8 {
                out.push(col_claim("wheel", &format!("wheel:{n}"), Relation::Equal, n + 1, String::new()));
            }
            for (name, g) in abstract_catalog() {
                if !g.is_regular() {
                    let col = coloring_number(&g).col;
                    let bound = g.max_degree() + col - 1;
                    out.push(col_claim("nonregular", &name, Relation::AtMost, bound, format!(" = Δ + col(G) - 1 with col(G) = {col}")));
                }
            }
            for (name, g) in plane_graphs(config)? {
                let bound = 13.max(g.max_degree() + 2);
                out.push(col_claim("plane", &name, Relation::AtMost, bound, " = max(13, Δ + 2)".into()));
            }
            for e in catalog::outerplanar_catalog() {
                let delta = e.plane.graph().max_degree();
                if delta >= 5 {
                    out.push(col_claim("outerplanar", &e.name, Relation::AtMost, delta + 1, " = Δ + 1".into()));
                }
            }
        }
        5 => {
            let cases = [
                ("cycle:4", "C_4", 2, Expected::Fails),
                ("cycle:4", "C_4", 3, Expected::Holds),
                ("complete:3", "K_3", 2, Expected::Fails),
                ("complete:3", "K_3", 3, Expected::Holds),
                ("path:4", "P_4", 2, Expected::Holds),
            ];
            for (address, name, k, expected) in cases {
                let group = cyclic(k);
                out.push(claim(
                    5,
                    format!("{address}.k{k}"),
                    format!("{name} is {k}-group-choosable over {group}"),
                    address,
                    Derived::None,
                    Some(&group),
                    ClaimCheck::Choosable { k },
                    expected,
                ));
            }
        }
        6 => {
            for n in 1..=5 {
                for (i, g) in graph::connected_graphs(n).into_iter().enumerate() {
                    let address = format!("connected:{n}:{i}");
                    let delta = g.max_degree();
                    let oracle = d_group_choosable_oracle(&g)?;
                    let group = cyclic(delta.max(2));
                    let fallback = (!oracle).then(|| cyclic(delta + 1));
                    out.push(claim(
                        6,
                        address.clone(),
                        format!("{address} {} degree-list group-choosable", if oracle { "is" } else { "is not" }),
                        address,
                        Derived::None,
                        Some(&group),
                        ClaimCheck::DChoosable { fallback },
                        if oracle { Expected::Holds } else { Expected::Fails },
                    ));
                }
            }
        }
        7 => {
            const GROUPS: [&str; 6] = ["Z5", "Z2xZ4", "Z3xZ3", "Z11", "S3", "Z13"];
            let graphs = config.trials.greedy.div_ceil(10);
            for i in 0..graphs {
                let instances = 10.min(config.trials.greedy - 10 * i);
                let s = seed.wrapping_add(i as u64);
                let mut rng = ChaCha8Rng::seed_from_u64(s);
                let n = rng.gen_range(4..=12);
                let m = rng.gen_range(n - 1..=(3 * n).min(n * (n - 1) / 2));
                let address = format!("random:{n}:{m}:{s}");
                let col = coloring_number(&graph::random_graph(n, m, s)?).col;
                let fits: Vec<&str> = GROUPS.iter().copied().filter(|g| Group::parse(g).is_ok_and(|g| g.order() >= col)).collect();
                let group = fits[rng.gen_range(0..fits.len())];
                out.push(claim(
                    7,
                    format!("{address}.{group}"),
                    format!("greedy colors {instances} instances on {address} over {group} with lists of size back-degree + 1"),
                    address,
                    Derived::None,
                    Some(group),
                    ClaimCheck::Greedy { instances, seed: s },
                    Expected::Holds,
                ));
            }
        }
        8 => {
            for g in graph::small_edge_graphs(4) {
                let address = address::edges_address(&g);
                for group in ["Z2", "Z3"] {
                    out.push(claim(
                        8,
                        format!("{address}.{group}"),
                        format!("both engines match the brute-force reference on {address} over {group}"),
                        address.clone(),
                        Derived::None,
                        Some(group),
                        ClaimCheck::EngineAgreement { seeds: vec![seed, seed.wrapping_add(3)] },
                        Expected::Holds,
                    ));
                }
            }
        }
        9 => {
            out.push(claim(
                9,
                "catalog".into(),
                "the plane catalog has at least 10 graphs including the cube, the dodecahedron, fans and prisms".into(),
                "catalog",
                Derived::None,
                None,
                ClaimCheck::CatalogShape,
                Expected::Holds,
            ));
            let flags: std::collections::HashMap<String, bool> =
                plane_catalog().into_iter().map(|e| (e.name, e.outerplanar)).collect();
            for (name, _) in plane_graphs(config)? {
                let outerplanar = flags.get(&name).copied();
                out.push(claim(
                    9,
                    name.clone(),
                    format!("every lemma finder whose hypothesis holds on {name} succeeds"),
                    name,
                    Derived::None,
                    None,
                    ClaimCheck::Lemmas { outerplanar },
                    Expected::Holds,
                ));
            }
        }
        10 => {
            for (name, _) in plane_graphs(config)? {
                out.push(claim(
                    10,
                    name.clone(),
                    format!("charge sums on {name} are -12 and -8, and every applicable audit is sound and finds a failing property"),
                    name,
                    Derived::None,
                    None,
                    ClaimCheck::Discharge,
                    Expected::Holds,
                ));
            }
        }
        11 => {
            let bases: Vec<String> = (2..=6)
                .map(|n| format!("path:{n}"))
                .chain((3..=6).map(|n| format!("cycle:{n}")))
                .chain(["star:3".to_string()])
                .collect();
            for base in bases {
                for group in ["Z5", "Z6"] {
                    let trials = config.trials.two_phase;
                    out.push(claim(
                        11,
                        format!("{base}.{group}"),
                        format!("two-phase coloring of T({base}) succeeds for {trials} seeded (f, L) over {group}"),
                        base.clone(),
                        Derived::Total,
                        Some(group),
                        ClaimCheck::TwoPhase { trials, seed },
                        Expected::Holds,
                    ));
                }
            }
        }
        _ => anyhow::bail!("criterion {id} does not exist"),
    }
    let mut seen = BTreeSet::new();
    for c in &out {
        anyhow::ensure!(seen.insert(c.id.clone()), "duplicate claim id {}", c.id);
    }
    Ok(out)
}

/// The plane catalog followed by the configured extra plane graphs.
fn plane_graphs(config: &SuiteConfig) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = plane_catalog().into_iter().map(|e| (e.name, e.plane.graph().clone())).collect();
    for address in &config.plane_graphs {
        let r = address::resolve(address)?;
        anyhow::ensure!(r.plane.is_some(), "{address} carries no rotation");
        out.push((address.clone(), r.graph));
    }
    Ok(out)
}

struct Evaluation {
    status: EntryStatus,
    detail: Option<String>,
    witness: Option<EntryWitness>,
}

impl Evaluation {
    fn holds(detail: Option<String>) -> Evaluation {
        Evaluation { status: EntryStatus::Holds, detail, witness: None }
    }

    fn fails(detail: impl Into<String>) -> Evaluation {
        Evaluation { status: EntryStatus::Fails, detail: Some(detail.into()), witness: None }
    }

    fn from_verdict(v: Result<Verdict, CheckError>, group: &str) -> Result<Evaluation> {
        match v {
            Ok(v) if v.holds() => Ok(Evaluation::holds(None)),
            Ok(v) => Ok(Evaluation {
                status: EntryStatus::Fails,
                detail: None,
                witness: v.witness.map(|instance| EntryWitness { group: group.to_string(), instance }),
            }),
            Err(e) if e.is_budget() => Ok(Evaluation::budget(&e)),
            Err(e) => Err(e.into()),
        }
    }

    fn budget(e: &CheckError) -> Evaluation {
        Evaluation { status: EntryStatus::BudgetExceeded, detail: Some(e.to_string()), witness: None }
    }
}

fn group_of(c: &Claim) -> Result<Group> {
    let spec = c.group.as_deref().ok_or_else(|| anyhow::anyhow!("claim {} has no group", c.id))?;
    crate::check::parse_group(spec)
}

fn evaluate(config: &SuiteConfig, c: &Claim) -> Result<Evaluation> {
    let opts = config.search_options();
    let target = || -> Result<Graph> { Ok(c.derived.apply(&address::resolve_graph(&c.graph)?)) };
    let group_name = c.group.clone().unwrap_or_default();
    match &c.check {
        ClaimCheck::Choosable { k } => Evaluation::from_verdict(check_group_choosable(&target()?, &group_of(c)?, *k, &opts), &group_name),
        ClaimCheck::Colorable => Evaluation::from_verdict(check_group_colorable(&target()?, &group_of(c)?, &opts), &group_name),
        ClaimCheck::DChoosable { fallback } => {
            let g = target()?;
            let first = Evaluation::from_verdict(check_d_group_choosable(&g, &group_of(c)?, &opts), &group_name)?;
            match (first.status, fallback) {
                (EntryStatus::Holds, Some(spec)) => {
                    let mut second = Evaluation::from_verdict(check_d_group_choosable(&g, &Group::parse(spec)?, &opts), spec)?;
                    second.detail = Some(format!("holds over {group_name}; retried over {spec}"));
                    Ok(second)
                }
                _ => Ok(first),
            }
        }
        ClaimCheck::HardLabeling => {
            let (t, z3, w) = hard_labeling_witness(&c.graph)?;
            Ok(match confirm_witness(&t, &z3, ListShape::Full, &w, config.budget)? {
                Outcome::Holds => Evaluation::holds(Some("the labeling admits a coloring".into())),
                Outcome::Fails => Evaluation {
                    status: EntryStatus::Fails,
                    detail: None,
                    witness: Some(EntryWitness { group: group_name, instance: w }),
                },
                Outcome::BudgetExceeded => {
                    Evaluation { status: EntryStatus::BudgetExceeded, detail: None, witness: None }
                }
            })
        }
        ClaimCheck::FullListSolve => {
            let g = target()?;
            let group = group_of(c)?;
            let o = orient(&g, config.seed);
            let f = EdgeLabeling::zero(&g, &group);
            let full = ListAssignment::full(g.vertex_count(), &group);
            match solve_with_budget(&g, &o, &group, &f, &full, config.budget) {
                Ok(out) if out.coloring.is_some() => Ok(Evaluation::holds(None)),
                Ok(_) => Ok(Evaluation {
                    status: EntryStatus::Fails,
                    detail: None,
                    witness: Some(EntryWitness { group: group_name, instance: Witness::new(&g, &o, &f, &full) }),
                }),
                Err(e) if e.is_budget() => Ok(Evaluation::budget(&e)),
                Err(e) => Err(e.into()),
            }
        }
        ClaimCheck::Randomized { trials, seed } => {
            let mut ro = RandomizedOptions::new(*trials, *seed);
            ro.budget = config.budget;
            match randomized_colorability(&target()?, &group_of(c)?, &ro) {
                Ok(r) => match r.failures.into_iter().next() {
                    None => Ok(Evaluation::holds(Some(format!("{} trials, no failure", r.trials)))),
                    Some(w) => Ok(Evaluation {
                        status: EntryStatus::Fails,
                        detail: Some("a sampled labeling admits no coloring".into()),
                        witness: Some(EntryWitness { group: group_name, instance: w }),
                    }),
                },
                Err(e) if e.is_budget() => Ok(Evaluation::budget(&e)),
                Err(e) => Err(e.into()),
            }
        }
        ClaimCheck::Col { relation, bound } => {
            let g = target()?;
            let cert = coloring_number(&g);
            anyhow::ensure!(cert.verify(&g), "certificate does not verify");
            let ok = match relation {
                Relation::Equal => cert.col == *bound,
                Relation::AtMost => cert.col <= *bound,
            };
            let detail = Some(format!("col = {}", cert.col));
            Ok(Evaluation { status: if ok { EntryStatus::Holds } else { EntryStatus::Fails }, detail, witness: None })
        }
        ClaimCheck::Greedy { instances, seed } => greedy_claim(&target()?, &group_of(c)?, *instances, *seed),
        ClaimCheck::EngineAgreement { seeds } => agreement_claim(&target()?, &group_of(c)?, seeds, config.budget),
        ClaimCheck::Lemmas { outerplanar } => {
            let pg = address::resolve_plane(&c.graph)?;
            anyhow::ensure!(pg.is_spherical()?, "rotation of {} is not a plane embedding", c.graph);
            let lemmas = lemma_coverage(pg.graph(), *outerplanar);
            let applied: Vec<&str> = lemmas.iter().filter(|l| l.applies == Some(true)).map(|l| l.lemma.as_str()).collect();
            let missed: Vec<&str> = lemmas.iter().filter(|l| l.missed()).map(|l| l.lemma.as_str()).collect();
            if missed.is_empty() {
                let detail = if applied.is_empty() { "no hypothesis applies".to_string() } else { format!("applied: {}", applied.join(", ")) };
                Ok(Evaluation::holds(Some(detail)))
            } else {
                Ok(Evaluation::fails(format!("missed: {}", missed.join(", "))))
            }
        }
        ClaimCheck::CatalogShape => {
            let names: Vec<String> = plane_catalog().into_iter().map(|e| e.name).collect();
            let has = |p: &str| names.iter().any(|n| n == p || n.starts_with(&format!("{p}:")));
            let ok = names.len() >= 10 && ["cube", "dodecahedron", "fan", "prism"].iter().all(|p| has(p));
            let detail = format!("{} graphs", names.len());
            Ok(Evaluation { status: if ok { EntryStatus::Holds } else { EntryStatus::Fails }, detail: Some(detail), witness: None })
        }
        ClaimCheck::Discharge => discharge_claim(&c.graph),
        ClaimCheck::TwoPhase { trials, seed } => two_phase_claim(&address::resolve_graph(&c.graph)?, &group_of(c)?, *trials, *seed),
    }
}

fn random_set(group: &Group, size: usize, rng: &mut ChaCha8Rng) -> ElemSet {
    sample(rng, group.order(), size).into_iter().map(|i| group.elem(i).expect("index below order")).collect()
}

fn random_labeling(g: &Graph, group: &Group, rng: &mut ChaCha8Rng) -> EdgeLabeling {
    EdgeLabeling::from_values((0..g.edge_count()).map(|_| group.elem(rng.gen_range(0..group.order())).expect("index below order")).collect())
}

fn greedy_claim(g: &Graph, group: &Group, instances: usize, seed: u64) -> Result<Evaluation> {
    let cert = coloring_number(g);
    anyhow::ensure!(cert.col <= group.order(), "lists of size col exceed the group");
    for i in 0..instances {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let o = orient(g, rng.gen());
        let f = random_labeling(g, group, &mut rng);
        let lists = ListAssignment::from_sets(
            (0..g.vertex_count())
                .map(|v| {
                    let size = rng.gen_range(cert.back_degrees[v] + 1..=group.order());
                    random_set(group, size, &mut rng)
                })
                .collect(),
        );
        match greedy(g, &cert.ordering, group, &o, &f, &lists) {
            Some(c) if is_valid_coloring(g, &o, group, &f, &lists, &c) => {}
            Some(_) => return Ok(Evaluation::fails(format!("instance {i}: greedy returned an invalid coloring"))),
            None => return Ok(Evaluation::fails(format!("instance {i}: greedy got stuck"))),
        }
    }
    Ok(Evaluation::holds(Some(format!("{instances} instances"))))
}

fn agreement_claim(g: &Graph, group: &Group, seeds: &[u64], budget: Budget) -> Result<Evaluation> {
    let n = g.vertex_count();
    let mut profiles: Vec<Vec<usize>> = (1..=group.order()).map(|k| vec![k; n]).collect();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if degrees.iter().all(|&d| d <= group.order()) {
        profiles.push(degrees);
    }
    let reference = orient(g, 0);
    let mut runs = 0;
    for sizes in &profiles {
        let expected = universal_naive(g, &reference, group, sizes);
        for engine in [Engine::Frontier, Engine::Enumerate] {
            for &seed in seeds {
                let opts = CheckOptions { engine, orientation_seed: seed, exec: Exec::Sequential, budget };
                let v = match check_list_sizes(g, group, sizes, &opts) {
                    Ok(v) => v,
                    Err(e) if e.is_budget() => return Ok(Evaluation::budget(&e)),
                    Err(e) => return Err(e.into()),
                };
                runs += 1;
                if v.holds() != expected {
                    return Ok(Evaluation::fails(format!("sizes {sizes:?}, {engine:?}, seed {seed}: engine {}, reference {expected}", v.holds())));
                }
                if let Some(w) = &v.witness {
                    if !w.recheck(g, group)? {
                        return Ok(Evaluation::fails(format!("sizes {sizes:?}: witness does not recheck")));
                    }
                }
            }
        }
    }
    Ok(Evaluation::holds(Some(format!("{} size profiles, {runs} engine runs", profiles.len()))))
}

fn discharge_claim(address: &str) -> Result<Evaluation> {
    let pg = address::resolve_plane(address)?;
    if !pg.graph().is_connected() {
        return Ok(Evaluation::holds(Some("disconnected; not covered".into())));
    }
    let total = charge_sum(&pg, ChargeScheme::Total)?;
    let four = charge_sum(&pg, ChargeScheme::Four)?;
    if total != ChargeScheme::Total.euler_constant() || four != ChargeScheme::Four.euler_constant() {
        return Ok(Evaluation::fails(format!("charge sums {total} and {four}")));
    }
    let mut ran = Vec::new();
    let g = pg.graph();
    let audits = [(AuditArg::No4, !has_cycle_len(g, 4)), (AuditArg::No45, !has_cycle_len(g, 4) && !has_cycle_len(g, 5))];
    for (audit, applicable) in audits {
        if !applicable {
            continue;
        }
        let r = run_audit(&pg, audit, None)?;
        if !audit_is_sound(&r) {
            return Ok(Evaluation::fails(format!("{audit:?} audit is unsound")));
        }
        let failing = r.failing_properties();
        if failing.is_empty() {
            return Ok(Evaluation::fails(format!("{audit:?} audit: every property holds")));
        }
        ran.push(format!("{audit:?} fails {failing:?}"));
    }
    let detail = if ran.is_empty() { "charge sums exact; no audit applies".into() } else { format!("charge sums exact; {}", ran.join("; ")) };
    Ok(Evaluation::holds(Some(detail)))
}

fn two_phase_claim(base: &Graph, group: &Group, trials: usize, seed: u64) -> Result<Evaluation> {
    let total = total_graph(base);
    let t = &total.graph;
    let estimate = coloring_number(&line_graph(base).graph).col;
    let size = estimate + 2;
    anyhow::ensure!(size <= group.order(), "lists of size {size} exceed {}", group.name());
    for i in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let o = orient(t, rng.gen());
        let f = random_labeling(t, group, &mut rng);
        let lists = ListAssignment::from_sets((0..t.vertex_count()).map(|_| random_set(group, size, &mut rng)).collect());
        match two_phase_total(base, &total, &o, group, &f, &lists, estimate) {
            Ok(c) if is_valid_coloring(t, &o, group, &f, &lists, &c) => {}
            Ok(_) => return Ok(Evaluation::fails(format!("trial {i}: invalid coloring"))),
            Err(e) => return Ok(Evaluation::fails(format!("trial {i}: {e}"))),
        }
    }
    Ok(Evaluation::holds(Some(format!("lists of size {size}, {trials} trials"))))
}

/// Evaluates one claim, turning errors into `error` entries and confirming
/// any witness by an independent re-solve.
pub fn run_claim(config: &SuiteConfig, c: Claim) -> ClaimEntry {
    let (status, detail, witness) = match evaluate(config, &c) {
        Ok(e) => (e.status, e.detail, e.witness),
        Err(e) => (EntryStatus::Error, Some(format!("{e:#}")), None),
    };
    let witness_confirmed = witness.as_ref().map(|w| recheck(&c, w).unwrap_or(false));
    ClaimEntry { claim: c, status, detail, witness, witness_confirmed }
}

/// Re-solves a witness from the claim's address alone.
pub fn recheck(c: &Claim, w: &EntryWitness) -> Result<bool> {
    let shape = c.check.list_shape().ok_or_else(|| anyhow::anyhow!("{} carries no colorability witness", c.id))?;
    let g = c.derived.apply(&address::resolve_graph(&c.graph)?);
    let group = Group::parse(&w.group)?;
    Ok(confirm_witness(&g, &group, shape, &w.instance, Budget::default())? == Outcome::Fails)
}

fn criterion_status(entries: &[ClaimEntry]) -> CriterionStatus {
    let broken = |e: &ClaimEntry| match e.status {
        EntryStatus::Error => true,
        EntryStatus::BudgetExceeded => false,
        _ => !e.ok(),
    };
    if entries.is_empty() {
        CriterionStatus::Skipped
    } else if entries.iter().any(broken) {
        CriterionStatus::Fail
    } else if entries.iter().any(|e| e.status == EntryStatus::BudgetExceeded) {
        CriterionStatus::BudgetExceeded
    } else {
        CriterionStatus::Pass
    }
}

pub fn run_criterion(config: &SuiteConfig, id: u8) -> Result<CriterionReport> {
    let mut claims: Vec<Claim> = plan(config, id)?.into_iter().filter(|c| config.wants(c)).collect();
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let entries: Vec<ClaimEntry> = claims.into_iter().map(|c| run_claim(config, c)).collect();
    Ok(CriterionReport { id, title: title(id).into(), status: criterion_status(&entries), entries })
}

pub fn summarize(criteria: &[CriterionReport]) -> Summary {
    let mut s = Summary::default();
    for c in criteria {
        match c.status {
            CriterionStatus::Pass => s.criteria_passed += 1,
            CriterionStatus::Fail => s.criteria_failed += 1,
            CriterionStatus::BudgetExceeded => s.criteria_budget_exceeded += 1,
            CriterionStatus::Skipped => s.criteria_skipped += 1,
        }
        for e in &c.entries {
            s.entries += 1;
            match e.status {
                EntryStatus::Holds => s.holds += 1,
                EntryStatus::Fails => {
                    s.fails += 1;
                    if e.claim.expected == Expected::Fails {
                        s.fails_expected += 1;
                    }
                }
                EntryStatus::BudgetExceeded => s.budget_exceeded += 1,
                EntryStatus::Error => s.errors += 1,
            }
            if matches!(e.status, EntryStatus::Holds | EntryStatus::Fails) && !e.ok() {
                s.unexpected += 1;
            }
        }
    }
    s
}

pub fn assemble(config: &SuiteConfig, mut criteria: Vec<CriterionReport>) -> SuiteReport {
    criteria.sort_by_key(|c| c.id);
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        tool: "gtc".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        seed: config.seed,
        config: config.clone(),
        summary: summarize(&criteria),
        criteria,
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let criteria = CRITERIA
        .filter(|&id| config.wants_criterion(id))
        .map(|id| run_criterion(config, id))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(config, criteria))
}
