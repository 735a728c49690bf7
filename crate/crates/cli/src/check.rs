//! Single checks behind `gtc check`, also used by the suite.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use gtc_core::discharge::{audit_no45cycle, audit_no4cycle, AuditReport};
use gtc_core::engine::{
    c3t_hard_labeling, check_d_group_choosable, check_group_choosable, check_group_colorable, solve_with_budget, Budget,
    CheckError, CheckOptions, Engine, Exec, ListAssignment, Verdict, Witness,
};
use gtc_core::graph::{self, Graph};
use gtc_core::group::Group;
use gtc_core::ordering::coloring_number;
use gtc_core::structure::{
    find_2_alternating_cycle, find_knet, find_light_edge, has_cycle_len, has_minor, outerplanar_configuration,
    LightEdgeRule, MinorId,
};
use serde::{Deserialize, Serialize};

use crate::address::{self, Derived};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    BudgetExceeded,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Holds => 0,
            Outcome::Fails => 1,
            Outcome::BudgetExceeded => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    #[default]
    Frontier,
    Enumerate,
}

#[derive(Args, Clone, Debug, Default)]
pub struct SearchArgs {
    /// Seed of the reference orientation.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Node limit; defaults to GTC_BUDGET_NODES or the built-in limit.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Time limit in seconds; defaults to GTC_BUDGET_SECONDS or the built-in limit.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    #[arg(long, value_enum, default_value_t = EngineArg::Frontier)]
    pub engine: EngineArg,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

impl SearchArgs {
    pub fn budget(&self) -> Budget {
        let mut b = Budget::from_env();
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        if let Some(s) = self.budget_seconds {
            b.max_seconds = s;
        }
        b
    }

    pub fn options(&self) -> CheckOptions {
        CheckOptions {
            orientation_seed: self.seed,
            budget: self.budget(),
            engine: match self.engine {
                EngineArg::Frontier => Engine::Frontier,
                EngineArg::Enumerate => Engine::Enumerate,
            },
            exec: if self.sequential { Exec::Sequential } else { Exec::default() },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum AuditArg {
    /// Plane graphs without 4-cycles, total charge scheme.
    No4,
    /// Plane graphs without 4- and 5-cycles.
    No45,
}

#[derive(Subcommand, Clone, Debug)]
pub enum CheckCommand {
    /// Group colorability of the total graph: every labeling admits a coloring from the whole group.
    Total {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        group: String,
        /// Solve only the fixed Z3 labeling of T(C_3t) that admits no coloring.
        #[arg(long)]
        hard_labeling: bool,
        /// Re-solve the instance in this witness file instead of searching.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// k-group choosability: every labeling and every k-element list assignment admits a coloring.
    Choosable {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Derived::None)]
        derived: Derived,
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Group choosability with lists as large as the vertex degrees.
    Dchoosable {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Derived::None)]
        derived: Derived,
        #[arg(long)]
        group: String,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Structural lemma finders on a plane graph.
    Structure {
        #[arg(long)]
        graph: String,
    },
    /// Discharging audit of a plane graph.
    Discharge {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        audit: AuditArg,
        /// Degree parameter; defaults to max(Δ, 6) for no4 and 5 for no45.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Coloring number with a degeneracy certificate.
    Col {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Derived::None)]
        derived: Derived,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub graph: String,
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub outcome: Outcome,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub detail: serde_json::Value,
}

/// List sizes a witness must have to count against a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "lists", content = "size")]
pub enum ListShape {
    /// The whole group at every vertex.
    Full,
    Uniform(usize),
    /// `|L(v)| = deg(v)`.
    Degree,
}

impl ListShape {
    fn size(self, g: &Graph, group: &Group, v: usize) -> usize {
        match self {
            ListShape::Full => group.order(),
            ListShape::Uniform(k) => k,
            ListShape::Degree => g.degree(v),
        }
    }
}

pub fn parse_group(spec: &str) -> Result<Group> {
    Group::parse(spec).with_context(|| format!("bad group `{spec}`"))
}

/// Re-solves a witness instance on `g`. `Fails` confirms the witness.
pub fn confirm_witness(g: &Graph, group: &Group, shape: ListShape, w: &Witness, budget: Budget) -> Result<Outcome> {
    if w.lists.len() != g.vertex_count() {
        bail!("witness has {} lists for {} vertices", w.lists.len(), g.vertex_count());
    }
    for (v, l) in w.lists.iter().enumerate() {
        let want = shape.size(g, group, v);
        let mut distinct = l.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != want || distinct.len() != l.len() {
            bail!("list of vertex {v} has {} distinct elements, the check needs {want}", distinct.len());
        }
    }
    let (o, f, lists) = w.to_instance(g, group)?;
    match solve_with_budget(g, &o, group, &f, &lists, budget) {
        Ok(out) => Ok(if out.coloring.is_some() { Outcome::Holds } else { Outcome::Fails }),
        Err(e) if e.is_budget() => Ok(Outcome::BudgetExceeded),
        Err(e) => Err(e.into()),
    }
}

fn read_witness(path: &PathBuf) -> Result<Witness> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse witness {}", path.display()))
}

fn verdict_outcome(v: Result<Verdict, CheckError>) -> Result<(Outcome, Option<Witness>)> {
    match v {
        Ok(v) if v.holds() => Ok((Outcome::Holds, None)),
        Ok(v) => Ok((Outcome::Fails, v.witness)),
        Err(e) if e.is_budget() => Ok((Outcome::BudgetExceeded, None)),
        Err(e) => Err(e.into()),
    }
}

fn search_summary(outcome: Outcome, from_witness: bool) -> String {
    match (outcome, from_witness) {
        (Outcome::Holds, false) => "holds".into(),
        (Outcome::Fails, false) => "fails; witness attached".into(),
        (Outcome::Holds, true) => "the witness instance is colorable".into(),
        (Outcome::Fails, true) => "fails; the witness instance has no coloring".into(),
        (Outcome::BudgetExceeded, _) => "budget exceeded".into(),
    }
}

/// The hard labeling as a witness on `T(C_3t)`, with `t` read off the address.
pub fn hard_labeling_witness(address: &str) -> Result<(Graph, Group, Witness)> {
    let base = address::resolve_graph(address)?;
    let n = base.vertex_count();
    if n % 3 != 0 || graph::cycle(n).ok().as_ref() != Some(&base) {
        bail!("--hard-labeling needs a cycle whose length is a multiple of 3, got {address}");
    }
    let h = c3t_hard_labeling(n / 3)?;
    let full = ListAssignment::full(h.total.graph.vertex_count(), &h.group);
    let w = Witness::new(&h.total.graph, &h.orientation, &h.labeling, &full);
    Ok((h.total.graph, h.group, w))
}

pub fn run(cmd: &CheckCommand) -> Result<CheckReport> {
    match cmd {
        CheckCommand::Total { graph, group, hard_labeling, witness, search } => {
            let grp = parse_group(group)?;
            let target = Derived::Total.describe(graph);
            let (outcome, w, from_witness) = if *hard_labeling {
                if witness.is_some() {
                    bail!("--hard-labeling and --witness are exclusive");
                }
                if grp.order() != 3 || !grp.is_abelian() {
                    bail!("the hard labeling lives in Z3");
                }
                let (t, z3, w) = hard_labeling_witness(graph)?;
                let outcome = confirm_witness(&t, &z3, ListShape::Full, &w, search.budget())?;
                (outcome, (outcome == Outcome::Fails).then_some(w), true)
            } else {
                let g = Derived::Total.apply(&address::resolve_graph(graph)?);
                match witness {
                    Some(path) => {
                        let w = read_witness(path)?;
                        let outcome = confirm_witness(&g, &grp, ListShape::Full, &w, search.budget())?;
                        (outcome, None, true)
                    }
                    None => {
                        let (o, w) = verdict_outcome(check_group_colorable(&g, &grp, &search.options()))?;
                        (o, w, false)
                    }
                }
            };
            Ok(CheckReport {
                check: "total".into(),
                graph: graph.clone(),
                target,
                group: Some(grp.name().to_string()),
                outcome,
                summary: search_summary(outcome, from_witness),
                witness: w,
                detail: serde_json::Value::Null,
            })
        }
        CheckCommand::Choosable { graph, derived, group, k, witness, search } => {
            let grp = parse_group(group)?;
            if *k > grp.order() {
                bail!("k = {k} exceeds the order of {}", grp.name());
            }
            let g = derived.apply(&address::resolve_graph(graph)?);
            search_check("choosable", graph, *derived, &g, &grp, ListShape::Uniform(*k), witness, search, |g, grp, o| {
                check_group_choosable(g, grp, *k, o)
            })
        }
        CheckCommand::Dchoosable { graph, derived, group, witness, search } => {
            let grp = parse_group(group)?;
            let g = derived.apply(&address::resolve_graph(graph)?);
            if g.max_degree() > grp.order() {
                bail!("maximum degree {} exceeds the order of {}", g.max_degree(), grp.name());
            }
            search_check("dchoosable", graph, *derived, &g, &grp, ListShape::Degree, witness, search, check_d_group_choosable)
        }
        CheckCommand::Col { graph, derived } => {
            let g = derived.apply(&address::resolve_graph(graph)?);
            let cert = coloring_number(&g);
            if !cert.verify(&g) {
                bail!("degeneracy certificate failed verification");
            }
            Ok(CheckReport {
                check: "col".into(),
                graph: graph.clone(),
                target: derived.describe(graph),
                group: None,
                outcome: Outcome::Holds,
                summary: cert.col.to_string(),
                witness: None,
                detail: serde_json::to_value(&cert)?,
            })
        }
        CheckCommand::Structure { graph } => {
            let r = address::resolve(graph)?;
            let Some(pg) = &r.plane else { bail!("{graph} has no plane embedding") };
            if !pg.is_spherical()? {
                bail!("the rotation of {graph} is not a plane embedding");
            }
            let lemmas = lemma_coverage(&r.graph, None);
            let misses: Vec<&str> = lemmas.iter().filter(|l| l.missed()).map(|l| l.lemma.as_str()).collect();
            let applied = lemmas.iter().filter(|l| l.applies == Some(true)).count();
            let outcome = if misses.is_empty() { Outcome::Holds } else { Outcome::Fails };
            let summary = if misses.is_empty() {
                format!("{applied} lemma hypotheses apply, every finder succeeds")
            } else {
                format!("finders missed: {}", misses.join(", "))
            };
            Ok(CheckReport {
                check: "structure".into(),
                graph: graph.clone(),
                target: graph.clone(),
                group: None,
                outcome,
                summary,
                witness: None,
                detail: serde_json::to_value(&lemmas)?,
            })
        }
        CheckCommand::Discharge { graph, audit, k } => {
            let pg = address::resolve_plane(graph)?;
            let report = run_audit(&pg, *audit, *k)?;
            let sound = audit_is_sound(&report);
            let failing = report.failing_properties();
            let summary = format!(
                "{}; charge {} conserved; failing properties {:?}; {} local violations",
                if sound { "sound" } else { "unsound" },
                if report.ledger.is_conserved() { "is" } else { "is not" },
                failing,
                report.local_violations.len()
            );
            Ok(CheckReport {
                check: "discharge".into(),
                graph: graph.clone(),
                target: graph.clone(),
                group: None,
                outcome: if sound { Outcome::Holds } else { Outcome::Fails },
                summary,
                witness: None,
                detail: serde_json::to_value(&report)?,
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn search_check(
    name: &str,
    address: &str,
    derived: Derived,
    g: &Graph,
    group: &Group,
    shape: ListShape,
    witness: &Option<PathBuf>,
    search: &SearchArgs,
    check: impl Fn(&Graph, &Group, &CheckOptions) -> Result<Verdict, CheckError>,
) -> Result<CheckReport> {
    let (outcome, w, from_witness) = match witness {
        Some(path) => (confirm_witness(g, group, shape, &read_witness(path)?, search.budget())?, None, true),
        None => {
            let (o, w) = verdict_outcome(check(g, group, &search.options()))?;
            (o, w, false)
        }
    };
    Ok(CheckReport {
        check: name.into(),
        graph: address.to_string(),
        target: derived.describe(address),
        group: Some(group.name().to_string()),
        outcome,
        summary: search_summary(outcome, from_witness),
        witness: w,
        detail: serde_json::Value::Null,
    })
}

pub fn run_audit(pg: &gtc_core::structure::PlaneGraph, audit: AuditArg, k: Option<usize>) -> Result<AuditReport> {
    let delta = pg.graph().max_degree();
    Ok(match audit {
        AuditArg::No4 => audit_no4cycle(pg, k.unwrap_or(delta.max(6)))?,
        AuditArg::No45 => audit_no45cycle(pg, k.unwrap_or(5))?,
    })
}

/// Conservation, the exact Euler total, and no element certified
/// non-negative by its neighborhood ending up negative.
pub fn audit_is_sound(r: &AuditReport) -> bool {
    r.ledger.is_conserved() && r.ledger.total_final() == r.scheme.euler_constant() && r.local_violations.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub lemma: String,
    /// `None` when the hypothesis could not be decided.
    pub applies: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<String>,
}

impl LemmaResult {
    pub fn missed(&self) -> bool {
        self.applies == Some(true) && self.found.is_none()
    }
}

/// Outerplanarity from cheap necessary conditions and, on small blocks, the
/// K4 and K2,3 minor tests. `None` when undecided.
pub fn outerplanar(g: &Graph) -> Option<bool> {
    let n = g.vertex_count();
    if n > 2 && g.edge_count() + 3 > 2 * n {
        return Some(false);
    }
    if n > 0 && g.min_degree() >= 3 {
        return Some(false);
    }
    let k4 = has_minor(g, MinorId::K4).ok()?;
    let k23 = has_minor(g, MinorId::K23).ok()?;
    Some(!k4 && !k23)
}

/// Runs every lemma finder whose hypothesis holds on the planar graph `g`.
/// `outerplanar` overrides the outerplanarity test when known.
pub fn lemma_coverage(g: &Graph, outerplanar_flag: Option<bool>) -> Vec<LemmaResult> {
    let d = if g.vertex_count() == 0 { 0 } else { g.min_degree() };
    let edge = |e: Option<usize>| {
        e.map(|e| {
            let (u, v) = g.edge(e);
            format!("edge {u}-{v}, degrees {} and {}", g.degree(u), g.degree(v))
        })
    };
    let mut out = Vec::new();
    let light13 = d >= 3;
    out.push(LemmaResult {
        lemma: "light-edge-13".into(),
        applies: Some(light13),
        found: if light13 { edge(find_light_edge(g, LightEdgeRule::SumAtMost(13))) } else { None },
    });
    let alt = d >= 2 && !has_cycle_len(g, 5) && !has_cycle_len(g, 6);
    out.push(LemmaResult {
        lemma: "alternating-cycle-or-light-edge-9".into(),
        applies: Some(alt),
        found: if alt {
            find_2_alternating_cycle(g)
                .map(|c| format!("2-alternating cycle {c:?}"))
                .or_else(|| edge(find_light_edge(g, LightEdgeRule::SumAtMost(9))))
        } else {
            None
        },
    });
    let net = if d >= 3 { find_knet(g, 5).map(|k| k.is_none()).ok() } else { Some(false) };
    out.push(LemmaResult {
        lemma: "no-5-net-light-edge-9".into(),
        applies: net,
        found: if net == Some(true) { edge(find_light_edge(g, LightEdgeRule::SumAtMost(9))) } else { None },
    });
    let deg3 = d >= 3 && !has_cycle_len(g, 5);
    out.push(LemmaResult {
        lemma: "no-5-cycle-degree-3-edge".into(),
        applies: Some(deg3),
        found: if deg3 { edge(find_light_edge(g, LightEdgeRule::DegreeThreeNeighborAtMost(5))) } else { None },
    });
    let op = outerplanar_flag.or_else(|| outerplanar(g));
    out.push(LemmaResult {
        lemma: "outerplanar-configuration".into(),
        applies: op,
        found: if op == Some(true) { outerplanar_configuration(g).map(|c| format!("configuration {c:?}")) } else { None },
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtc_core::derived::total_graph;

    fn choosable(graph: &str, derived: Derived, group: &str, k: usize) -> CheckCommand {
        CheckCommand::Choosable {
            graph: graph.into(),
            derived,
            group: group.into(),
            k,
            witness: None,
            search: SearchArgs::default(),
        }
    }

    #[test]
    fn total_cycle_is_four_choosable_over_z4() {
        let r = run(&choosable("cycle:4", Derived::Total, "Z4", 4)).unwrap();
        assert_eq!(r.outcome, Outcome::Holds);
        assert_eq!(r.target, "T(cycle:4)");
    }

    #[test]
    fn hard_labeling_fails_and_its_witness_confirms() {
        let cmd = CheckCommand::Total {
            graph: "cycle:3".into(),
            group: "Z3".into(),
            hard_labeling: true,
            witness: None,
            search: SearchArgs::default(),
        };
        let r = run(&cmd).unwrap();
        assert_eq!(r.outcome, Outcome::Fails);
        let w = r.witness.unwrap();
        let t = total_graph(&graph::cycle(3).unwrap()).graph;
        let z3 = Group::parse("Z3").unwrap();
        assert_eq!(confirm_witness(&t, &z3, ListShape::Full, &w, Budget::default()).unwrap(), Outcome::Fails);
        assert!(confirm_witness(&t, &z3, ListShape::Uniform(2), &w, Budget::default()).is_err());
        let not_cycle = CheckCommand::Total {
            graph: "path:3".into(),
            group: "Z3".into(),
            hard_labeling: true,
            witness: None,
            search: SearchArgs::default(),
        };
        assert!(run(&not_cycle).is_err());
    }

    #[test]
    fn col_of_total_wheel() {
        let r = run(&CheckCommand::Col { graph: "wheel:6".into(), derived: Derived::Total }).unwrap();
        assert_eq!(r.summary, "7");
    }

    #[test]
    fn zero_budget_is_reported_not_raised() {
        let mut cmd = choosable("cycle:4", Derived::Total, "Z4", 4);
        if let CheckCommand::Choosable { search, .. } = &mut cmd {
            search.budget_nodes = Some(0);
        }
        assert_eq!(run(&cmd).unwrap().outcome, Outcome::BudgetExceeded);
    }

    #[test]
    fn structure_and_discharge_on_the_cube() {
        let r = run(&CheckCommand::Structure { graph: "cube".into() }).unwrap();
        assert_eq!(r.outcome, Outcome::Holds);
        let r = run(&CheckCommand::Discharge { graph: "dodecahedron".into(), audit: AuditArg::No4, k: None }).unwrap();
        assert_eq!(r.outcome, Outcome::Holds);
        assert!(run(&CheckCommand::Discharge { graph: "cube".into(), audit: AuditArg::No4, k: None }).is_err());
        assert!(run(&CheckCommand::Structure { graph: "complete:5".into() }).is_err());
    }

    #[test]
    fn outerplanarity_shortcuts() {
        assert_eq!(outerplanar(&graph::cycle(6).unwrap()), Some(true));
        assert_eq!(outerplanar(&graph::complete(4).unwrap()), Some(false));
        assert_eq!(outerplanar(&graph::complete_bipartite(2, 3).unwrap()), Some(false));
        assert_eq!(outerplanar(&graph::path(1).unwrap()), Some(true));
    }
}
