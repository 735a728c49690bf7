//! Markdown rendering of suite reports.

use std::fmt::Write;

use crate::suite::{CriterionStatus, SuiteReport};

fn status_word(s: CriterionStatus) -> &'static str {
    match s {
        CriterionStatus::Pass => "PASS",
        CriterionStatus::Fail => "FAIL",
        CriterionStatus::BudgetExceeded => "BUDGET-EXCEEDED",
        CriterionStatus::Skipped => "SKIPPED",
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn markdown(r: &SuiteReport) -> String {
    let mut out = String::new();
    let s = &r.summary;
    writeln!(out, "# {} suite report\n", r.tool).unwrap();
    writeln!(out, "Schema {}, {} {}, seed {}.\n", r.schema_version, r.tool, r.version, r.seed).unwrap();
    writeln!(
        out,
        "{} claims: {} hold, {} fail ({} expected), {} budget-exceeded, {} errors, {} unexpected.\n",
        s.entries, s.holds, s.fails, s.fails_expected, s.budget_exceeded, s.errors, s.unexpected
    )
    .unwrap();
    writeln!(out, "| criterion | title | status | claims |").unwrap();
    writeln!(out, "|---|---|---|---|").unwrap();
    for c in &r.criteria {
        writeln!(out, "| {} | {} | {} | {} |", c.id, cell(&c.title), status_word(c.status), c.entries.len()).unwrap();
    }
    for c in &r.criteria {
        writeln!(out, "\n## {}. {}\n", c.id, c.title).unwrap();
        if c.entries.is_empty() {
            writeln!(out, "No claims selected.").unwrap();
            continue;
        }
        writeln!(out, "| claim | statement | status | detail |").unwrap();
        writeln!(out, "|---|---|---|---|").unwrap();
        for e in &c.entries {
            let mut detail = e.detail.clone().unwrap_or_default();
            if let Some(w) = &e.witness {
                let confirmed = if e.witness_confirmed == Some(true) { "confirmed" } else { "NOT confirmed" };
                if !detail.is_empty() {
                    detail.push_str("; ");
                }
                write!(detail, "witness over {} {confirmed}", w.group).unwrap();
            }
            writeln!(out, "| `{}` | {} | {} | {} |", e.claim.id, cell(&e.claim.statement), e.label(), cell(&detail)).unwrap();
        }
    }
    out
}
