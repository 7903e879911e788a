//! Suite report data model. Field order is fixed by declaration order and
//! serialization is deterministic; `millis` is always serialized as 0 so
//! reports are byte-identical across runs (wall times go to stderr).

use serde::{Deserialize, Serialize};

use crate::props::RingProperties;

pub const TOOL_VERSION: &str = concat!("srl ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub tool_version: String,
    pub seed: u64,
    pub corpus: Vec<CorpusEntry>,
    pub theorems: Vec<TheoremEntry>,
    pub hunts: Vec<HuntEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusEntry {
    pub spec: String,
    pub order: u32,
    pub properties: RingProperties,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremEntry {
    pub id: String,
    pub anchor: String,
    pub hypothesis_count: u32,
    pub pass_count: u32,
    pub counterexamples: Vec<Counterexample>,
    pub vacuous: bool,
    pub millis: u64,
    /// Corpus members above the theorem's per-ring order cap; reported so
    /// a capped run is never mistaken for a vacuous one.
    pub skipped: u32,
    /// Hypothesis prevalence per axiom subset, for near-vacuous theorems.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom_subsets: Option<Vec<AxiomSubsetEntry>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AxiomSubsetEntry {
    pub subset: String,
    pub hypothesis_count: u32,
    pub pass_count: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub spec: String,
    /// Element ids whose meaning depends on the theorem; re-checked by
    /// `srl verify`.
    pub witness: Vec<u32>,
    pub rendered: Vec<String>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HuntEntry {
    pub id: String,
    pub budget: u32,
    pub examined: u32,
    /// Candidates excluded because the question is settled on their class
    /// (Q1 on abelian Rickart *-rings) or they exceed the order cap.
    pub skipped: u32,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Finding {
    pub spec: String,
    pub witness: Vec<u32>,
    pub rendered: Vec<String>,
    pub note: String,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn has_counterexample(&self) -> bool {
        !self.theorems.iter().all(|t| t.counterexamples.is_empty())
    }

    /// Markdown rendering of the same data.
    pub fn to_markdown(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "# Suite report ({})", self.tool_version);
        let _ = writeln!(out, "\nseed: {}, corpus size: {}\n", self.seed, self.corpus.len());
        let _ = writeln!(out, "## Theorems\n");
        let _ = writeln!(out, "| id | anchor | hypotheses | passed | failed | skipped | vacuous |");
        let _ = writeln!(out, "|----|--------|-----------:|-------:|-------:|--------:|---------|");
        for t in &self.theorems {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                t.id,
                t.anchor,
                t.hypothesis_count,
                t.pass_count,
                t.counterexamples.len(),
                t.skipped,
                t.vacuous
            );
        }
        for t in &self.theorems {
            for c in &t.counterexamples {
                let _ = writeln!(out, "\n### Counterexample to {} on `{}`", t.id, c.spec);
                let _ = writeln!(out, "- witness ids: {:?}", c.witness);
                let _ = writeln!(out, "- rendered: {:?}", c.rendered);
                let _ = writeln!(out, "- note: {}", c.note);
            }
            if let Some(subsets) = &t.axiom_subsets {
                let _ = writeln!(out, "\n### {} by axiom subset\n", t.id);
                for s in subsets {
                    let _ = writeln!(
                        out,
                        "- {}: hypotheses {}, passed {}",
                        s.subset, s.hypothesis_count, s.pass_count
                    );
                }
            }
        }
        let _ = writeln!(out, "\n## Hunts\n");
        for h in &self.hunts {
            let _ = writeln!(
                out,
                "- {}: budget {}, examined {}, skipped {}, findings {}",
                h.id,
                h.budget,
                h.examined,
                h.skipped,
                h.findings.len()
            );
            for f in &h.findings {
                let _ = writeln!(out, "  - `{}` witness {:?} ({})", f.spec, f.witness, f.note);
            }
        }
        out
    }
}
