//! Re-validation of serialized reports: every counterexample and hunt
//! finding is replayed against the deciders from a fresh ring build.

use srl_core::BuildConfig;

use crate::parse::parse_ring_spec;
use crate::report::SuiteReport;
use crate::theorems::{self, Outcome};
use crate::{hunts, props};

/// Problems found while re-validating; empty means the report is coherent.
pub fn verify_report(report: &SuiteReport, config: &BuildConfig) -> Vec<String> {
    let mut problems = Vec::new();
    for entry in &report.corpus {
        let ring = match parse_ring_spec(&entry.spec).map_err(|e| e.to_string()).and_then(|e| {
            srl_core::build_ring(&e, config).map_err(|e| e.to_string())
        }) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("corpus `{}`: rebuild failed: {e}", entry.spec));
                continue;
            }
        };
        if ring.order() != entry.order {
            problems.push(format!(
                "corpus `{}`: order {} recorded, {} rebuilt",
                entry.spec,
                entry.order,
                ring.order()
            ));
        }
        // Full property recomputation only where it is cheap; the suite's
        // own spot check covers the cache path.
        if ring.order() <= 512 && props::compute_properties(&ring) != entry.properties {
            problems.push(format!("corpus `{}`: properties do not reproduce", entry.spec));
        }
    }
    for t in &report.theorems {
        for c in &t.counterexamples {
            let ring = match parse_ring_spec(&c.spec)
                .map_err(|e| e.to_string())
                .and_then(|e| srl_core::build_ring(&e, config).map_err(|e| e.to_string()))
            {
                Ok(r) => r,
                Err(e) => {
                    problems.push(format!("{} `{}`: rebuild failed: {e}", t.id, c.spec));
                    continue;
                }
            };
            match theorems::check_member(&t.id, &ring, config) {
                Outcome::Fail { witness, .. } if witness == c.witness => {}
                Outcome::Fail { witness, .. } => problems.push(format!(
                    "{} `{}`: counterexample witness {:?} does not reproduce (got {:?})",
                    t.id, c.spec, c.witness, witness
                )),
                _ => problems.push(format!(
                    "{} `{}`: serialized counterexample no longer fails",
                    t.id, c.spec
                )),
            }
        }
    }
    for h in &report.hunts {
        for f in &h.findings {
            let ring = match parse_ring_spec(&f.spec)
                .map_err(|e| e.to_string())
                .and_then(|e| srl_core::build_ring(&e, config).map_err(|e| e.to_string()))
            {
                Ok(r) => r,
                Err(e) => {
                    problems.push(format!("{} `{}`: rebuild failed: {e}", h.id, f.spec));
                    continue;
                }
            };
            match hunts::hunt_pattern(&h.id, &ring, config) {
                Some((witness, _)) if witness == f.witness => {}
                Some((witness, _)) => problems.push(format!(
                    "{} `{}`: finding witness {:?} does not reproduce (got {:?})",
                    h.id, f.spec, f.witness, witness
                )),
                None => problems.push(format!(
                    "{} `{}`: serialized finding no longer matches the pattern",
                    h.id, f.spec
                )),
            }
        }
    }
    problems
}
