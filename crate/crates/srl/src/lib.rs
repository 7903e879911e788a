//! Command-line companion to `srl-core`: ring-spec parsing, corpus
//! generation, theorem suites with vacuity accounting, counterexample
//! hunts, and deterministic JSON reports.

pub mod cache;
pub mod corpus;
pub mod hunts;
pub mod parse;
pub mod props;
pub mod report;
pub mod theorems;
pub mod verify;

use std::rc::Rc;

use srl_core::rng::SplitMix64;
use srl_core::{BuildConfig, FiniteStarRing};

use report::{CorpusEntry, SuiteReport, TOOL_VERSION};

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("{0}")]
    Parse(#[from] parse::ParseError),
    #[error("build failed for `{spec}`: {message}")]
    Build { spec: String, message: String },
    #[error("cache incoherent for `{spec}`: cached properties differ from recomputation")]
    CacheIncoherent { spec: String },
}

/// Budget per hunt question inside a suite run.
const SUITE_HUNT_BUDGET: u32 = 40;

pub fn run_suite(specs: &[String], seed: u64, config: &BuildConfig) -> Result<SuiteReport, SuiteError> {
    let mut rings: Vec<(String, Rc<FiniteStarRing>)> = Vec::with_capacity(specs.len());
    for spec in specs {
        let expr = parse::parse_ring_spec(spec)?;
        let canonical = expr.print();
        let ring = srl_core::build_ring(&expr, config).map_err(|e| SuiteError::Build {
            spec: spec.clone(),
            message: e.to_string(),
        })?;
        rings.push((canonical, ring));
    }

    let mut corpus_entries = Vec::with_capacity(rings.len());
    for (spec, ring) in &rings {
        let started = std::time::Instant::now();
        let (properties, hit) = match cache::load(spec) {
            Some(p) => (p, true),
            None => {
                let p = props::compute_properties(ring);
                cache::store(spec, &p);
                (p, false)
            }
        };
        eprintln!(
            "properties {spec}: {} ms{}",
            started.elapsed().as_millis(),
            if hit { " (cached)" } else { "" }
        );
        corpus_entries.push(CorpusEntry {
            spec: spec.clone(),
            order: ring.order(),
            properties,
        });
    }

    // Cache coherence spot check: one seeded member is recomputed cold and
    // must agree with whatever the report is about to use.
    if !rings.is_empty() {
        let idx = SplitMix64::new(seed ^ 0xC0FFEE).below(rings.len() as u32) as usize;
        let cold = props::compute_properties(&rings[idx].1);
        if cold != corpus_entries[idx].properties {
            return Err(SuiteError::CacheIncoherent {
                spec: rings[idx].0.clone(),
            });
        }
    }

    let theorems = theorems::run_all(&rings, config);
    let hunts = hunts::HUNT_IDS
        .iter()
        .map(|id| hunts::run_hunt(id, SUITE_HUNT_BUDGET, seed, config))
        .collect();

    Ok(SuiteReport {
        tool_version: TOOL_VERSION.to_string(),
        seed,
        corpus: corpus_entries,
        theorems,
        hunts,
    })
}
