//! Counterexample hunts over a randomized stream of small rings. Findings
//! are certificates, never proofs of nonexistence; exhausting the budget
//! with no findings is the normal outcome.

use srl_core::classify::{self, RingClass};
use srl_core::{axioms, clean, lattice, BuildConfig};
use srl_core::FiniteStarRing;

use crate::corpus;
use crate::parse::parse_ring_spec;
use crate::report::{Finding, HuntEntry};

pub const HUNT_IDS: [&str; 4] = ["Q1", "Q2", "Q3proxy", "Q4"];

/// Rings above this order are skipped by every hunt.
const HUNT_ORDER_CAP: u32 = 512;

/// The question's pattern on one ring; Some(finding) when the ring is a
/// hit. Exposed so `srl verify` can replay serialized findings.
pub fn hunt_pattern(
    id: &str,
    ring: &std::rc::Rc<FiniteStarRing>,
    config: &BuildConfig,
) -> Option<(Vec<u32>, String)> {
    match id {
        // Clean but not *-clean.
        "Q1" => match clean::is_clean_variant(ring, clean::CLEAN) {
            Err(_) => None,
            Ok(()) => match clean::is_clean_variant(ring, clean::STAR_CLEAN) {
                Ok(()) => None,
                Err(a) => Some((vec![a], "clean, but this element is not *-clean".into())),
            },
        },
        // Finite analogue of: Baer *-ring with A1-A6 of type I_f, clean but
        // not regular.
        "Q2" => {
            if !classify::is_ring_class(ring, RingClass::BaerStar).holds()
                || !axioms::check_all_axioms(ring).a1_to_a6()
            {
                return None;
            }
            let dec = axioms::type_decompose(ring, config).ok()?;
            if !dec.i_f || clean::is_clean_variant(ring, clean::CLEAN).is_err() {
                return None;
            }
            let (reg, fails) = clean::decide_regularity(ring);
            if reg.regular {
                None
            } else {
                Some((
                    vec![fails[0].unwrap()],
                    "Baer *, A1-A6, type I_f, clean, but this element is not regular".into(),
                ))
            }
        }
        // Proxy: a finite Baer *-ring with a nonzero type II part.
        "Q3proxy" => {
            if !classify::is_ring_class(ring, RingClass::BaerStar).holds() {
                return None;
            }
            let dec = axioms::type_decompose(ring, config).ok()?;
            if dec.c_ii != 0 {
                Some((vec![dec.c_ii], "Baer *-ring with nonzero type II part".into()))
            } else {
                None
            }
        }
        // Unit-regular and *-regular but not strongly *-clean.
        "Q4" => {
            let (reg, _) = clean::decide_regularity(ring);
            if !(reg.unit_regular && reg.star_regular) {
                return None;
            }
            match clean::is_clean_variant(ring, clean::STRONGLY_STAR_CLEAN) {
                Ok(()) => None,
                Err(a) => Some((
                    vec![a],
                    "unit-regular and *-regular, element not strongly *-clean".into(),
                )),
            }
        }
        _ => None,
    }
}

pub fn run_hunt(id: &str, budget: u32, seed: u64, config: &BuildConfig) -> HuntEntry {
    let mut entry = HuntEntry {
        id: id.to_string(),
        budget,
        examined: 0,
        skipped: 0,
        findings: Vec::new(),
    };
    for spec in corpus::hunt_stream(seed, budget as usize) {
        let Ok(expr) = parse_ring_spec(&spec) else {
            entry.skipped += 1;
            continue;
        };
        let Ok(ring) = srl_core::build_ring(&expr, config) else {
            entry.skipped += 1;
            continue;
        };
        if ring.order() > HUNT_ORDER_CAP {
            entry.skipped += 1;
            continue;
        }
        // Q1 has no finding on abelian Rickart *-rings (clean and *-clean
        // coincide there), so that subclass is skipped, and counted.
        if id == "Q1"
            && lattice::is_abelian(&ring)
            && classify::is_ring_class(&ring, RingClass::RickartStar).holds()
        {
            entry.skipped += 1;
            continue;
        }
        entry.examined += 1;
        if let Some((witness, note)) = hunt_pattern(id, &ring, config) {
            let rendered = witness.iter().map(|&x| ring.render(x)).collect();
            entry.findings.push(Finding {
                spec: expr.print(),
                witness,
                rendered,
                note,
            });
        }
    }
    entry
}
