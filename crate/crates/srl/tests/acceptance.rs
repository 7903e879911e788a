//! Acceptance gate: ten criteria, one pass/fail line each. Every expected
//! value is re-derived here by an independent brute-force oracle before
//! being compared with the decision procedures.

use std::rc::Rc;
use std::time::{Duration, Instant};

use srl::parse::parse_ring_spec;
use srl::{corpus, props, theorems, verify};
use srl_core::classify::{self, RingClass};
use srl_core::{axioms, clean, conditions, lattice, BuildConfig, FiniteStarRing};

fn build(spec: &str, config: &BuildConfig) -> Rc<FiniteStarRing> {
    let expr = parse_ring_spec(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
    srl_core::build_ring(&expr, config).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

fn build_corpus(config: &BuildConfig) -> Vec<(String, Rc<FiniteStarRing>)> {
    corpus::default_corpus()
        .iter()
        .map(|s| {
            let expr = parse_ring_spec(s).unwrap();
            (expr.print(), srl_core::build_ring(&expr, config).unwrap())
        })
        .collect()
}

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn check(&mut self, n: u32, name: &str, ok: bool, detail: String) {
        if ok {
            println!("criterion {n:2} PASS  {name}");
        } else {
            println!("criterion {n:2} FAIL  {name}: {detail}");
            self.failures.push(format!("{n}: {name}: {detail}"));
        }
    }
}

/// Brute-force right-morphic decision for one element: some y with
/// xR = ann_r(y) and ann_r(x) = yR.
fn element_right_morphic(ring: &FiniteStarRing, x: u32) -> bool {
    let xr: Vec<bool> = image_right(ring, x);
    let annx: Vec<bool> = ann_right(ring, x);
    ring.elements().any(|y| {
        let anny = ann_right(ring, y);
        let yr = image_right(ring, y);
        xr == anny && annx == yr
    })
}

fn image_right(ring: &FiniteStarRing, x: u32) -> Vec<bool> {
    let mut v = vec![false; ring.order() as usize];
    for r in ring.elements() {
        v[ring.mul(x, r) as usize] = true;
    }
    v
}

fn ann_right(ring: &FiniteStarRing, x: u32) -> Vec<bool> {
    ring.elements().map(|r| ring.mul(x, r) == 0).collect()
}

#[test]
fn acceptance() {
    let cache_dir = tempfile::tempdir().unwrap();
    std::env::set_var(srl::cache::CACHE_DIR_ENV, cache_dir.path());
    let config = BuildConfig::default();
    let mut gate = Gate { failures: Vec::new() };
    let rings = build_corpus(&config);

    // 1. Camillo-Khurana equivalence on every member of order <= 512.
    let started = Instant::now();
    let mut ck_disagreements = Vec::new();
    let mut ck_checked = 0;
    for (spec, ring) in &rings {
        if ring.order() > 512 {
            continue;
        }
        ck_checked += 1;
        if let clean::CkOutcome::Disagree { element, .. } = clean::ck_equivalence_check(ring) {
            ck_disagreements.push(format!("{spec} at {element}"));
        }
    }
    let ck_time = started.elapsed();
    gate.check(
        1,
        "Camillo-Khurana equivalence",
        ck_disagreements.is_empty() && ck_time <= Duration::from_secs(60) && ck_checked > 0,
        format!("{ck_disagreements:?} in {ck_time:?} over {ck_checked} rings"),
    );

    // 2. Abelian lemma suite: zero counterexamples, >= 5 hypothesis rings.
    let l3 = theorems::run_theorem("L-ABELIAN-3", &rings, &config);
    let abelian_entries = ["L-ABELIAN-1", "L-ABELIAN-2", "L-ABELIAN-4"]
        .iter()
        .map(|id| theorems::run_theorem(id, &rings, &config))
        .chain(std::iter::once(l3.clone()))
        .collect::<Vec<_>>();
    let abelian_ok = abelian_entries.iter().all(|t| t.counterexamples.is_empty());
    gate.check(
        2,
        "abelian lemma suite",
        abelian_ok && l3.hypothesis_count >= 5,
        format!(
            "counterexamples {:?}, hypothesisCount {}",
            abelian_entries
                .iter()
                .map(|t| t.counterexamples.len())
                .collect::<Vec<_>>(),
            l3.hypothesis_count
        ),
    );

    // 3. Clean regular proposition: zero failures, >= 3 hypothesis rings.
    let cleanreg = theorems::run_theorem("P-CLEANREG", &rings, &config);
    gate.check(
        3,
        "clean regular proposition",
        cleanreg.counterexamples.is_empty() && cleanreg.hypothesis_count >= 3,
        format!(
            "counterexamples {}, hypothesisCount {}",
            cleanreg.counterexamples.len(),
            cleanreg.hypothesis_count
        ),
    );

    // 4. Fixed-instance regressions, each value re-derived by brute force.
    let mut reg4 = Vec::new();
    {
        let z6 = build("Z(6)", &config);
        let (r, _) = clean::decide_regularity(&z6);
        if !(r.regular && r.unit_regular) {
            reg4.push("Z(6) regularity".into());
        }
        if !classify::is_ring_class(&z6, RingClass::BaerStar).holds() {
            reg4.push("Z(6) Baer *".into());
        }
        if clean::is_clean_variant(&z6, clean::STAR_CLEAN).is_err() {
            reg4.push("Z(6) *-clean".into());
        }
        match axioms::type_decompose(&z6, &config) {
            Ok(dec) => {
                // Type I_1: abelian type I, every homogeneous piece of order 1.
                if !(dec.c_i == z6.one()
                    && dec.i_f
                    && dec.verified
                    && dec.homogeneous.iter().all(|h| h.order == 1))
                {
                    reg4.push("Z(6) type I_1".into());
                }
            }
            Err(_) => reg4.push("Z(6) type decomposition".into()),
        }

        let z4 = build("Z(4)", &config);
        if clean::is_clean_variant(&z4, clean::CLEAN).is_err() {
            reg4.push("Z(4) clean".into());
        }
        match classify::is_ring_class(&z4, RingClass::RightRickart) {
            classify::ClassVerdict::Fails { witness } if witness == vec![2] => {}
            v => reg4.push(format!("Z(4) right Rickart verdict {v:?}")),
        }
        // Oracle: ann_r(2) = {0, 2}; the idempotents of Z(4) are 0 and 1
        // and neither generates {0, 2} as a right ideal.
        let ann2: Vec<u32> = z4.elements().filter(|&r| z4.mul(2, r) == 0).collect();
        let idempotents_generate = z4
            .elements()
            .filter(|&e| z4.mul(e, e) == e)
            .any(|e| {
                let mut ideal: Vec<u32> = z4.elements().map(|r| z4.mul(e, r)).collect();
                ideal.sort_unstable();
                ideal.dedup();
                ideal == ann2
            });
        if ann2 != vec![0, 2] || idempotents_generate {
            reg4.push("Z(4) right Rickart oracle".into());
        }
        for side in [conditions::Side::Left, conditions::Side::Right] {
            if conditions::is_morphic(&z4, side).is_err() {
                reg4.push("Z(4) morphic".into());
            }
            if conditions::is_p_injective(&z4, side).is_err() {
                reg4.push("Z(4) P-injective".into());
            }
        }
        if clean::decide_regularity(&z4).0.regular {
            reg4.push("Z(4) should not be regular".into());
        }

        let m2f2 = build("M(2,GF(2,1))", &config);
        // [[1,1],[1,1]] has id 15; oracle: x != 0 and x*x = 0.
        let x = 15u32;
        if !(classify::involution_is_proper(&m2f2).is_err()
            && x != 0
            && m2f2.mul(m2f2.star(x), x) == 0)
        {
            reg4.push("M2(F2) improper involution".into());
        }
        let (r2, _) = clean::decide_regularity(&m2f2);
        if !r2.unit_regular {
            reg4.push("M2(F2) unit-regular".into());
        }
        if clean::is_clean_variant(&m2f2, clean::STAR_CLEAN).is_err() {
            reg4.push("M2(F2) *-clean".into());
        }
        if classify::is_ring_class(&m2f2, RingClass::RickartStar).holds() {
            reg4.push("M2(F2) should not be Rickart *".into());
        }

        let m2f3 = build("M(2,GF(3,1))", &config);
        if classify::involution_is_proper(&m2f3).is_err() {
            reg4.push("M2(F3) proper involution".into());
        }
        if !classify::is_ring_class(&m2f3, RingClass::BaerStar).holds() {
            reg4.push("M2(F3) Baer *".into());
        }
        match axioms::type_decompose(&m2f3, &config) {
            Ok(dec) => {
                // Type I_2 with partition {e11 = 1, e22 = 27}; e21 = 9 is an
                // equivalence witness: e21* e21 = e11 and e21 e21* = e22.
                let ok_partition = dec.homogeneous.len() == 1
                    && dec.homogeneous[0].order == 2
                    && dec.homogeneous[0].partition == vec![1, 27];
                let e21 = 9u32;
                let ok_witness = m2f3.mul(m2f3.star(e21), e21) == 1
                    && m2f3.mul(e21, m2f3.star(e21)) == 27;
                if !(ok_partition && ok_witness && dec.verified) {
                    reg4.push("M2(F3) type I_2".into());
                }
            }
            Err(_) => reg4.push("M2(F3) type decomposition".into()),
        }
        // EP fails; x = [[1,1],[1,2]] has id 67 and is a failing instance.
        // Oracle: x*x = 2I is central, so its bicommutant is the center;
        // brute-force both commutants and scan every in-scope y.
        let report = axioms::check_all_axioms(&m2f3);
        let ep_fails = matches!(
            report.verdict(axioms::AxiomId::A2Ep),
            axioms::AxiomVerdict::Fails { .. }
        );
        let x = 67u32;
        let xsx = m2f3.mul(m2f3.star(x), x);
        let commutant: Vec<u32> = m2f3
            .elements()
            .filter(|&c| m2f3.mul(c, xsx) == m2f3.mul(xsx, c))
            .collect();
        let bicommutant: Vec<u32> = m2f3
            .elements()
            .filter(|&y| commutant.iter().all(|&c| m2f3.mul(y, c) == m2f3.mul(c, y)))
            .collect();
        let ep_oracle = !bicommutant.iter().any(|&y| {
            m2f3.star(y) == y && {
                let p = m2f3.mul(xsx, m2f3.mul(y, y));
                p != 0 && m2f3.is_projection(p)
            }
        });
        if !(ep_fails && ep_oracle) {
            reg4.push("M2(F3) EP failure".into());
        }

        let z3i = build("Quot(Z(3),x^2+1,-x)", &config);
        let rep = axioms::check_all_axioms(&z3i);
        if rep.verdict(axioms::AxiomId::A5) != &axioms::AxiomVerdict::Holds {
            reg4.push("Z3[i] A5".into());
        }
        // 1 + i has id 4; 1 + (1+i)*(1+i) = 1 + 2 = 0 is not a unit.
        match rep.verdict(axioms::AxiomId::A4) {
            axioms::AxiomVerdict::Fails { witness } if witness == &vec![4] => {
                let v = z3i.add(z3i.one(), z3i.mul(z3i.star(4), 4));
                if z3i.is_unit(v) {
                    reg4.push("Z3[i] A4 oracle".into());
                }
            }
            v => reg4.push(format!("Z3[i] A4 verdict {v:?}")),
        }

        let z7 = build("Z(7)", &config);
        if axioms::check_all_axioms(&z7).verdict(axioms::AxiomId::A4) != &axioms::AxiomVerdict::Holds
        {
            reg4.push("Z(7) A4".into());
        }
    }
    gate.check(4, "fixed-instance regressions", reg4.is_empty(), format!("{reg4:?}"));

    // 5. M2(Z(6)), order 1296, is *-clean within 10 s.
    let m2z6 = build("M(2,Z(6))", &config);
    let started = Instant::now();
    let star_clean = clean::is_clean_variant(&m2z6, clean::STAR_CLEAN).is_ok();
    let t5 = started.elapsed();
    gate.check(
        5,
        "M2(Z6) *-clean in <= 10 s",
        star_clean && m2z6.order() == 1296 && t5 <= Duration::from_secs(10),
        format!("star-clean {star_clean} in {t5:?}"),
    );

    // 6. Peirce decomposition of Z(6) through {3, 4} into orders 2 and 3.
    {
        let z6 = build("Z(6)", &config);
        let dec = lattice::peirce_central_decompose(&z6, &config);
        let mut pieces: Vec<(u32, u32)> =
            dec.parts.iter().map(|(p, c)| (*p, c.order())).collect();
        pieces.sort_unstable();
        gate.check(
            6,
            "Peirce decomposition of Z(6)",
            dec.verified && pieces == vec![(3, 2), (4, 3)],
            format!("verified {}, pieces {pieces:?}", dec.verified),
        );
    }

    // 7. Morphic corollary and literature equivalences on every corpus
    // ring; C-MORPHIC vacuity must be reported, never silent.
    let mut lit_violations = Vec::new();
    for (spec, ring) in &rings {
        if ring.order() > 4096 {
            continue;
        }
        let p = conditions::morphic_profile(ring);
        if p.unit_regular != (p.regular && p.right_morphic) {
            lit_violations.push(format!("{spec}: unit-regular equivalence"));
        }
        for imp in conditions::literature_implications(ring) {
            if !imp.holds {
                lit_violations.push(format!("{spec}: {}", imp.name));
            }
        }
    }
    let cm = theorems::run_theorem("C-MORPHIC", &rings, &config);
    let cm_reported = cm.vacuous == (cm.hypothesis_count == 0) && cm.axiom_subsets.is_some();
    gate.check(
        7,
        "morphic corollary and literature equivalences",
        lit_violations.is_empty() && cm_reported,
        format!("violations {lit_violations:?}, C-MORPHIC hypothesisCount {}", cm.hypothesis_count),
    );

    // 8. Oracle cross-validation on all corpus rings of order <= 64.
    let mut oracle_disagreements = Vec::new();
    for (spec, ring) in &rings {
        if ring.order() > 64 {
            continue;
        }
        for x in ring.elements() {
            let fast = element_right_morphic(ring, x);
            match conditions::module_iso_oracle(ring, x, 64) {
                Some(oracle) if oracle == fast => {}
                Some(_) => oracle_disagreements.push(format!("{spec} morphic at {x}")),
                None => oracle_disagreements.push(format!("{spec} oracle declined at {x}")),
            }
        }
        for side in [conditions::Side::Left, conditions::Side::Right] {
            let fast = conditions::is_p_injective(ring, side).is_ok();
            match conditions::p_injective_hom_oracle(ring, side, 64) {
                Some(oracle) if oracle == fast => {}
                Some(_) => oracle_disagreements.push(format!("{spec} P-injective {side:?}")),
                None => oracle_disagreements.push(format!("{spec} hom oracle declined")),
            }
        }
    }
    gate.check(
        8,
        "oracle cross-validation",
        oracle_disagreements.is_empty(),
        format!("{oracle_disagreements:?}"),
    );

    // 9 & 10. Two full suite runs: byte-identical JSON, witnesses
    // re-verify, and the wall clock stays inside five minutes per run.
    let specs = corpus::default_corpus();
    let started = Instant::now();
    let report_a = srl::run_suite(&specs, 0, &config).expect("suite runs");
    let suite_time = started.elapsed();
    let report_b = srl::run_suite(&specs, 0, &config).expect("suite runs twice");
    let identical = report_a.to_json() == report_b.to_json();
    let problems = verify::verify_report(&report_a, &config);
    gate.check(
        9,
        "determinism and witness round-trip",
        identical && problems.is_empty(),
        format!("identical {identical}, problems {problems:?}"),
    );
    gate.check(
        10,
        "performance envelope",
        rings.len() >= 30 && suite_time <= Duration::from_secs(300),
        format!("corpus {}, suite in {suite_time:?}", rings.len()),
    );

    // Corpus property table sanity shared by several criteria: properties
    // must at least be computed for every member (possibly null-heavy).
    assert_eq!(report_a.corpus.len(), rings.len());
    for entry in &report_a.corpus {
        let fresh = props::compute_properties(
            &rings.iter().find(|(s, _)| *s == entry.spec).unwrap().1,
        );
        assert_eq!(fresh, entry.properties, "properties drift for {}", entry.spec);
    }

    assert!(gate.failures.is_empty(), "acceptance failures: {:?}", gate.failures);
}
