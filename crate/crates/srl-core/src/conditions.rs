//! Ring conditions (1) to (6), morphic variants and P-injectivity.
//!
//! (1) abelian, (2) semicommutative, (3) symmetric, (4) Armendariz,
//! (5) power series Armendariz, (6) reduced. On a finite ring (4) and (5)
//! coincide at each degree bound, so both are decided as a bounded
//! Armendariz check up to a configured degree d: polynomial products use
//! coefficients p_0..p_d and q_0..q_d only.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::config::BuildConfig;
use crate::ring::FiniteStarRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    Abelian,
    Semicommutative,
    Symmetric,
    /// Degree bound d; witness layout is p_0..p_d, q_0..q_d, i, j.
    ArmendarizBounded(u32),
    Reduced,
    /// Every projection central, the * analogue of (1).
    StarAbelian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    /// Witness ids, layout depends on the condition: abelian (e, x) with
    /// ex != xe, semicommutative (a, r, b), symmetric (r, a, b),
    /// reduced (x) with x != 0 and x^2 = 0.
    False(Vec<u32>),
    /// Search budget exhausted (bounded Armendariz only).
    Unknown,
}

impl Verdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False(_) => Some(false),
            Verdict::Unknown => None,
        }
    }
}

pub fn decide_condition(
    ring: &FiniteStarRing,
    cond: Condition,
    config: &BuildConfig,
) -> Verdict {
    match cond {
        Condition::Abelian => noncentral_witness(ring, ring.idempotents()),
        Condition::StarAbelian => noncentral_witness(ring, ring.projections()),
        Condition::Semicommutative => {
            if ring.is_commutative() {
                return Verdict::True;
            }
            let ann = ring.ann_r_table();
            for a in ring.elements() {
                for b in ann[a as usize].iter() {
                    for r in ring.elements() {
                        if ring.mul(ring.mul(a, r), b) != 0 {
                            return Verdict::False(alloc::vec![a, r, b]);
                        }
                    }
                }
            }
            Verdict::True
        }
        Condition::Symmetric => {
            if ring.is_commutative() {
                return Verdict::True;
            }
            let ann = ring.ann_r_table();
            for r in ring.elements() {
                for a in ring.elements() {
                    let ra = ring.mul(r, a);
                    for b in ann[ra as usize].iter() {
                        if ring.mul(ring.mul(r, b), a) != 0 {
                            return Verdict::False(alloc::vec![r, a, b]);
                        }
                    }
                }
            }
            Verdict::True
        }
        Condition::Reduced => {
            match ring.elements().find(|&x| x != 0 && ring.mul(x, x) == 0) {
                Some(x) => Verdict::False(alloc::vec![x]),
                None => Verdict::True,
            }
        }
        Condition::ArmendarizBounded(d) => armendariz_bounded(ring, d, config),
    }
}

fn noncentral_witness(ring: &FiniteStarRing, pool: &[u32]) -> Verdict {
    for &e in pool {
        if !ring.center().contains(e) {
            let x = ring
                .elements()
                .find(|&x| ring.mul(e, x) != ring.mul(x, e))
                .expect("noncentral element has a noncommuting partner");
            return Verdict::False(alloc::vec![e, x]);
        }
    }
    Verdict::True
}

/// Backtracking over coefficient vectors p_0..p_d, q_0..q_d assigned in the
/// order p_0, q_0, p_1, q_1, ..; after q_m the convolution c_m is fully
/// determined and pruned on. A node budget bounds the search; exhausting it
/// yields Unknown rather than a claim.
fn armendariz_bounded(ring: &FiniteStarRing, d: u32, config: &BuildConfig) -> Verdict {
    let n = ring.order();
    let d = d as usize;
    let mut p = alloc::vec![0u32; d + 1];
    let mut q = alloc::vec![0u32; d + 1];
    let mut budget = config.armendariz_budget;

    fn conv(ring: &FiniteStarRing, p: &[u32], q: &[u32], k: usize) -> u32 {
        let mut s = 0u32;
        for i in 0..=k {
            let j = k - i;
            if i < p.len() && j < q.len() {
                s = ring.add(s, ring.mul(p[i], q[j]));
            }
        }
        s
    }

    // slot 2m is p_m, slot 2m + 1 is q_m.
    fn rec(
        ring: &FiniteStarRing,
        p: &mut [u32],
        q: &mut [u32],
        slot: usize,
        n: u32,
        budget: &mut u64,
    ) -> Result<Option<(usize, usize)>, ()> {
        let d = p.len() - 1;
        if slot == 2 * (d + 1) {
            for k in d + 1..=2 * d {
                if conv(ring, p, q, k) != 0 {
                    return Ok(None);
                }
            }
            for i in 0..=d {
                for j in 0..=d {
                    if ring.mul(p[i], q[j]) != 0 {
                        return Ok(Some((i, j)));
                    }
                }
            }
            return Ok(None);
        }
        let m = slot / 2;
        for v in 0..n {
            if *budget == 0 {
                return Err(());
            }
            *budget -= 1;
            if slot % 2 == 0 {
                p[m] = v;
            } else {
                q[m] = v;
                if conv(ring, p, q, m) != 0 {
                    continue;
                }
            }
            if let Some(hit) = rec(ring, p, q, slot + 1, n, budget)? {
                return Ok(Some(hit));
            }
        }
        if slot % 2 == 0 {
            p[m] = 0;
        } else {
            q[m] = 0;
        }
        Ok(None)
    }

    match rec(ring, &mut p, &mut q, 0, n, &mut budget) {
        Err(()) => Verdict::Unknown,
        Ok(None) => Verdict::True,
        Ok(Some((i, j))) => {
            let mut w = p;
            w.extend_from_slice(&q);
            w.push(i as u32);
            w.push(j as u32);
            Verdict::False(w)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// xR = ann_r(y) and ann_r(x) = yR for a single y (right morphic), or the
/// left-sided mirror. Lookup goes through a map from annihilator bitsets to
/// candidate ys to avoid the quadratic scan.
pub fn is_morphic(ring: &FiniteStarRing, side: Side) -> Result<(), u32> {
    let (ideals, anns) = match side {
        Side::Right => (ring.right_ideal_table(), ring.ann_r_table()),
        Side::Left => (ring.left_ideal_table(), ring.ann_l_table()),
    };
    let mut by_ann: BTreeMap<&BitSet, Vec<u32>> = BTreeMap::new();
    for y in ring.elements() {
        by_ann.entry(&anns[y as usize]).or_default().push(y);
    }
    for x in ring.elements() {
        let found = by_ann
            .get(&ideals[x as usize])
            .map(|ys| {
                ys.iter()
                    .any(|&y| ideals[y as usize] == anns[x as usize])
            })
            .unwrap_or(false);
        if !found {
            return Err(x);
        }
    }
    Ok(())
}

/// Weaker form: xR = ann_r(y) for some y and ann_r(x) = zR for some z, with
/// y and z allowed to differ.
pub fn is_quasi_morphic(ring: &FiniteStarRing, side: Side) -> Result<(), u32> {
    let (ideals, anns) = match side {
        Side::Right => (ring.right_ideal_table(), ring.ann_r_table()),
        Side::Left => (ring.left_ideal_table(), ring.ann_l_table()),
    };
    let ann_set: BTreeMap<&BitSet, ()> =
        ring.elements().map(|y| (&anns[y as usize], ())).collect();
    let ideal_set: BTreeMap<&BitSet, ()> =
        ring.elements().map(|z| (&ideals[z as usize], ())).collect();
    for x in ring.elements() {
        if !ann_set.contains_key(&ideals[x as usize])
            || !ideal_set.contains_key(&anns[x as usize])
        {
            return Err(x);
        }
    }
    Ok(())
}

/// Left P-injective: every module map Rx -> R extends to R, equivalently
/// ann_r(ann_l(x)) = xR for all x. Right P-injective is the mirror.
pub fn is_p_injective(ring: &FiniteStarRing, side: Side) -> Result<(), u32> {
    let (ideals, anns, other_anns) = match side {
        Side::Left => (ring.right_ideal_table(), ring.ann_l_table(), ring.ann_r_table()),
        Side::Right => (ring.left_ideal_table(), ring.ann_r_table(), ring.ann_l_table()),
    };
    for x in ring.elements() {
        // ann of a set is the intersection of elementwise anns; xR is always
        // contained, so equality reduces to a cardinality check.
        let mut double = BitSet::full(ring.order());
        for s in anns[x as usize].iter() {
            double.intersect_with(&other_anns[s as usize]);
            if double.count() == ideals[x as usize].count() {
                break;
            }
        }
        if double != ideals[x as usize] {
            return Err(x);
        }
    }
    Ok(())
}

/// Literal restatement of P-injectivity as hom extension: each candidate
/// image c of x that gives a well defined map on the principal ideal must be
/// realized by a multiplication. Used to cross check is_p_injective on rings
/// of order at most the given cap.
pub fn p_injective_hom_oracle(ring: &FiniteStarRing, side: Side, cap: u32) -> Option<bool> {
    if ring.order() > cap {
        return None;
    }
    let ok = ring.elements().all(|x| {
        ring.elements().all(|c| {
            let well_defined = match side {
                // f(rx) = rc well defined iff ann_l(x) kills c.
                Side::Left => ring
                    .elements()
                    .all(|r| ring.mul(r, x) != 0 || ring.mul(r, c) == 0),
                Side::Right => ring
                    .elements()
                    .all(|r| ring.mul(x, r) != 0 || ring.mul(c, r) == 0),
            };
            if !well_defined {
                return true;
            }
            match side {
                // extension by right multiplication: c = xa for some a.
                Side::Left => ring.elements().any(|a| ring.mul(x, a) == c),
                Side::Right => ring.elements().any(|a| ring.mul(a, x) == c),
            }
        })
    });
    Some(ok)
}

/// Module-theoretic oracle for right morphic at a single element:
/// R/xR and ann_r(x) are compared as right R modules through explicit coset
/// tables. R/xR is cyclic, so candidate isomorphisms are indexed by the
/// image of the generator 1 + xR. None when the ring exceeds the cap.
pub fn module_iso_oracle(ring: &FiniteStarRing, x: u32, cap: u32) -> Option<bool> {
    if ring.order() > cap {
        return None;
    }
    let ideal = &ring.right_ideal_table()[x as usize];
    let ann = &ring.ann_l_table()[x as usize];
    let _ = ann;
    let ann_r = &ring.ann_r_table()[x as usize];
    // Coset representative: least element of a + xR.
    let rep = |a: u32| -> u32 {
        ideal.iter().map(|t| ring.add(a, t)).min().unwrap()
    };
    let cosets: Vec<u32> = {
        let mut v: Vec<u32> = ring.elements().map(rep).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    if cosets.len() != ann_r.count() as usize {
        return Some(false);
    }
    for m in ann_r.iter() {
        // well defined: m kills xR.
        if !ideal.iter().all(|t| ring.mul(m, t) == 0) {
            continue;
        }
        // phi(a + xR) = m a; bijectivity onto ann_r(x) via the image set.
        let mut image: Vec<u32> = cosets.iter().map(|&a| ring.mul(m, a)).collect();
        image.sort_unstable();
        image.dedup();
        if image.len() == cosets.len() && image.iter().all(|v| ann_r.contains(*v)) {
            return Some(true);
        }
    }
    Some(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphicProfile {
    pub regular: bool,
    pub unit_regular: bool,
    pub left_morphic: bool,
    pub right_morphic: bool,
    pub left_quasi_morphic: bool,
    pub right_quasi_morphic: bool,
    pub left_p_injective: bool,
    pub right_p_injective: bool,
}

pub fn morphic_profile(ring: &FiniteStarRing) -> MorphicProfile {
    let (reg, _) = crate::clean::decide_regularity(ring);
    MorphicProfile {
        regular: reg.regular,
        unit_regular: reg.unit_regular,
        left_morphic: is_morphic(ring, Side::Left).is_ok(),
        right_morphic: is_morphic(ring, Side::Right).is_ok(),
        left_quasi_morphic: is_quasi_morphic(ring, Side::Left).is_ok(),
        right_quasi_morphic: is_quasi_morphic(ring, Side::Right).is_ok(),
        left_p_injective: is_p_injective(ring, Side::Left).is_ok(),
        right_p_injective: is_p_injective(ring, Side::Right).is_ok(),
    }
}

#[derive(Clone, Debug)]
pub struct ImplicationResult {
    pub name: &'static str,
    pub holds: bool,
}

/// Implications from the morphic and P-injectivity literature that hold in
/// every ring, checked concretely on this instance:
/// right morphic => left P-injective, left quasi-morphic => right
/// P-injective, morphic => quasi-morphic (per side), unit regular =>
/// regular, and regular => morphic on both sides.
pub fn literature_implications(ring: &FiniteStarRing) -> Vec<ImplicationResult> {
    let p = morphic_profile(ring);
    let imp = |a: bool, b: bool| !a || b;
    alloc::vec![
        ImplicationResult {
            name: "right morphic => left P-injective",
            holds: imp(p.right_morphic, p.left_p_injective),
        },
        ImplicationResult {
            name: "left morphic => right P-injective",
            holds: imp(p.left_morphic, p.right_p_injective),
        },
        ImplicationResult {
            name: "left quasi-morphic => right P-injective",
            holds: imp(p.left_quasi_morphic, p.right_p_injective),
        },
        ImplicationResult {
            name: "right quasi-morphic => left P-injective",
            holds: imp(p.right_quasi_morphic, p.left_p_injective),
        },
        ImplicationResult {
            name: "left morphic => left quasi-morphic",
            holds: imp(p.left_morphic, p.left_quasi_morphic),
        },
        ImplicationResult {
            name: "right morphic => right quasi-morphic",
            holds: imp(p.right_morphic, p.right_quasi_morphic),
        },
        ImplicationResult {
            name: "unit regular => regular",
            holds: imp(p.unit_regular, p.regular),
        },
        ImplicationResult {
            name: "regular => left and right morphic",
            holds: imp(p.regular, p.left_morphic && p.right_morphic),
        },
    ]
}

#[derive(Clone, Debug)]
pub struct ConditionsEquivalence {
    pub verdicts: Vec<(Condition, Verdict)>,
    /// True when every decided condition has the same truth value; None
    /// when some verdict was Unknown and the rest agree.
    pub equivalent: Option<bool>,
}

/// Conditions (1), (2), (3), (4 bounded) and (6) evaluated together; on a
/// right Rickart ring they must all agree.
pub fn conditions_equivalence_check(
    ring: &FiniteStarRing,
    degree: u32,
    config: &BuildConfig,
) -> ConditionsEquivalence {
    let conds = [
        Condition::Abelian,
        Condition::Semicommutative,
        Condition::Symmetric,
        Condition::ArmendarizBounded(degree),
        Condition::Reduced,
    ];
    let verdicts: Vec<(Condition, Verdict)> = conds
        .iter()
        .map(|&c| (c, decide_condition(ring, c, config)))
        .collect();
    let bools: Vec<Option<bool>> = verdicts.iter().map(|(_, v)| v.as_bool()).collect();
    let known: Vec<bool> = bools.iter().filter_map(|b| *b).collect();
    let agree = known.windows(2).all(|w| w[0] == w[1]);
    let equivalent = if bools.iter().any(|b| b.is_none()) {
        if agree {
            None
        } else {
            Some(false)
        }
    } else {
        Some(agree)
    };
    ConditionsEquivalence {
        verdicts,
        equivalent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::RingExpr;
    use crate::ring::build_ring;
    use alloc::boxed::Box;
    use alloc::rc::Rc;

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn zmod(n: u32) -> Rc<FiniteStarRing> {
        build_ring(&RingExpr::Zmod { n }, &cfg()).unwrap()
    }

    fn m2f2() -> Rc<FiniteStarRing> {
        build_ring(
            &RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
            },
            &cfg(),
        )
        .unwrap()
    }

    #[test]
    fn commutative_rings_satisfy_one_two_three() {
        let z6 = zmod(6);
        for c in [Condition::Abelian, Condition::Semicommutative, Condition::Symmetric] {
            assert_eq!(decide_condition(&z6, c, &cfg()), Verdict::True);
        }
        assert_eq!(decide_condition(&z6, Condition::Reduced, &cfg()), Verdict::True);
        // 2^2 = 0 in Z4.
        assert_eq!(
            decide_condition(&zmod(4), Condition::Reduced, &cfg()),
            Verdict::False(alloc::vec![2])
        );
    }

    #[test]
    fn matrix_ring_fails_all_conditions() {
        let m = m2f2();
        for c in [
            Condition::Abelian,
            Condition::Semicommutative,
            Condition::Symmetric,
            Condition::ArmendarizBounded(2),
            Condition::Reduced,
            Condition::StarAbelian,
        ] {
            match decide_condition(&m, c, &cfg()) {
                Verdict::False(w) => {
                    assert!(!w.is_empty());
                    if let Condition::Semicommutative = c {
                        // ab = 0 but arb != 0 re-verified.
                        let (a, r, b) = (w[0], w[1], w[2]);
                        assert_eq!(m.mul(a, b), 0);
                        assert_ne!(m.mul(m.mul(a, r), b), 0);
                    }
                }
                v => panic!("expected False for {:?}, got {:?}", c, v),
            }
        }
    }

    #[test]
    fn armendariz_witness_reverifies() {
        let m = m2f2();
        match decide_condition(&m, Condition::ArmendarizBounded(1), &cfg()) {
            Verdict::False(w) => {
                // layout: p0 p1 q0 q1 i j.
                let (p, q) = (&w[0..2], &w[2..4]);
                assert_eq!(m.mul(p[0], q[0]), 0);
                assert_eq!(m.add(m.mul(p[0], q[1]), m.mul(p[1], q[0])), 0);
                assert_eq!(m.mul(p[1], q[1]), 0);
                let (i, j) = (w[4] as usize, w[5] as usize);
                assert_ne!(m.mul(p[i], q[j]), 0);
            }
            v => panic!("expected counterexample, got {:?}", v),
        }
    }

    #[test]
    fn fields_are_armendariz_bounded() {
        let f4 = build_ring(&RingExpr::FiniteField { p: 2, k: 2, frob: 0 }, &cfg()).unwrap();
        assert_eq!(
            decide_condition(&f4, Condition::ArmendarizBounded(2), &cfg()),
            Verdict::True
        );
        // Z4 is commutative and Armendariz (local ring with nil maximal
        // ideal of square zero at degree 1 has no counterexample).
        assert_eq!(
            decide_condition(&zmod(4), Condition::ArmendarizBounded(2), &cfg()),
            Verdict::True
        );
    }

    #[test]
    fn tight_budget_reports_unknown() {
        let mut c = cfg();
        c.armendariz_budget = 10;
        let z6 = zmod(6);
        assert_eq!(
            decide_condition(&z6, Condition::ArmendarizBounded(3), &c),
            Verdict::Unknown
        );
    }

    #[test]
    fn morphic_profiles() {
        // Z6 is regular, hence morphic on both sides.
        let p6 = morphic_profile(&zmod(6));
        assert!(p6.regular && p6.left_morphic && p6.right_morphic);
        assert!(p6.left_quasi_morphic && p6.right_quasi_morphic);
        assert!(p6.left_p_injective && p6.right_p_injective);
        // Z4 is morphic (Zn always is) but not regular.
        let p4 = morphic_profile(&zmod(4));
        assert!(!p4.regular && p4.left_morphic && p4.right_morphic);
        // M2(F2) is regular, so morphic.
        let pm = morphic_profile(&m2f2());
        assert!(pm.regular && pm.left_morphic && pm.right_morphic);
    }

    #[test]
    fn literature_implications_hold_on_corpus()
    {
        for ring in [zmod(4), zmod(6), zmod(8), zmod(9), m2f2()] {
            for imp in literature_implications(&ring) {
                assert!(imp.holds, "{} failed on order {}", imp.name, ring.order());
            }
        }
    }

    #[test]
    fn oracles_agree() {
        for ring in [zmod(4), zmod(6), zmod(12), m2f2()] {
            for side in [Side::Left, Side::Right] {
                let fast = is_p_injective(&ring, side).is_ok();
                let slow = p_injective_hom_oracle(&ring, side, 64).unwrap();
                assert_eq!(fast, slow, "p-injective mismatch");
            }
            let fast = is_morphic(&ring, Side::Right).is_ok();
            let slow = ring
                .elements()
                .all(|x| module_iso_oracle(&ring, x, 512).unwrap());
            assert_eq!(fast, slow, "morphic mismatch on order {}", ring.order());
        }
    }

    #[test]
    fn conditions_equivalence_on_rickart_instances() {
        // Z6 and M2(F2) are right Rickart; conditions must agree within
        // each (all true for Z6, all false for the matrix ring).
        let e6 = conditions_equivalence_check(&zmod(6), 2, &cfg());
        assert_eq!(e6.equivalent, Some(true));
        let em = conditions_equivalence_check(&m2f2(), 2, &cfg());
        assert_eq!(em.equivalent, Some(true));
    }
}
