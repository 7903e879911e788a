//! Clean decompositions a = t + e and their variants.
//!
//! The additive part t ranges over units or regular elements, e over
//! idempotents or projections, optionally with te = et (strongly) or
//! aR ∩ eR = 0 (the unit-regular characterization: a is unit regular
//! iff a = u + e with u a unit, e idempotent and aR ∩ eR = 0).

use alloc::rc::Rc;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::config::BuildConfig;
use crate::lattice;
use crate::ring::{self, FiniteStarRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdditivePart {
    Unit,
    Regular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentPart {
    Idempotent,
    Projection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CleanMode {
    pub additive: AdditivePart,
    pub idempotent: IdempotentPart,
    pub require_commute: bool,
    pub require_intersection_zero: bool,
}

pub const CLEAN: CleanMode = CleanMode {
    additive: AdditivePart::Unit,
    idempotent: IdempotentPart::Idempotent,
    require_commute: false,
    require_intersection_zero: false,
};

pub const STAR_CLEAN: CleanMode = CleanMode {
    idempotent: IdempotentPart::Projection,
    ..CLEAN
};

pub const STRONGLY_CLEAN: CleanMode = CleanMode {
    require_commute: true,
    ..CLEAN
};

pub const STRONGLY_STAR_CLEAN: CleanMode = CleanMode {
    idempotent: IdempotentPart::Projection,
    require_commute: true,
    ..CLEAN
};

pub const ALMOST_CLEAN: CleanMode = CleanMode {
    additive: AdditivePart::Regular,
    ..CLEAN
};

pub const ALMOST_STAR_CLEAN: CleanMode = CleanMode {
    additive: AdditivePart::Regular,
    idempotent: IdempotentPart::Projection,
    ..CLEAN
};

pub const SPECIAL_CLEAN: CleanMode = CleanMode {
    require_intersection_zero: true,
    ..CLEAN
};

pub const SPECIAL_STAR_CLEAN: CleanMode = CleanMode {
    idempotent: IdempotentPart::Projection,
    require_intersection_zero: true,
    ..CLEAN
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CleanWitness {
    pub element: u32,
    pub additive: u32,
    pub idempotent: u32,
    pub commutes: bool,
    pub intersection_zero: bool,
}

fn additive_ok(ring: &FiniteStarRing, t: u32, mode: CleanMode) -> bool {
    match mode.additive {
        AdditivePart::Unit => ring.is_unit(t),
        AdditivePart::Regular => ring.is_regular_element(t),
    }
}

fn idem_ok(ring: &FiniteStarRing, e: u32, mode: CleanMode) -> bool {
    match mode.idempotent {
        IdempotentPart::Idempotent => ring.mul(e, e) == e,
        IdempotentPart::Projection => ring.is_projection(e),
    }
}

fn intersection_zero(ring: &FiniteStarRing, a: u32, e: u32) -> bool {
    let ideals = ring.right_ideal_table();
    ideals[a as usize]
        .intersection(&ideals[e as usize])
        .is_zero_singleton()
}

/// First decomposition of a in the given mode, scanning idempotents by
/// ascending id. The returned witness has both parts re-verified.
pub fn decomposition_witness(
    ring: &FiniteStarRing,
    a: u32,
    mode: CleanMode,
) -> Option<CleanWitness> {
    let pool: &Vec<u32> = match mode.idempotent {
        IdempotentPart::Idempotent => ring.idempotents(),
        IdempotentPart::Projection => ring.projections(),
    };
    for &e in pool {
        let t = ring.sub(a, e);
        if !additive_ok(ring, t, mode) {
            continue;
        }
        let commutes = ring.mul(t, e) == ring.mul(e, t);
        if mode.require_commute && !commutes {
            continue;
        }
        let inter = intersection_zero(ring, a, e);
        if mode.require_intersection_zero && !inter {
            continue;
        }
        debug_assert!(idem_ok(ring, e, mode));
        debug_assert_eq!(ring.add(t, e), a);
        return Some(CleanWitness {
            element: a,
            additive: t,
            idempotent: e,
            commutes,
            intersection_zero: inter,
        });
    }
    None
}

/// Whether every element decomposes; on failure the least element with no
/// decomposition is returned.
pub fn is_clean_variant(ring: &FiniteStarRing, mode: CleanMode) -> Result<(), u32> {
    for a in ring.elements() {
        if decomposition_witness(ring, a, mode).is_none() {
            return Err(a);
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    /// a = axa.
    pub inner: u32,
}

/// Von Neumann regularity of a single element: a = axa for some x.
pub fn regular_witness(ring: &FiniteStarRing, a: u32) -> Option<RegularityWitness> {
    (0..ring.order())
        .find(|&x| ring.mul(ring.mul(a, x), a) == a)
        .map(|inner| RegularityWitness { inner })
}

/// a = aua for a unit u.
pub fn unit_regular_witness(ring: &FiniteStarRing, a: u32) -> Option<RegularityWitness> {
    ring.units()
        .iter()
        .find(|&u| ring.mul(ring.mul(a, u), a) == a)
        .map(|inner| RegularityWitness { inner })
}

/// a = a a* y a for some y; equivalently aR is generated by a projection.
pub fn star_regular_witness(ring: &FiniteStarRing, a: u32) -> Option<u32> {
    // *-regular = regular with proper involution on aRa; concretely we use
    // the projection form: some projection p with aR = pR and pa = a.
    ring.projections().iter().copied().find(|&p| {
        ring.mul(p, a) == a && {
            let ideals = ring.right_ideal_table();
            ideals[a as usize] == ideals[p as usize]
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    pub unit_regular: bool,
    pub star_regular: bool,
}

/// Ring-level regularity: the property holds for every element. The failing
/// element (if any) comes back per property.
pub fn decide_regularity(ring: &FiniteStarRing) -> (Regularity, [Option<u32>; 3]) {
    let mut fails = [None, None, None];
    for a in ring.elements() {
        if fails[0].is_none() && regular_witness(ring, a).is_none() {
            fails[0] = Some(a);
        }
        if fails[1].is_none() && unit_regular_witness(ring, a).is_none() {
            fails[1] = Some(a);
        }
        if fails[2].is_none() && star_regular_witness(ring, a).is_none() {
            fails[2] = Some(a);
        }
        if fails.iter().all(|f| f.is_some()) {
            break;
        }
    }
    (
        Regularity {
            regular: fails[0].is_none(),
            unit_regular: fails[1].is_none(),
            star_regular: fails[2].is_none(),
        },
        fails,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkOutcome {
    /// Both sides false for the same reasons is also agreement.
    Agree { unit_regular: bool },
    Disagree { element: u32, unit_regular: bool, special_clean: bool },
}

/// Elementwise equivalence: a is unit regular iff a = u + e with u a unit,
/// e idempotent and aR ∩ eR = 0. Each side is computed independently.
pub fn ck_equivalence_check(ring: &FiniteStarRing) -> CkOutcome {
    for a in ring.elements() {
        let ur = unit_regular_witness(ring, a).is_some();
        let sc = decomposition_witness(ring, a, SPECIAL_CLEAN).is_some();
        if ur != sc {
            return CkOutcome::Disagree {
                element: a,
                unit_regular: ur,
                special_clean: sc,
            };
        }
    }
    let (reg, _) = decide_regularity(ring);
    CkOutcome::Agree {
        unit_regular: reg.unit_regular,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkStarOutcome {
    /// Some element has no u + p decomposition with aR ∩ pR = 0.
    HypothesisFails { element: u32 },
    /// Hypothesis holds and R is unit regular.
    Holds,
    /// Hypothesis holds yet some element is not unit regular.
    Fails { element: u32 },
}

/// One direction only: if every a = u + p with u a unit, p a projection and
/// aR ∩ pR = 0, then R is unit regular.
pub fn ck_star_check(ring: &FiniteStarRing) -> CkStarOutcome {
    if let Err(a) = is_clean_variant(ring, SPECIAL_STAR_CLEAN) {
        return CkStarOutcome::HypothesisFails { element: a };
    }
    match ring
        .elements()
        .find(|&a| unit_regular_witness(ring, a).is_none())
    {
        None => CkStarOutcome::Holds,
        Some(a) => CkStarOutcome::Fails { element: a },
    }
}

#[derive(Clone, Debug)]
pub enum LiftError {
    NotAProjection(u32),
    LiftFailed { element: u32 },
}

/// Lift clean decompositions from the corners pRp and (1-p)R(1-p) to R:
/// given central projection p, each a splits as pap + (1-p)a(1-p) and the
/// corner witnesses combine. Falls back to a direct scan when the naive
/// combination fails.
pub fn lift_corner_witnesses(
    ring: &Rc<FiniteStarRing>,
    p: u32,
    mode: CleanMode,
    config: &BuildConfig,
) -> Result<Vec<CleanWitness>, LiftError> {
    if !ring.is_projection(p) || !ring.center().contains(p) {
        return Err(LiftError::NotAProjection(p));
    }
    let q = ring.sub(ring.one(), p);
    let cp = ring::corner_ring(ring, p, config).map_err(|_| LiftError::NotAProjection(p))?;
    let cq = ring::corner_ring(ring, q, config).map_err(|_| LiftError::NotAProjection(q))?;
    let find_in = |corner: &Rc<FiniteStarRing>, parent_elem: u32| -> Option<u32> {
        corner
            .elements()
            .find(|&i| corner.embed_in_parent(i) == Some(parent_elem))
    };
    let mut out = Vec::with_capacity(ring.order() as usize);
    for a in ring.elements() {
        let ap = find_in(&cp, ring.mul(ring.mul(p, a), p)).ok_or(LiftError::LiftFailed { element: a })?;
        let aq = find_in(&cq, ring.mul(ring.mul(q, a), q)).ok_or(LiftError::LiftFailed { element: a })?;
        let wp = decomposition_witness(&cp, ap, mode);
        let wq = decomposition_witness(&cq, aq, mode);
        let combined = match (wp, wq) {
            (Some(wp), Some(wq)) => {
                let t = ring.add(
                    cp.embed_in_parent(wp.additive).unwrap(),
                    cq.embed_in_parent(wq.additive).unwrap(),
                );
                let e = ring.add(
                    cp.embed_in_parent(wp.idempotent).unwrap(),
                    cq.embed_in_parent(wq.idempotent).unwrap(),
                );
                let ok = ring.add(t, e) == a
                    && additive_ok(ring, t, mode)
                    && idem_ok(ring, e, mode)
                    && (!mode.require_commute || ring.mul(t, e) == ring.mul(e, t))
                    && (!mode.require_intersection_zero || intersection_zero(ring, a, e));
                if ok {
                    Some(CleanWitness {
                        element: a,
                        additive: t,
                        idempotent: e,
                        commutes: ring.mul(t, e) == ring.mul(e, t),
                        intersection_zero: intersection_zero(ring, a, e),
                    })
                } else {
                    None
                }
            }
            _ => None,
        };
        match combined.or_else(|| decomposition_witness(ring, a, mode)) {
            Some(w) => out.push(w),
            None => return Err(LiftError::LiftFailed { element: a }),
        }
    }
    Ok(out)
}

/// Abelian rings: a is almost clean iff a is clean iff a is strongly clean,
/// used as a cross check on small commutative instances.
pub fn abelian_clean_coincide(ring: &FiniteStarRing) -> bool {
    if !lattice::is_abelian(ring) {
        return true;
    }
    ring.elements().all(|a| {
        let c = decomposition_witness(ring, a, CLEAN).is_some();
        let s = decomposition_witness(ring, a, STRONGLY_CLEAN).is_some();
        c == s
    })
}

/// aR as a BitSet, for callers outside this module.
pub fn principal_right_ideal(ring: &FiniteStarRing, a: u32) -> BitSet {
    ring.right_ideal_table()[a as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::RingExpr;
    use crate::ring::build_ring;
    use alloc::boxed::Box;

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn zmod(n: u32) -> Rc<FiniteStarRing> {
        build_ring(&RingExpr::Zmod { n }, &cfg()).unwrap()
    }

    #[test]
    fn z6_is_clean_and_star_clean() {
        let z6 = zmod(6);
        assert!(is_clean_variant(&z6, CLEAN).is_ok());
        assert!(is_clean_variant(&z6, STAR_CLEAN).is_ok());
        assert!(is_clean_variant(&z6, STRONGLY_CLEAN).is_ok());
        assert!(is_clean_variant(&z6, ALMOST_CLEAN).is_ok());
    }

    #[test]
    fn z4_clean_decompositions() {
        let z4 = zmod(4);
        // 2 = 1 + 1 and 0 = 3 + 1; every element of a local ring is clean.
        let w = decomposition_witness(&z4, 2, CLEAN).unwrap();
        assert!(z4.is_unit(w.additive));
        assert_eq!(z4.add(w.additive, w.idempotent), 2);
        assert!(is_clean_variant(&z4, CLEAN).is_ok());
        // Z4 is not regular: 2 has no inner inverse.
        assert!(regular_witness(&z4, 2).is_none());
        let (reg, fails) = decide_regularity(&z4);
        assert!(!reg.regular && fails[0] == Some(2));
    }

    #[test]
    fn z6_regularity() {
        let z6 = zmod(6);
        let (reg, _) = decide_regularity(&z6);
        assert!(reg.regular && reg.unit_regular && reg.star_regular);
    }

    #[test]
    fn ck_agreement_on_small_rings() {
        for n in 2..=12 {
            let r = zmod(n);
            assert!(matches!(ck_equivalence_check(&r), CkOutcome::Agree { .. }));
        }
        let m2f2 = build_ring(
            &RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
            },
            &cfg(),
        )
        .unwrap();
        assert!(matches!(
            ck_equivalence_check(&m2f2),
            CkOutcome::Agree { unit_regular: true }
        ));
        assert!(!matches!(ck_star_check(&m2f2), CkStarOutcome::Fails { .. }));
    }

    #[test]
    fn m2f2_is_star_clean() {
        let m2f2 = build_ring(
            &RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
            },
            &cfg(),
        )
        .unwrap();
        assert!(is_clean_variant(&m2f2, STAR_CLEAN).is_ok());
        assert!(is_clean_variant(&m2f2, SPECIAL_CLEAN).is_ok());
    }

    #[test]
    fn witness_parts_reverify() {
        let m2f3 = build_ring(
            &RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 3, k: 1, frob: 0 }),
            },
            &cfg(),
        )
        .unwrap();
        for a in m2f3.elements() {
            let w = decomposition_witness(&m2f3, a, STAR_CLEAN).unwrap();
            assert!(m2f3.is_unit(w.additive));
            assert!(m2f3.is_projection(w.idempotent));
            assert_eq!(m2f3.add(w.additive, w.idempotent), a);
        }
    }

    #[test]
    fn lift_through_z6_peirce() {
        let z6 = zmod(6);
        // p = 3 is a central projection; Z6 = 3·Z6 × 4·Z6.
        let ws = lift_corner_witnesses(&z6, 3, CLEAN, &cfg()).unwrap();
        assert_eq!(ws.len(), 6);
        for w in ws {
            assert_eq!(z6.add(w.additive, w.idempotent), w.element);
            assert!(z6.is_unit(w.additive));
        }
        assert!(matches!(
            lift_corner_witnesses(&z6, 2, CLEAN, &cfg()),
            Err(LiftError::NotAProjection(2))
        ));
    }

    #[test]
    fn abelian_coincidence_holds() {
        for n in [4u32, 6, 8, 9, 12] {
            assert!(abelian_clean_coincide(&zmod(n)));
        }
    }

    #[test]
    fn star_regular_on_z6() {
        let z6 = zmod(6);
        // 2R = {0,2,4} = 4R and 4 is a projection with 4·2 = 2.
        assert_eq!(star_regular_witness(&z6, 2), Some(4));
        assert_eq!(star_regular_witness(&z6, 0), Some(0));
    }
}
