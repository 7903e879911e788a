//! Per-ring property table serialized into suite reports. Expensive
//! deciders are skipped above an order cap and serialize as null.

use serde::{Deserialize, Serialize};
use srl_core::classify::{self, RingClass};
use srl_core::{clean, conditions, lattice};
use srl_core::FiniteStarRing;

/// Order above which the quadratic and worse deciders are skipped.
pub const HEAVY_CAP: u32 = 1536;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RingProperties {
    pub commutative: bool,
    pub proper_involution: bool,
    pub abelian: Option<bool>,
    pub star_abelian: Option<bool>,
    pub regular: Option<bool>,
    pub unit_regular: Option<bool>,
    pub star_regular: Option<bool>,
    pub clean: Option<bool>,
    pub star_clean: Option<bool>,
    pub strongly_clean: Option<bool>,
    pub almost_clean: Option<bool>,
    pub almost_star_clean: Option<bool>,
    pub right_rickart: Option<bool>,
    pub rickart_star: Option<bool>,
    pub baer_star: Option<bool>,
    pub right_morphic: Option<bool>,
    pub left_morphic: Option<bool>,
}

pub fn compute_properties(ring: &FiniteStarRing) -> RingProperties {
    let heavy = ring.order() <= HEAVY_CAP;
    let on = |b: bool| -> Option<bool> { Some(b) };
    let when = |cond: bool, f: &dyn Fn() -> bool| if cond { Some(f()) } else { None };
    let regularity = if heavy {
        Some(clean::decide_regularity(ring).0)
    } else {
        None
    };
    RingProperties {
        commutative: ring.is_commutative(),
        proper_involution: classify::involution_is_proper(ring).is_ok(),
        abelian: on(lattice::is_abelian(ring)),
        star_abelian: on(lattice::is_star_abelian(ring)),
        regular: regularity.map(|r| r.regular),
        unit_regular: regularity.map(|r| r.unit_regular),
        star_regular: regularity.map(|r| r.star_regular),
        clean: when(heavy, &|| {
            clean::is_clean_variant(ring, clean::CLEAN).is_ok()
        }),
        star_clean: when(heavy, &|| {
            clean::is_clean_variant(ring, clean::STAR_CLEAN).is_ok()
        }),
        strongly_clean: when(heavy, &|| {
            clean::is_clean_variant(ring, clean::STRONGLY_CLEAN).is_ok()
        }),
        almost_clean: when(heavy, &|| {
            clean::is_clean_variant(ring, clean::ALMOST_CLEAN).is_ok()
        }),
        almost_star_clean: when(heavy, &|| {
            clean::is_clean_variant(ring, clean::ALMOST_STAR_CLEAN).is_ok()
        }),
        right_rickart: when(heavy, &|| {
            classify::is_ring_class(ring, RingClass::RightRickart).holds()
        }),
        rickart_star: when(heavy, &|| {
            classify::is_ring_class(ring, RingClass::RickartStar).holds()
        }),
        baer_star: when(heavy, &|| {
            classify::is_ring_class(ring, RingClass::BaerStar).holds()
        }),
        right_morphic: when(heavy, &|| {
            conditions::is_morphic(ring, conditions::Side::Right).is_ok()
        }),
        left_morphic: when(heavy, &|| {
            conditions::is_morphic(ring, conditions::Side::Left).is_ok()
        }),
    }
}
