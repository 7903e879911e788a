//! Projection lattice: order, Murray-von-Neumann equivalence, domination,
//! abelian/finite/faithful predicates and central Peirce decomposition.
//!
//! p <= q iff p = pq; p ~ q iff x*x = p and xx* = q for some witness x.
//! Equivalent projections generate right ideals of equal cardinality
//! (r -> xr is a bijection pR -> qR), which prunes the witness search.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::config::BuildConfig;
use crate::ring::{self, FiniteStarRing};

#[derive(Clone, Debug)]
pub struct ProjectionLattice {
    /// Projection ids, ascending.
    pub projections: Vec<u32>,
    /// leq[i * len + j] = true iff p_i <= p_j.
    pub leq: Vec<bool>,
    /// Pairwise sup/inf inside the projection set, when they exist.
    pub sup: Vec<Option<u32>>,
    pub inf: Vec<Option<u32>>,
    /// False when some pair lacks a least upper / greatest lower bound among
    /// projections (only Rickart *-rings are guaranteed a lattice).
    pub is_lattice: bool,
    pub central: Vec<u32>,
}

impl ProjectionLattice {
    pub fn index_of(&self, p: u32) -> Option<usize> {
        self.projections.binary_search(&p).ok()
    }

    pub fn leq(&self, p: u32, q: u32) -> bool {
        let i = self.index_of(p).expect("not a projection");
        let j = self.index_of(q).expect("not a projection");
        self.leq[i * self.projections.len() + j]
    }
}

/// Build the lattice tables by scanning the projection set.
pub fn projections(ring: &FiniteStarRing) -> ProjectionLattice {
    let projs = ring.projections().clone();
    let m = projs.len();
    let mut leq = vec![false; m * m];
    for (i, &p) in projs.iter().enumerate() {
        for (j, &q) in projs.iter().enumerate() {
            leq[i * m + j] = ring.mul(p, q) == p;
        }
    }
    let mut sup = vec![None; m * m];
    let mut inf = vec![None; m * m];
    let mut is_lattice = true;
    for i in 0..m {
        for j in 0..m {
            // Least upper bound: minimal element of the set of common upper
            // bounds that sits below all of them.
            let uppers: Vec<usize> = (0..m)
                .filter(|&k| leq[i * m + k] && leq[j * m + k])
                .collect();
            let lub = uppers
                .iter()
                .copied()
                .find(|&k| uppers.iter().all(|&u| leq[k * m + u]));
            let lowers: Vec<usize> = (0..m)
                .filter(|&k| leq[k * m + i] && leq[k * m + j])
                .collect();
            let glb = lowers
                .iter()
                .copied()
                .find(|&k| lowers.iter().all(|&l| leq[l * m + k]));
            if lub.is_none() || glb.is_none() {
                is_lattice = false;
            }
            sup[i * m + j] = lub.map(|k| projs[k]);
            inf[i * m + j] = glb.map(|k| projs[k]);
        }
    }
    let central = projs
        .iter()
        .copied()
        .filter(|&p| ring.center().contains(p))
        .collect();
    ProjectionLattice {
        projections: projs,
        leq,
        sup,
        inf,
        is_lattice,
        central,
    }
}

/// Witness x with x*x = p and xx* = q, least id first, or None.
/// |pR| = |qR| is a necessary condition and is used as a prefilter; in a
/// commutative ring x*x = xx* forces p = q, handled without scanning.
pub fn equivalent(ring: &FiniteStarRing, p: u32, q: u32) -> Option<u32> {
    debug_assert!(ring.is_projection(p) && ring.is_projection(q));
    if p == q {
        return Some(p);
    }
    if ring.is_commutative() {
        return None;
    }
    let sizes = ring.right_ideal_table();
    if sizes[p as usize].count() != sizes[q as usize].count() {
        return None;
    }
    (0..ring.order()).find(|&x| {
        ring.mul(ring.star(x), x) == p && ring.mul(x, ring.star(x)) == q
    })
}

/// p is dominated by q (p ≼ q): p ~ r <= q for some projection r.
/// Returns the subprojection r and the equivalence witness.
pub fn dominates(ring: &FiniteStarRing, p: u32, q: u32) -> Option<(u32, u32)> {
    for &r in ring.projections() {
        if ring.mul(r, q) == r {
            if let Some(x) = equivalent(ring, p, r) {
                return Some((r, x));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectionPredicates {
    /// pRp is an abelian ring (all its idempotents central in pRp).
    pub abelian: bool,
    /// Not equivalent to a proper subprojection.
    pub finite: bool,
    /// No nontrivial central idempotent e with ep = 0.
    pub faithful: bool,
    pub central: bool,
}

pub fn projection_predicates(
    ring: &Rc<FiniteStarRing>,
    p: u32,
    config: &BuildConfig,
) -> ProjectionPredicates {
    debug_assert!(ring.is_projection(p));
    let corner = ring::corner_ring(ring, p, config).expect("projection");
    let abelian = is_abelian(&corner);
    let finite = ring.projections().iter().all(|&r| {
        r == p || !(ring.mul(r, p) == r && equivalent(ring, p, r).is_some())
    });
    let faithful = !ring.idempotents().iter().any(|&e| {
        e != 0 && e != ring.one() && ring.center().contains(e) && ring.mul(e, p) == 0
    });
    ProjectionPredicates {
        abelian,
        finite,
        faithful,
        central: ring.center().contains(p),
    }
}

/// Every idempotent is central.
pub fn is_abelian(ring: &FiniteStarRing) -> bool {
    ring.idempotents()
        .iter()
        .all(|&e| ring.center().contains(e))
}

/// Every projection is central.
pub fn is_star_abelian(ring: &FiniteStarRing) -> bool {
    ring.projections()
        .iter()
        .all(|&p| ring.center().contains(p))
}

#[derive(Debug)]
pub struct PeirceDecomposition {
    /// (central projection, corner ring) pieces; projections are orthogonal
    /// and sum to 1.
    pub parts: Vec<(u32, Rc<FiniteStarRing>)>,
    /// The map x -> (p_i x) was verified to be a bijective *-homomorphism
    /// onto the product of the corners.
    pub verified: bool,
}

/// Split along the atoms of the Boolean algebra of central projections.
/// The trivial family {1} is used when no refinement exists.
pub fn peirce_central_decompose(
    ring: &Rc<FiniteStarRing>,
    config: &BuildConfig,
) -> PeirceDecomposition {
    let central: Vec<u32> = ring
        .projections()
        .iter()
        .copied()
        .filter(|&p| p != 0 && ring.center().contains(p))
        .collect();
    // Atoms: minimal nonzero central projections.
    let mut atoms: Vec<u32> = central
        .iter()
        .copied()
        .filter(|&c| {
            !central
                .iter()
                .any(|&d| d != c && ring.mul(d, c) == d)
        })
        .collect();
    // Orthogonality and sum-to-1 sanity; fall back to {1} otherwise.
    let orthogonal = atoms
        .iter()
        .enumerate()
        .all(|(i, &a)| atoms.iter().skip(i + 1).all(|&b| ring.mul(a, b) == 0));
    let total = atoms.iter().fold(0u32, |acc, &a| ring.add(acc, a));
    if atoms.is_empty() || !orthogonal || total != ring.one() {
        atoms = vec![ring.one()];
    }
    let parts: Vec<(u32, Rc<FiniteStarRing>)> = atoms
        .iter()
        .map(|&a| (a, ring::corner_ring(ring, a, config).expect("central projection")))
        .collect();
    // Verify x -> (p_i x) elementwise: additive, multiplicative,
    // star-preserving and bijective.
    let mut seen = BitSet::empty(ring.order());
    let mut verified = true;
    let image = |x: u32| -> Vec<u32> {
        parts
            .iter()
            .map(|(a, corner)| {
                let px = ring.mul(*a, x);
                corner
                    .elements()
                    .find(|&i| corner.embed_in_parent(i) == Some(px))
                    .expect("p_i x lies in the corner")
            })
            .collect()
    };
    let mut images: Vec<Vec<u32>> = Vec::with_capacity(ring.order() as usize);
    for x in ring.elements() {
        images.push(image(x));
    }
    // Surjectivity: orders multiply up.
    let prod_order: u64 = parts.iter().map(|(_, c)| c.order() as u64).product();
    if prod_order != ring.order() as u64 {
        verified = false;
    }
    // Injectivity via distinct tuples (encode into a single id).
    if verified {
        let encoded = images.iter().map(|tuple| {
            parts
                .iter()
                .zip(tuple)
                .rev()
                .fold(0u64, |acc, ((_, c), &d)| acc * c.order() as u64 + d as u64)
        });
        for e in encoded {
            if seen.contains(e as u32) {
                verified = false;
            }
            seen.insert(e as u32);
        }
    }
    // Homomorphism identities.
    if verified {
        'outer: for x in ring.elements() {
            for y in ring.elements() {
                for (k, (a, corner)) in parts.iter().enumerate() {
                    let _ = a;
                    let fx = images[x as usize][k];
                    let fy = images[y as usize][k];
                    if images[ring.add(x, y) as usize][k] != corner.add(fx, fy)
                        || images[ring.mul(x, y) as usize][k] != corner.mul(fx, fy)
                    {
                        verified = false;
                        break 'outer;
                    }
                }
            }
            for (k, (_, corner)) in parts.iter().enumerate() {
                if images[ring.star(x) as usize][k] != corner.star(images[x as usize][k]) {
                    verified = false;
                }
            }
        }
    }
    PeirceDecomposition { parts, verified }
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

    fn m2f3() -> Rc<FiniteStarRing> {
        build_ring(
            &RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 3, k: 1, frob: 0 }),
            },
            &cfg(),
        )
        .unwrap()
    }

    #[test]
    fn projection_sets() {
        let m2f2 = build_ring(
            &RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
            },
            &cfg(),
        )
        .unwrap();
        // {0, e11, e22, 1}: ids 0, 1, 8, 9.
        let lat = projections(&m2f2);
        assert_eq!(lat.projections, alloc::vec![0, 1, 8, 9]);
        let z6 = build_ring(&RingExpr::Zmod { n: 6 }, &cfg()).unwrap();
        assert_eq!(projections(&z6).projections, alloc::vec![0, 1, 3, 4]);
        // 0 <= p <= 1 for every projection.
        for &p in &lat.projections {
            assert!(lat.leq(0, p) && lat.leq(p, m2f2.one()));
        }
    }

    #[test]
    fn equivalence_in_m2f3() {
        let m = m2f3();
        // e11 = id 1, e22 = id 27 (digit at position 3), e21 = id 9.
        let e11 = 1u32;
        let e22 = 27u32;
        assert!(m.is_projection(e11) && m.is_projection(e22));
        let w = equivalent(&m, e11, e22).unwrap();
        assert_eq!(m.mul(m.star(w), w), e11);
        assert_eq!(m.mul(w, m.star(w)), e22);
        // Least witness is e21 (id 9).
        assert_eq!(w, 9);
        assert_eq!(equivalent(&m, e11, e11), Some(e11));
    }

    #[test]
    fn no_equivalence_across_sizes_in_z6() {
        let z6 = build_ring(&RingExpr::Zmod { n: 6 }, &cfg()).unwrap();
        assert_eq!(equivalent(&z6, 3, 4), None);
        assert!(dominates(&z6, 4, 3).is_none());
        assert!(dominates(&z6, 0, 3).is_some());
    }

    #[test]
    fn dominates_in_m2f3() {
        let m = m2f3();
        assert!(dominates(&m, 1, m.one()).is_some());
    }

    #[test]
    fn predicates_in_m2f3() {
        let m = m2f3();
        let pr = projection_predicates(&m, 1, &cfg());
        assert!(pr.abelian && pr.finite && pr.faithful && !pr.central);
        let p1 = projection_predicates(&m, m.one(), &cfg());
        assert!(p1.faithful && p1.finite);
        // Every projection of a finite ring is finite.
        for &p in m.projections() {
            assert!(projection_predicates(&m, p, &cfg()).finite);
        }
    }

    #[test]
    fn peirce_on_z6() {
        let z6 = build_ring(&RingExpr::Zmod { n: 6 }, &cfg()).unwrap();
        let d = peirce_central_decompose(&z6, &cfg());
        assert!(d.verified);
        let mut sig: Vec<(u32, u32)> = d.parts.iter().map(|(p, c)| (*p, c.order())).collect();
        sig.sort_unstable();
        assert_eq!(sig, alloc::vec![(3, 2), (4, 3)]);
    }

    #[test]
    fn peirce_trivial_on_simple_ring() {
        let m = m2f3();
        let d = peirce_central_decompose(&m, &cfg());
        assert!(d.verified);
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].0, m.one());
    }

    #[test]
    fn equivalence_witnesses_compose() {
        let m = m2f3();
        let projs = m.projections().clone();
        for &p in &projs {
            for &q in &projs {
                if let Some(x) = equivalent(&m, p, q) {
                    for &r in &projs {
                        if let Some(y) = equivalent(&m, q, r) {
                            let z = m.mul(y, x);
                            assert_eq!(m.mul(m.star(z), z), p);
                            assert_eq!(m.mul(z, m.star(z)), r);
                        }
                    }
                }
            }
        }
    }
}
