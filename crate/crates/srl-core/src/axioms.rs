//! Baer *-ring axioms (A1) to (A7), (GC), (LP~RP), the positivity cone and
//! the type decomposition with homogeneous partitions.
//!
//! (A3), (A6), (A7) quantify over infinite sequences of projections; on a
//! finite ring their content collapses and the verdicts AdaptedHolds and
//! HoldsVacuously state exactly which adapted statement was checked instead.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::classify;
use crate::config::BuildConfig;
use crate::lattice;
use crate::ring::{self, FiniteStarRing};

/// {r : rs = sr for all s in S}. A subring containing the center.
pub fn commutant(ring: &FiniteStarRing, s: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for r in ring.elements() {
        if s.iter().all(|x| ring.mul(r, x) == ring.mul(x, r)) {
            out.insert(r);
        }
    }
    out
}

pub fn bicommutant(ring: &FiniteStarRing, s: &BitSet) -> BitSet {
    commutant(ring, &commutant(ring, s))
}

fn singleton(ring: &FiniteStarRing, x: u32) -> BitSet {
    BitSet::from_ids(ring.order(), [x])
}

/// Positive elements: the additive closure of {x*x : x in R}. Every
/// generator is self-adjoint, so the cone is star-fixed elementwise.
pub fn positive_cone(ring: &FiniteStarRing) -> BitSet {
    let mut cone = BitSet::empty(ring.order());
    for x in ring.elements() {
        cone.insert(ring.mul(ring.star(x), x));
    }
    loop {
        let mut grew = false;
        let ids = cone.to_ids();
        for &a in &ids {
            for &b in &ids {
                let s = ring.add(a, b);
                if !cone.contains(s) {
                    cone.insert(s);
                    grew = true;
                }
            }
        }
        if !grew {
            return cone;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    A1,
    A2Ep,
    A2Upsr,
    A3,
    A4,
    A5,
    A6,
    A7,
    Gc,
    LpRp,
}

impl AxiomId {
    pub const ALL: [AxiomId; 10] = [
        AxiomId::A1,
        AxiomId::A2Ep,
        AxiomId::A2Upsr,
        AxiomId::A3,
        AxiomId::A4,
        AxiomId::A5,
        AxiomId::A6,
        AxiomId::A7,
        AxiomId::Gc,
        AxiomId::LpRp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::A1 => "A1",
            AxiomId::A2Ep => "A2-EP",
            AxiomId::A2Upsr => "A2-UPSR",
            AxiomId::A3 => "A3",
            AxiomId::A4 => "A4",
            AxiomId::A5 => "A5",
            AxiomId::A6 => "A6",
            AxiomId::A7 => "A7",
            AxiomId::Gc => "GC",
            AxiomId::LpRp => "LP~RP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomVerdict {
    Holds,
    /// Witness ids re-verifiable from the definition; empty for failed
    /// existence axioms (A5), where the witness is the exhausted search.
    Fails { witness: Vec<u32> },
    HoldsVacuously { reason: &'static str },
    AdaptedHolds { note: &'static str },
}

impl AxiomVerdict {
    pub fn passed(&self) -> bool {
        !matches!(self, AxiomVerdict::Fails { .. })
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub entries: Vec<(AxiomId, AxiomVerdict)>,
}

impl AxiomReport {
    pub fn verdict(&self, id: AxiomId) -> &AxiomVerdict {
        &self.entries.iter().find(|(i, _)| *i == id).unwrap().1
    }

    /// A1 through A6 all pass, the hypothesis bundle used by several
    /// theorems (adapted and vacuous verdicts count as passing).
    pub fn a1_to_a6(&self) -> bool {
        self.entries
            .iter()
            .filter(|(i, _)| *i != AxiomId::A7 && *i != AxiomId::Gc && *i != AxiomId::LpRp)
            .all(|(_, v)| v.passed())
    }
}

/// UPSR quantifies y over a bicommutant; the classical axiom reads {x*x}'' where x
/// is the positive element, which for self-adjoint x contains {x}''.
/// Both scopings are decided and reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpsrScope {
    OfX,
    OfXStarX,
}

/// Err(x) when some positive x has no unique positive square root in the
/// chosen scope.
pub fn upsr_in_scope(ring: &FiniteStarRing, cone: &BitSet, scope: UpsrScope) -> Result<(), u32> {
    for x in cone.iter() {
        let base = match scope {
            UpsrScope::OfX => singleton(ring, x),
            UpsrScope::OfXStarX => singleton(ring, ring.mul(ring.star(x), x)),
        };
        let scope_set = bicommutant(ring, &base);
        let roots = scope_set
            .iter()
            .filter(|&y| cone.contains(y) && ring.mul(y, y) == x)
            .count();
        if roots != 1 {
            return Err(x);
        }
    }
    Ok(())
}

pub fn check_axiom(ring: &FiniteStarRing, id: AxiomId, cone: &BitSet) -> AxiomVerdict {
    match id {
        AxiomId::A1 => {
            for x in ring.elements() {
                if ring.mul(ring.star(x), x) == ring.one()
                    && ring.mul(x, ring.star(x)) != ring.one()
                {
                    return AxiomVerdict::Fails { witness: vec![x] };
                }
            }
            AxiomVerdict::Holds
        }
        AxiomId::A2Ep => check_a2_ep(ring),
        AxiomId::A2Upsr => {
            let of_x = upsr_in_scope(ring, cone, UpsrScope::OfX);
            let of_xsx = upsr_in_scope(ring, cone, UpsrScope::OfXStarX);
            match (of_x, of_xsx) {
                (Ok(()), Ok(())) => AxiomVerdict::Holds,
                (Err(x), Err(_)) => AxiomVerdict::Fails { witness: vec![x] },
                // scoping-dependent outcome, surfaced rather than guessed.
                _ => AxiomVerdict::AdaptedHolds {
                    note: "holds in exactly one of the scopes {x}'' and {x*x}''",
                },
            }
        }
        AxiomId::A3 => AxiomVerdict::HoldsVacuously {
            reason: "finite orthogonal families are always summable in a ring",
        },
        AxiomId::A4 => {
            for x in ring.elements() {
                let v = ring.add(ring.one(), ring.mul(ring.star(x), x));
                if !ring.is_unit(v) {
                    return AxiomVerdict::Fails { witness: vec![x] };
                }
            }
            AxiomVerdict::Holds
        }
        AxiomId::A5 => {
            let found = ring.elements().any(|i| {
                ring.center().contains(i)
                    && ring.mul(i, i) == ring.neg(ring.one())
                    && ring.star(i) == ring.neg(i)
            });
            if found {
                AxiomVerdict::Holds
            } else {
                AxiomVerdict::Fails { witness: vec![] }
            }
        }
        AxiomId::A6 => check_a6(ring),
        AxiomId::A7 => check_a7(ring, cone),
        AxiomId::Gc => match check_gc(ring) {
            GcResult::Holds { .. } => AxiomVerdict::Holds,
            GcResult::Fails { p, q } => AxiomVerdict::Fails { witness: vec![p, q] },
        },
        AxiomId::LpRp => check_lp_rp(ring),
    }
}

pub fn check_all_axioms(ring: &FiniteStarRing) -> AxiomReport {
    let cone = positive_cone(ring);
    AxiomReport {
        entries: AxiomId::ALL
            .iter()
            .map(|&id| (id, check_axiom(ring, id, &cone)))
            .collect(),
    }
}

/// (A2-EP): for every x != 0 there is self-adjoint y in {x*x}'' with
/// (x*x)y^2 a nonzero projection. The search is memoized on the id of x*x.
fn check_a2_ep(ring: &FiniteStarRing) -> AxiomVerdict {
    let mut memo: alloc::collections::BTreeMap<u32, bool> = alloc::collections::BTreeMap::new();
    for x in ring.elements().skip(1) {
        let xsx = ring.mul(ring.star(x), x);
        let ok = *memo.entry(xsx).or_insert_with(|| {
            let scope = bicommutant(ring, &singleton(ring, xsx));
            let found = scope.iter().any(|y| {
                ring.star(y) == y && {
                    let p = ring.mul(xsx, ring.mul(y, y));
                    p != 0 && ring.is_projection(p)
                }
            });
            found
        });
        if !ok {
            return AxiomVerdict::Fails { witness: vec![x] };
        }
    }
    AxiomVerdict::Holds
}

/// (A6) finite adaptation: the directed sequence collapses to p = 1, so the
/// check is that every unitary u with RP(1 - u) = 1 has 1 - u invertible.
fn check_a6(ring: &FiniteStarRing) -> AxiomVerdict {
    for u in ring.elements() {
        let us = ring.star(u);
        if ring.mul(us, u) != ring.one() || ring.mul(u, us) != ring.one() {
            continue;
        }
        let w = ring.sub(ring.one(), u);
        match classify::rp(ring, w) {
            Ok(p) if p == ring.one() => {
                if !ring.is_unit(w) {
                    return AxiomVerdict::Fails { witness: vec![u] };
                }
            }
            _ => {}
        }
    }
    AxiomVerdict::AdaptedHolds {
        note: "finite lattice collapses the projection sequence to p = 1",
    }
}

/// (A7) finite adaptation: for orthogonal projection families of size <= 3
/// summing to 1 and positive a_n with a_n = p_n a_n p_n, the candidate
/// a = sum a_n satisfies a p_n = a_n; verified through the per-element
/// identities a_n p_n = a_n and a_n p_m = 0 (m != n), which make every sum
/// work without enumerating tuples.
fn check_a7(ring: &FiniteStarRing, cone: &BitSet) -> AxiomVerdict {
    let projs = ring.projections();
    let families = orthogonal_families_to_one(ring, projs, 3);
    for family in &families {
        for &p in family {
            for a in cone.iter() {
                if ring.mul(ring.mul(p, a), p) != a {
                    continue;
                }
                if ring.mul(a, p) != a {
                    return AxiomVerdict::Fails { witness: vec![a, p] };
                }
                for &q in family {
                    if q != p && ring.mul(a, q) != 0 {
                        return AxiomVerdict::Fails { witness: vec![a, q] };
                    }
                }
            }
        }
    }
    AxiomVerdict::AdaptedHolds {
        note: "families of size <= 3; a = sum of the a_n realizes every choice",
    }
}

/// All orthogonal families of nonzero projections of size <= max_len that
/// sum to 1, chosen ascending to avoid permutations.
pub fn orthogonal_families_to_one(
    ring: &FiniteStarRing,
    projs: &[u32],
    max_len: usize,
) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        ring: &FiniteStarRing,
        projs: &[u32],
        start: usize,
        sum: u32,
        max_len: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if sum == ring.one() && !current.is_empty() {
            out.push(current.clone());
            return;
        }
        if current.len() == max_len {
            return;
        }
        for i in start..projs.len() {
            let p = projs[i];
            if p == 0 || current.iter().any(|&q| ring.mul(q, p) != 0 || ring.mul(p, q) != 0) {
                continue;
            }
            current.push(p);
            rec(ring, projs, i + 1, ring.add(sum, p), max_len, current, out);
            current.pop();
        }
    }
    rec(ring, projs, 0, 0, max_len, &mut current, &mut out);
    out
}

#[derive(Clone, Debug)]
pub enum GcResult {
    /// Per pair (p, q) the first central projection c with cp dominated by
    /// cq and (1-c)q dominated by (1-c)p.
    Holds { witnesses: Vec<(u32, u32, u32)> },
    Fails { p: u32, q: u32 },
}

/// Generalized comparability. Domination of cp by cq is decided inside the
/// whole ring; the witnesses automatically live in the corner cRc since
/// x = xx*x forces x = (cq)x(cp)-multiples for central c.
pub fn check_gc(ring: &FiniteStarRing) -> GcResult {
    let projs = ring.projections();
    let central: Vec<u32> = projs
        .iter()
        .copied()
        .filter(|&c| ring.center().contains(c))
        .collect();
    let mut witnesses = Vec::new();
    for &p in projs {
        for &q in projs {
            let c = central.iter().copied().find(|&c| {
                let c1 = ring.sub(ring.one(), c);
                lattice::dominates(ring, ring.mul(c, p), ring.mul(c, q)).is_some()
                    && lattice::dominates(ring, ring.mul(c1, q), ring.mul(c1, p)).is_some()
            });
            match c {
                Some(c) => witnesses.push((p, q, c)),
                None => return GcResult::Fails { p, q },
            }
        }
    }
    GcResult::Holds { witnesses }
}

/// (LP~RP): LP(x) ~ RP(x) for every x; vacuous when the ring is not
/// Rickart *, where LP and RP need not exist.
pub fn check_lp_rp(ring: &FiniteStarRing) -> AxiomVerdict {
    let rickart_star = matches!(
        classify::is_ring_class(ring, classify::RingClass::RickartStar),
        classify::ClassVerdict::Holds
    );
    if !rickart_star {
        return AxiomVerdict::HoldsVacuously {
            reason: "not a Rickart *-ring",
        };
    }
    for x in ring.elements() {
        let lp = classify::lp(ring, x).expect("Rickart *-ring has LP");
        let rp = classify::rp(ring, x).expect("Rickart *-ring has RP");
        if lattice::equivalent(ring, lp, rp).is_none() {
            return AxiomVerdict::Fails { witness: vec![x] };
        }
    }
    AxiomVerdict::Holds
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceType {
    I,
    II,
    III,
    /// Definitional cases are exclusive but not exhaustive on arbitrary
    /// finite *-rings; a piece matching none of them is surfaced.
    Unclassified,
}

#[derive(Clone, Debug)]
pub struct HomogeneousPiece {
    /// Central projection carrying this piece (parent ids).
    pub central: u32,
    /// Order n of the homogeneous partition.
    pub order: u32,
    /// Partition projections in parent ids, orthogonal, equivalent,
    /// abelian, summing to `central`.
    pub partition: Vec<u32>,
    /// Order of the abelian base ring p_1 R p_1.
    pub base_order: u32,
}

#[derive(Clone, Debug)]
pub struct TypeDecomposition {
    pub c_i: u32,
    pub c_ii: u32,
    pub c_iii: u32,
    /// (A1) holds, i.e. 1 is a finite projection.
    pub finite: bool,
    /// Pure type I and finite.
    pub i_f: bool,
    /// Homogeneous refinement of the type I part, grouped by order n.
    pub homogeneous: Vec<HomogeneousPiece>,
    /// Every piece re-verified against its type definition and the
    /// homogeneous refinement covers c_i.
    pub verified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotBaerStar;

fn corner_type(ring: &Rc<FiniteStarRing>, config: &BuildConfig) -> PieceType {
    let projs = ring.projections().clone();
    let preds: Vec<(u32, lattice::ProjectionPredicates)> = projs
        .iter()
        .map(|&p| (p, lattice::projection_predicates(ring, p, config)))
        .collect();
    let has_faithful_abelian = preds.iter().any(|(p, pr)| *p != 0 && pr.abelian && pr.faithful);
    if has_faithful_abelian {
        return PieceType::I;
    }
    let any_abelian = preds.iter().any(|(p, pr)| *p != 0 && pr.abelian);
    let has_faithful_finite = preds.iter().any(|(p, pr)| *p != 0 && pr.finite && pr.faithful);
    if has_faithful_finite && !any_abelian {
        return PieceType::II;
    }
    let any_finite = preds.iter().any(|(p, pr)| *p != 0 && pr.finite);
    if !any_finite {
        return PieceType::III;
    }
    PieceType::Unclassified
}

pub fn type_decompose(
    ring: &Rc<FiniteStarRing>,
    config: &BuildConfig,
) -> Result<TypeDecomposition, NotBaerStar> {
    if !matches!(
        classify::is_ring_class(ring, classify::RingClass::BaerStar),
        classify::ClassVerdict::Holds
    ) {
        return Err(NotBaerStar);
    }
    let atoms = central_projection_atoms(ring);
    let mut c = [0u32; 3];
    let mut verified = true;
    let mut type_i_atoms: Vec<u32> = Vec::new();
    for &a in &atoms {
        let corner = ring::corner_ring(ring, a, config).expect("central projection");
        match corner_type(&corner, config) {
            PieceType::I => {
                c[0] = ring.add(c[0], a);
                type_i_atoms.push(a);
            }
            PieceType::II => c[1] = ring.add(c[1], a),
            PieceType::III => c[2] = ring.add(c[2], a),
            PieceType::Unclassified => verified = false,
        }
    }
    // Orthogonality and sum 1 follow from atom structure; re-checked.
    if ring.add(ring.add(c[0], c[1]), c[2]) != ring.one()
        || ring.mul(c[0], c[1]) != 0
        || ring.mul(c[0], c[2]) != 0
        || ring.mul(c[1], c[2]) != 0
    {
        verified = false;
    }
    // Re-verify each nonzero piece from its definition.
    for (k, &ci) in c.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        let corner = ring::corner_ring(ring, ci, config).expect("central projection");
        let t = corner_type(&corner, config);
        let expected = [PieceType::I, PieceType::II, PieceType::III][k];
        if t != expected {
            verified = false;
        }
    }
    // Homogeneous refinement of the type I part, per atom then merged by n.
    let mut by_order: alloc::collections::BTreeMap<u32, Vec<(u32, Vec<u32>, u32)>> =
        alloc::collections::BTreeMap::new();
    for &a in &type_i_atoms {
        let corner = ring::corner_ring(ring, a, config).expect("central projection");
        let mut found = false;
        for n in 1..=corner.projections().len() as u32 {
            if let Some(part) = homogeneous_partition(&corner, n, config) {
                let parent_part: Vec<u32> = part
                    .iter()
                    .map(|&p| corner.embed_in_parent(p).unwrap())
                    .collect();
                let base = ring::corner_ring(ring, parent_part[0], config).unwrap();
                by_order
                    .entry(n)
                    .or_default()
                    .push((a, parent_part, base.order()));
                found = true;
                break;
            }
        }
        if !found {
            verified = false;
        }
    }
    let homogeneous: Vec<HomogeneousPiece> = by_order
        .into_iter()
        .map(|(n, pieces)| {
            let central = pieces.iter().fold(0u32, |acc, (a, _, _)| ring.add(acc, *a));
            // Partition of the merged piece: positionwise sums across atoms.
            let partition: Vec<u32> = (0..n as usize)
                .map(|i| {
                    pieces
                        .iter()
                        .fold(0u32, |acc, (_, part, _)| ring.add(acc, part[i]))
                })
                .collect();
            let base_order = pieces.iter().map(|(_, _, b)| *b).product();
            HomogeneousPiece {
                central,
                order: n,
                partition,
                base_order,
            }
        })
        .collect();
    // Merged partitions re-verified: orthogonal, equivalent, abelian,
    // summing to the carrying central projection.
    for piece in &homogeneous {
        let total = piece.partition.iter().fold(0u32, |acc, &p| ring.add(acc, p));
        if total != piece.central {
            verified = false;
        }
        for (i, &p) in piece.partition.iter().enumerate() {
            if !lattice::projection_predicates(ring, p, config).abelian {
                verified = false;
            }
            for &q in &piece.partition[i + 1..] {
                if ring.mul(p, q) != 0 || lattice::equivalent(ring, p, q).is_none() {
                    verified = false;
                }
            }
        }
    }
    let finite = matches!(
        check_axiom(ring, AxiomId::A1, &BitSet::empty(ring.order())),
        AxiomVerdict::Holds
    );
    Ok(TypeDecomposition {
        c_i: c[0],
        c_ii: c[1],
        c_iii: c[2],
        finite,
        i_f: c[0] == ring.one() && finite,
        homogeneous,
        verified,
    })
}

/// Minimal nonzero central projections. For the zero ring this is empty.
pub fn central_projection_atoms(ring: &FiniteStarRing) -> Vec<u32> {
    let central: Vec<u32> = ring
        .projections()
        .iter()
        .copied()
        .filter(|&p| p != 0 && ring.center().contains(p))
        .collect();
    central
        .iter()
        .copied()
        .filter(|&c| !central.iter().any(|&d| d != c && ring.mul(d, c) == d))
        .collect()
}

/// n orthogonal, pairwise equivalent, abelian projections summing to 1.
/// Backtracking over abelian projections ascending by id, pruned by the
/// cardinality |pR| which is constant across an equivalence class.
pub fn homogeneous_partition(
    ring: &Rc<FiniteStarRing>,
    n: u32,
    config: &BuildConfig,
) -> Option<Vec<u32>> {
    let abelian: Vec<u32> = ring
        .projections()
        .iter()
        .copied()
        .filter(|&p| p != 0 && lattice::projection_predicates(ring, p, config).abelian)
        .collect();
    let sizes = ring.right_ideal_table();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        ring: &FiniteStarRing,
        pool: &[u32],
        sizes: &[BitSet],
        start: usize,
        n: u32,
        sum: u32,
        current: &mut Vec<u32>,
    ) -> bool {
        if current.len() == n as usize {
            return sum == ring.one();
        }
        for i in start..pool.len() {
            let p = pool[i];
            if let Some(&first) = current.first() {
                if sizes[p as usize].count() != sizes[first as usize].count() {
                    continue;
                }
                if current.iter().any(|&q| ring.mul(q, p) != 0) {
                    continue;
                }
                if lattice::equivalent(ring, first, p).is_none() {
                    continue;
                }
            }
            current.push(p);
            if rec(ring, pool, sizes, i + 1, n, ring.add(sum, p), current) {
                return true;
            }
            current.pop();
        }
        false
    }
    if rec(ring, &abelian, sizes, 0, n, 0, &mut current) {
        Some(current)
    } else {
        None
    }
}

#[derive(Clone, Debug)]
pub struct StructureIso {
    pub n: u32,
    /// Abelian base ring A = p_1 R p_1.
    pub base: Rc<FiniteStarRing>,
    /// v_i with v_i* v_i = p_1 and v_i v_i* = p_i, v_1 = p_1.
    pub witnesses: Vec<u32>,
}

/// Verify x -> (v_i* x v_j) is a *-isomorphism onto M_n(A) for the given
/// homogeneous partition. Err carries the identity that failed.
pub fn structure_iso_in(
    ring: &Rc<FiniteStarRing>,
    partition: &[u32],
    config: &BuildConfig,
) -> Result<StructureIso, &'static str> {
    let n = partition.len() as u32;
    let p1 = partition[0];
    let mut witnesses = vec![p1];
    for &p in &partition[1..] {
        match lattice::equivalent(ring, p1, p) {
            Some(v) => witnesses.push(v),
            None => return Err("partition projections not equivalent"),
        }
    }
    let base = ring::corner_ring(ring, p1, config).map_err(|_| "p_1 is not a projection")?;
    let b = base.order() as u64;
    if b.checked_pow(n * n).map(|m| m != ring.order() as u64).unwrap_or(true) {
        return Err("order mismatch with M_n(A)");
    }
    // Entry (i, j) of the image of x is v_i* x v_j in p_1 R p_1, encoded as
    // the digit at position i*n + j in base |A| to match the matrix ring
    // element ids.
    let base_index = |parent_elem: u32| -> Option<u32> {
        base.elements()
            .find(|&k| base.embed_in_parent(k) == Some(parent_elem))
    };
    let encode = |x: u32| -> Result<u64, &'static str> {
        let mut id = 0u64;
        for i in (0..n as usize).rev() {
            for j in (0..n as usize).rev() {
                let entry = ring.mul(
                    ring.mul(ring.star(witnesses[i]), x),
                    witnesses[j],
                );
                let d = base_index(entry).ok_or("entry escapes the corner")?;
                id = id * b + d as u64;
            }
        }
        Ok(id)
    };
    let mut images: Vec<u64> = Vec::with_capacity(ring.order() as usize);
    for x in ring.elements() {
        images.push(encode(x)?);
    }
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ring.order() as usize {
        return Err("map is not injective");
    }
    let m = ring::matrix_ring(&base, n, config).map_err(|_| "matrix ring too large")?;
    for x in ring.elements() {
        for y in ring.elements() {
            if images[ring.add(x, y) as usize]
                != m.add(images[x as usize] as u32, images[y as usize] as u32) as u64
            {
                return Err("map is not additive");
            }
            if images[ring.mul(x, y) as usize]
                != m.mul(images[x as usize] as u32, images[y as usize] as u32) as u64
            {
                return Err("map is not multiplicative");
            }
        }
        if images[ring.star(x) as usize] != m.star(images[x as usize] as u32) as u64 {
            return Err("map does not preserve star");
        }
    }
    if images[ring.one() as usize] != m.one() as u64 {
        return Err("map does not preserve 1");
    }
    Ok(StructureIso { n, base, witnesses })
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

    fn z3i() -> Rc<FiniteStarRing> {
        // Z3[i] with conjugation: Quot(Z(3), x^2 + 1, -x).
        build_ring(
            &RingExpr::QuotAdjoin {
                base: Box::new(RingExpr::Zmod { n: 3 }),
                modulus: alloc::vec![1, 0, 1],
                gen_image: alloc::vec![0, 2],
            },
            &cfg(),
        )
        .unwrap()
    }

    #[test]
    fn commutant_basics() {
        let m = m2f3();
        let whole = commutant(&m, &singleton(&m, m.one()));
        assert_eq!(whole.count(), m.order());
        // 2I is scalar, id 2 + 2*27 = 56; commutant is everything, so the
        // bicommutant is the center {0, I, 2I}.
        let two_i = 56u32;
        assert_eq!(m.mul(two_i, 1), m.mul(1, two_i));
        let bi = bicommutant(&m, &singleton(&m, two_i));
        assert_eq!(bi, *m.center());
        assert_eq!(bi.count(), 3);
    }

    #[test]
    fn positive_cones() {
        let f3 = zmod(3);
        assert_eq!(positive_cone(&f3).to_ids(), alloc::vec![0, 1, 2]);
        let g = z3i();
        // norms a^2 + b^2 and their sums: exactly the scalars {0, 1, 2}.
        assert_eq!(positive_cone(&g).to_ids(), alloc::vec![0, 1, 2]);
        let any = zmod(6);
        let cone = positive_cone(&any);
        assert!(cone.contains(0) && cone.contains(1));
    }

    #[test]
    fn a4_examples() {
        let z7 = zmod(7);
        let cone = positive_cone(&z7);
        assert_eq!(check_axiom(&z7, AxiomId::A4, &cone), AxiomVerdict::Holds);
        // 1 + (1+i)*(1+i) = 1 + (1-i)(1+i) = 1 + 2 = 0 in Z3[i].
        let g = z3i();
        let cone_g = positive_cone(&g);
        match check_axiom(&g, AxiomId::A4, &cone_g) {
            AxiomVerdict::Fails { witness } => {
                let x = witness[0];
                assert_eq!(g.add(g.one(), g.mul(g.star(x), x)), 0);
            }
            v => panic!("expected A4 failure, got {:?}", v),
        }
    }

    #[test]
    fn a5_on_gaussian_integers_mod_3() {
        let g = z3i();
        let cone = positive_cone(&g);
        assert_eq!(check_axiom(&g, AxiomId::A5, &cone), AxiomVerdict::Holds);
        // Z7 has sqrt(-1) only if -1 is a QR mod 7; it is not.
        let z7 = zmod(7);
        let cone7 = positive_cone(&z7);
        assert!(matches!(
            check_axiom(&z7, AxiomId::A5, &cone7),
            AxiomVerdict::Fails { .. }
        ));
    }

    #[test]
    fn a2_ep_fails_on_m2f3() {
        let m = m2f3();
        let cone = positive_cone(&m);
        // x = [[1,1],[1,2]] has x*x = 2I whose bicommutant is the center;
        // no central y makes 2y^2 a nonzero projection in F3.
        match check_axiom(&m, AxiomId::A2Ep, &cone) {
            AxiomVerdict::Fails { witness } => {
                let x = witness[0];
                assert_ne!(x, 0);
            }
            v => panic!("expected A2-EP failure, got {:?}", v),
        }
    }

    #[test]
    fn a1_holds_everywhere_small() {
        for ring in [zmod(4), zmod(6), m2f3(), z3i()] {
            let cone = positive_cone(&ring);
            assert_eq!(
                check_axiom(&ring, AxiomId::A1, &cone),
                AxiomVerdict::Holds
            );
        }
    }

    #[test]
    fn adapted_axioms_report_their_notes() {
        let z6 = zmod(6);
        let report = check_all_axioms(&z6);
        assert!(matches!(
            report.verdict(AxiomId::A3),
            AxiomVerdict::HoldsVacuously { .. }
        ));
        assert!(matches!(
            report.verdict(AxiomId::A6),
            AxiomVerdict::AdaptedHolds { .. } | AxiomVerdict::Fails { .. }
        ));
        assert!(report.verdict(AxiomId::A6).passed());
        assert!(report.verdict(AxiomId::A7).passed());
    }

    #[test]
    fn gc_on_z6_and_m2f3() {
        match check_gc(&zmod(6)) {
            GcResult::Holds { witnesses } => {
                // pair (3, 4) is comparable through some central projection.
                assert!(witnesses.iter().any(|&(p, q, _)| p == 3 && q == 4));
            }
            GcResult::Fails { .. } => panic!("GC must hold on a commutative ring"),
        }
        // GC fails on M2(F3) with the transpose involution: rank-1
        // projections split into *-equivalence classes by whether the
        // diagonal norms are squares mod 3, so e11 and [[2,1],[1,2]] are
        // incomparable under every central projection.
        let m = m2f3();
        match check_gc(&m) {
            GcResult::Fails { p, q } => {
                assert!(m.is_projection(p) && m.is_projection(q));
                assert!(lattice::dominates(&m, p, q).is_none());
                assert!(lattice::dominates(&m, q, p).is_none());
            }
            GcResult::Holds { .. } => panic!("norm obstruction expected on M2(F3)"),
        }
        // The pair (e11, e22) itself compares with c = 1 via witness e21.
        assert!(lattice::dominates(&m, 1, 27).is_some());
    }

    #[test]
    fn lp_rp_verdicts() {
        assert_eq!(check_lp_rp(&zmod(6)), AxiomVerdict::Holds);
        // Z4 is not Rickart *, so the axiom is vacuous there.
        assert!(matches!(
            check_lp_rp(&zmod(4)),
            AxiomVerdict::HoldsVacuously { .. }
        ));
        // On M2(F3) the verdict is computed, not assumed: the same norm
        // obstruction as in GC produces a failing witness.
        match check_lp_rp(&m2f3()) {
            AxiomVerdict::Fails { witness } => {
                let m = m2f3();
                let x = witness[0];
                let lp = classify::lp(&m, x).unwrap();
                let rp = classify::rp(&m, x).unwrap();
                assert!(lattice::equivalent(&m, lp, rp).is_none());
            }
            v => panic!("expected recorded failure, got {:?}", v),
        }
    }

    #[test]
    fn type_decomposition_of_m2f3() {
        let m = m2f3();
        let d = type_decompose(&m, &cfg()).unwrap();
        assert!(d.verified);
        assert_eq!(d.c_i, m.one());
        assert_eq!(d.c_ii, 0);
        assert_eq!(d.c_iii, 0);
        assert!(d.i_f);
        assert_eq!(d.homogeneous.len(), 1);
        let piece = &d.homogeneous[0];
        assert_eq!(piece.order, 2);
        assert_eq!(piece.partition, alloc::vec![1, 27]);
        assert_eq!(piece.base_order, 3);
    }

    #[test]
    fn type_decomposition_of_z6() {
        let z6 = zmod(6);
        let d = type_decompose(&z6, &cfg()).unwrap();
        assert!(d.verified && d.i_f);
        assert_eq!(d.c_i, 1);
        // abelian ring: homogeneous of order 1.
        assert_eq!(d.homogeneous.len(), 1);
        assert_eq!(d.homogeneous[0].order, 1);
        assert!(type_decompose(&zmod(4), &cfg()).is_err());
    }

    #[test]
    fn homogeneous_partitions_of_m2f3() {
        let m = m2f3();
        assert_eq!(homogeneous_partition(&m, 1, &cfg()), None);
        assert_eq!(homogeneous_partition(&m, 2, &cfg()), Some(alloc::vec![1, 27]));
        assert_eq!(homogeneous_partition(&m, 3, &cfg()), None);
        assert_eq!(homogeneous_partition(&zmod(6), 1, &cfg()), Some(alloc::vec![1]));
    }

    #[test]
    fn structure_iso_recovers_m2f3() {
        let m = m2f3();
        let part = homogeneous_partition(&m, 2, &cfg()).unwrap();
        let iso = structure_iso_in(&m, &part, &cfg()).unwrap();
        assert_eq!(iso.n, 2);
        assert_eq!(iso.base.order(), 3);
        assert_eq!(iso.witnesses[0], part[0]);
        // n = 1 on an abelian ring is the identity onto M_1(R).
        let z6 = zmod(6);
        let iso1 = structure_iso_in(&z6, &[z6.one()], &cfg()).unwrap();
        assert_eq!(iso1.n, 1);
        assert_eq!(iso1.base.order(), 6);
    }

    #[test]
    fn upsr_both_scopings_computed() {
        let z7 = zmod(7);
        let cone = positive_cone(&z7);
        // 1 has two positive square roots (1 and 6) in Z7, so UPSR fails
        // under both scopings.
        assert!(upsr_in_scope(&z7, &cone, UpsrScope::OfX).is_err());
        assert!(upsr_in_scope(&z7, &cone, UpsrScope::OfXStarX).is_err());
        assert!(matches!(
            check_axiom(&z7, AxiomId::A2Upsr, &cone),
            AxiomVerdict::Fails { .. }
        ));
    }
}
