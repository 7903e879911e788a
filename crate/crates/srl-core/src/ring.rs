//! Realized finite *-rings.
//!
//! Elements are canonical ids `0..order` (0 is always the zero element).
//! Operation results are computed from the structural encoding of each
//! backend (matrix entries, coefficient vectors, residues); rings at or
//! below `table_threshold` additionally memoize full operation tables.
//! All rings are immutable after build; memo tables are write-once.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::bitset::BitSet;
use crate::config::BuildConfig;
use crate::expr::{ExprError, RingExpr};
use crate::group::{self, GroupTable};
use crate::rng::SplitMix64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    InvalidExpr(String),
    TooLarge { order: u64, cap: u64 },
    NotAProjection { id: u32 },
    NonCommutativeCoefficients,
}

impl core::fmt::Display for BuildError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BuildError::InvalidExpr(s) => write!(f, "invalid expression: {s}"),
            BuildError::TooLarge { order, cap } => {
                write!(f, "order {order} exceeds cap {cap}")
            }
            BuildError::NotAProjection { id } => {
                write!(f, "element {id} is not a projection")
            }
            BuildError::NonCommutativeCoefficients => {
                write!(f, "group ring coefficients must be commutative")
            }
        }
    }
}

impl From<ExprError> for BuildError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Invalid(s) => BuildError::InvalidExpr(s),
            ExprError::TooLarge { order, cap } => BuildError::TooLarge { order, cap },
        }
    }
}

enum Backend {
    Zmod {
        n: u32,
    },
    /// GF(p^k): digit vectors base p, reduced mod the stored monic
    /// irreducible; star is x -> x^(p^frob).
    Gf {
        p: u32,
        k: u32,
        modulus: Vec<u32>,
        frob: u32,
    },
    /// base[t]/(modulus); star maps coefficients through the base star and
    /// substitutes `gen_pows[i]` for t^i.
    Quot {
        base: Rc<FiniteStarRing>,
        deg: u32,
        modulus: Vec<u32>,
        gen_pows: Vec<Vec<u32>>,
    },
    Matrix {
        entry: Rc<FiniteStarRing>,
        n: u32,
    },
    Product {
        factors: Vec<Rc<FiniteStarRing>>,
        perm: Option<Vec<u32>>,
    },
    GroupRing {
        coeff: Rc<FiniteStarRing>,
        group: GroupTable,
    },
    /// Sub-carrier of a parent ring (corner pRp or generated *-subring):
    /// `elems` is the sorted list of parent ids, ops inherited.
    Sub {
        parent: Rc<FiniteStarRing>,
        elems: Vec<u32>,
    },
    /// Raw tables; used for negative controls in tests.
    Table {
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        star: Vec<u32>,
    },
}

#[derive(Default)]
struct Caches {
    add_tab: OnceCell<Vec<u32>>,
    mul_tab: OnceCell<Vec<u32>>,
    neg_tab: OnceCell<Vec<u32>>,
    star_tab: OnceCell<Vec<u32>>,
    units: OnceCell<BitSet>,
    left_zd: OnceCell<BitSet>,
    right_zd: OnceCell<BitSet>,
    inverse: OnceCell<Vec<u32>>,
    idempotents: OnceCell<Vec<u32>>,
    projections: OnceCell<Vec<u32>>,
    center: OnceCell<BitSet>,
    commutative: OnceCell<bool>,
    ann_r: OnceCell<Vec<BitSet>>,
    ann_l: OnceCell<Vec<BitSet>>,
    right_ideals: OnceCell<Vec<BitSet>>,
    left_ideals: OnceCell<Vec<BitSet>>,
}

pub struct FiniteStarRing {
    order: u32,
    one: u32,
    backend: Backend,
    canonical: Option<RingExpr>,
    table_threshold: u32,
    caches: Caches,
}

impl core::fmt::Debug for FiniteStarRing {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "FiniteStarRing(order={}", self.order)?;
        if let Some(e) = &self.canonical {
            write!(f, ", expr={}", e.print())?;
        }
        write!(f, ")")
    }
}

impl FiniteStarRing {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    pub fn canonical_expr(&self) -> Option<&RingExpr> {
        self.canonical.as_ref()
    }

    /// Deterministic element enumeration: ids ascending.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    fn raw_add(&self, a: u32, b: u32) -> u32 {
        match &self.backend {
            Backend::Zmod { n } => (a + b) % n,
            Backend::Gf { p, k, .. } => digit_zip(a, b, *p, *k, |x, y| (x + y) % p),
            Backend::Quot { base, deg, .. } => {
                vec_zip(a, b, base.order, *deg, |x, y| base.add(x, y))
            }
            Backend::Matrix { entry, n } => {
                vec_zip(a, b, entry.order, n * n, |x, y| entry.add(x, y))
            }
            Backend::Product { factors, .. } => {
                let da = prod_decode(a, factors);
                let db = prod_decode(b, factors);
                let dc: Vec<u32> = factors
                    .iter()
                    .zip(da.iter().zip(&db))
                    .map(|(r, (&x, &y))| r.add(x, y))
                    .collect();
                prod_encode(&dc, factors)
            }
            Backend::GroupRing { coeff, group } => {
                vec_zip(a, b, coeff.order, group.order, |x, y| coeff.add(x, y))
            }
            Backend::Sub { parent, elems, .. } => {
                let s = parent.add(elems[a as usize], elems[b as usize]);
                sub_index(elems, s)
            }
            Backend::Table { add, .. } => add[(a * self.order + b) as usize],
        }
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match &self.backend {
            Backend::Zmod { n } => ((a as u64 * b as u64) % *n as u64) as u32,
            Backend::Gf { p, k, modulus, .. } => {
                let da = decode(a, *p, *k);
                let db = decode(b, *p, *k);
                let dc = fp_poly_mulmod(&da, &db, modulus, *p);
                encode(&dc, *p)
            }
            Backend::Quot {
                base,
                deg,
                modulus,
                ..
            } => {
                let da = decode(a, base.order, *deg);
                let db = decode(b, base.order, *deg);
                let dc = base_poly_mulmod(&da, &db, modulus, base);
                encode(&dc, base.order)
            }
            Backend::Matrix { entry, n } => {
                let n = *n;
                let da = decode(a, entry.order, n * n);
                let db = decode(b, entry.order, n * n);
                let mut dc = vec![0u32; (n * n) as usize];
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = 0u32; // entry zero id
                        for k in 0..n {
                            let prod =
                                entry.mul(da[(i * n + k) as usize], db[(k * n + j) as usize]);
                            acc = entry.add(acc, prod);
                        }
                        dc[(i * n + j) as usize] = acc;
                    }
                }
                encode(&dc, entry.order)
            }
            Backend::Product { factors, .. } => {
                let da = prod_decode(a, factors);
                let db = prod_decode(b, factors);
                let dc: Vec<u32> = factors
                    .iter()
                    .zip(da.iter().zip(&db))
                    .map(|(r, (&x, &y))| r.mul(x, y))
                    .collect();
                prod_encode(&dc, factors)
            }
            Backend::GroupRing { coeff, group } => {
                let da = decode(a, coeff.order, group.order);
                let db = decode(b, coeff.order, group.order);
                let mut dc = vec![0u32; group.order as usize];
                for g in 0..group.order {
                    if da[g as usize] == 0 {
                        continue;
                    }
                    for h in 0..group.order {
                        if db[h as usize] == 0 {
                            continue;
                        }
                        let k = group.mul(g, h) as usize;
                        let prod = coeff.mul(da[g as usize], db[h as usize]);
                        dc[k] = coeff.add(dc[k], prod);
                    }
                }
                encode(&dc, coeff.order)
            }
            Backend::Sub { parent, elems, .. } => {
                let s = parent.mul(elems[a as usize], elems[b as usize]);
                sub_index(elems, s)
            }
            Backend::Table { mul, .. } => mul[(a * self.order + b) as usize],
        }
    }

    fn raw_neg(&self, a: u32) -> u32 {
        match &self.backend {
            Backend::Zmod { n } => (n - a) % n,
            Backend::Gf { p, k, .. } => digit_map(a, *p, *k, |x| (p - x) % p),
            Backend::Quot { base, deg, .. } => vec_map(a, base.order, *deg, |x| base.neg(x)),
            Backend::Matrix { entry, n } => vec_map(a, entry.order, n * n, |x| entry.neg(x)),
            Backend::Product { factors, .. } => {
                let da = prod_decode(a, factors);
                let dc: Vec<u32> = factors.iter().zip(&da).map(|(r, &x)| r.neg(x)).collect();
                prod_encode(&dc, factors)
            }
            Backend::GroupRing { coeff, group } => {
                vec_map(a, coeff.order, group.order, |x| coeff.neg(x))
            }
            Backend::Sub { parent, elems, .. } => {
                sub_index(elems, parent.neg(elems[a as usize]))
            }
            Backend::Table { neg, .. } => neg[a as usize],
        }
    }

    fn raw_star(&self, a: u32) -> u32 {
        match &self.backend {
            Backend::Zmod { .. } => a,
            Backend::Gf { p, k, modulus, frob } => {
                if *frob == 0 {
                    return a;
                }
                // x -> x^(p^frob), binary exponentiation in GF(p^k).
                let mut e = 1u64;
                for _ in 0..*frob {
                    e *= *p as u64;
                }
                let mut result = vec![0u32; *k as usize];
                result[0] = 1;
                let mut basev = decode(a, *p, *k);
                while e > 0 {
                    if e & 1 == 1 {
                        result = fp_poly_mulmod(&result, &basev, modulus, *p);
                    }
                    basev = fp_poly_mulmod(&basev, &basev, modulus, *p);
                    e >>= 1;
                }
                encode(&result, *p)
            }
            Backend::Quot {
                base,
                deg,
                gen_pows,
                ..
            } => {
                let da = decode(a, base.order, *deg);
                // sum_i star(c_i) * t*^i
                let mut acc = vec![0u32; *deg as usize];
                for (i, &c) in da.iter().enumerate() {
                    let cs = base.star(c);
                    if cs == 0 {
                        continue;
                    }
                    for (j, &g) in gen_pows[i].iter().enumerate() {
                        acc[j] = base.add(acc[j], base.mul(cs, g));
                    }
                }
                encode(&acc, base.order)
            }
            Backend::Matrix { entry, n } => {
                let n = *n;
                let da = decode(a, entry.order, n * n);
                let mut dc = vec![0u32; (n * n) as usize];
                for i in 0..n {
                    for j in 0..n {
                        dc[(i * n + j) as usize] = entry.star(da[(j * n + i) as usize]);
                    }
                }
                encode(&dc, entry.order)
            }
            Backend::Product { factors, perm } => {
                let da = prod_decode(a, factors);
                let dc: Vec<u32> = (0..factors.len())
                    .map(|i| {
                        let src = match perm {
                            Some(p) => p[i] as usize,
                            None => i,
                        };
                        factors[i].star(da[src])
                    })
                    .collect();
                prod_encode(&dc, factors)
            }
            Backend::GroupRing { coeff, group } => {
                let da = decode(a, coeff.order, group.order);
                let mut dc = vec![0u32; group.order as usize];
                for g in 0..group.order {
                    dc[g as usize] = coeff.star(da[group.inv[g as usize] as usize]);
                }
                encode(&dc, coeff.order)
            }
            Backend::Sub { parent, elems, .. } => {
                sub_index(elems, parent.star(elems[a as usize]))
            }
            Backend::Table { star, .. } => star[a as usize],
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.order <= self.table_threshold {
            let tab = self.caches.add_tab.get_or_init(|| {
                let n = self.order;
                let mut t = vec![0u32; (n as usize) * (n as usize)];
                for x in 0..n {
                    for y in 0..n {
                        t[(x as usize) * n as usize + y as usize] = self.raw_add(x, y);
                    }
                }
                t
            });
            tab[(a as usize) * self.order as usize + b as usize]
        } else {
            self.raw_add(a, b)
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.order <= self.table_threshold {
            let tab = self.caches.mul_tab.get_or_init(|| {
                let n = self.order;
                let mut t = vec![0u32; (n as usize) * (n as usize)];
                for x in 0..n {
                    for y in 0..n {
                        t[(x as usize) * n as usize + y as usize] = self.raw_mul(x, y);
                    }
                }
                t
            });
            tab[(a as usize) * self.order as usize + b as usize]
        } else {
            self.raw_mul(a, b)
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        let tab = self
            .caches
            .neg_tab
            .get_or_init(|| (0..self.order).map(|x| self.raw_neg(x)).collect());
        tab[a as usize]
    }

    pub fn star(&self, a: u32) -> u32 {
        let tab = self
            .caches
            .star_tab
            .get_or_init(|| (0..self.order).map(|x| self.raw_star(x)).collect());
        tab[a as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = self.one;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    // ---- memoized classification sets ----

    fn zd_pass(&self) {
        if self.caches.units.get().is_some() {
            return;
        }
        let n = self.order;
        let mut units = BitSet::empty(n);
        let mut left_zd = BitSet::empty(n);
        let mut right_zd = BitSet::empty(n);
        let mut inverse = vec![u32::MAX; n as usize];
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                if xy == 0 && x != 0 && y != 0 {
                    left_zd.insert(x);
                    right_zd.insert(y);
                }
                if xy == self.one && self.mul(y, x) == self.one {
                    units.insert(x);
                    if inverse[x as usize] == u32::MAX {
                        inverse[x as usize] = y;
                    }
                }
            }
        }
        let _ = self.caches.units.set(units);
        let _ = self.caches.left_zd.set(left_zd);
        let _ = self.caches.right_zd.set(right_zd);
        let _ = self.caches.inverse.set(inverse);
    }

    pub fn units(&self) -> &BitSet {
        self.zd_pass();
        self.caches.units.get().unwrap()
    }

    pub fn left_zero_divisors(&self) -> &BitSet {
        self.zd_pass();
        self.caches.left_zd.get().unwrap()
    }

    pub fn right_zero_divisors(&self) -> &BitSet {
        self.zd_pass();
        self.caches.right_zd.get().unwrap()
    }

    /// Multiplicative inverse when the element is a unit.
    pub fn inverse(&self, a: u32) -> Option<u32> {
        self.zd_pass();
        let i = self.caches.inverse.get().unwrap()[a as usize];
        (i != u32::MAX).then_some(i)
    }

    pub fn is_unit(&self, a: u32) -> bool {
        self.units().contains(a)
    }

    /// Regular element: neither a left nor a right zero divisor.
    pub fn is_regular_element(&self, a: u32) -> bool {
        a != 0 && !self.left_zero_divisors().contains(a) && !self.right_zero_divisors().contains(a)
            || (a == 0 && self.order == 1)
    }

    pub fn idempotents(&self) -> &Vec<u32> {
        self.caches
            .idempotents
            .get_or_init(|| (0..self.order).filter(|&x| self.mul(x, x) == x).collect())
    }

    pub fn projections(&self) -> &Vec<u32> {
        self.caches.projections.get_or_init(|| {
            self.idempotents()
                .iter()
                .copied()
                .filter(|&x| self.star(x) == x)
                .collect()
        })
    }

    pub fn is_projection(&self, p: u32) -> bool {
        self.mul(p, p) == p && self.star(p) == p
    }

    pub fn center(&self) -> &BitSet {
        self.caches.center.get_or_init(|| {
            let n = self.order;
            BitSet::from_ids(
                n,
                (0..n).filter(|&x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x))),
            )
        })
    }

    pub fn is_commutative(&self) -> bool {
        *self
            .caches
            .commutative
            .get_or_init(|| self.center().count() == self.order)
    }

    /// Right annihilator bit sets, indexed by element.
    pub fn ann_r_table(&self) -> &Vec<BitSet> {
        self.caches.ann_r.get_or_init(|| {
            let n = self.order;
            (0..n)
                .map(|x| BitSet::from_ids(n, (0..n).filter(|&y| self.mul(x, y) == 0)))
                .collect()
        })
    }

    pub fn ann_l_table(&self) -> &Vec<BitSet> {
        self.caches.ann_l.get_or_init(|| {
            let n = self.order;
            (0..n)
                .map(|x| BitSet::from_ids(n, (0..n).filter(|&y| self.mul(y, x) == 0)))
                .collect()
        })
    }

    /// Principal right ideals xR, indexed by element.
    pub fn right_ideal_table(&self) -> &Vec<BitSet> {
        self.caches.right_ideals.get_or_init(|| {
            let n = self.order;
            (0..n)
                .map(|x| BitSet::from_ids(n, (0..n).map(|y| self.mul(x, y))))
                .collect()
        })
    }

    pub fn left_ideal_table(&self) -> &Vec<BitSet> {
        self.caches.left_ideals.get_or_init(|| {
            let n = self.order;
            (0..n)
                .map(|x| BitSet::from_ids(n, (0..n).map(|y| self.mul(y, x))))
                .collect()
        })
    }

    /// Human-readable rendering of an element in its structural encoding.
    pub fn render(&self, a: u32) -> String {
        match &self.backend {
            Backend::Zmod { .. } | Backend::Table { .. } => format!("{a}"),
            Backend::Gf { p, k, .. } => {
                if *k == 1 {
                    format!("{a}")
                } else {
                    let ds = decode(a, *p, *k);
                    format!("poly{ds:?}")
                }
            }
            Backend::Quot { base, deg, .. } => {
                let ds = decode(a, base.order, *deg);
                let parts: Vec<String> = ds.iter().map(|&c| base.render(c)).collect();
                format!("poly[{}]", parts.join(","))
            }
            Backend::Matrix { entry, n } => {
                let ds = decode(a, entry.order, n * n);
                let rows: Vec<String> = (0..*n)
                    .map(|i| {
                        let cells: Vec<String> = (0..*n)
                            .map(|j| entry.render(ds[(i * n + j) as usize]))
                            .collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Backend::Product { factors, .. } => {
                let ds = prod_decode(a, factors);
                let parts: Vec<String> = factors
                    .iter()
                    .zip(&ds)
                    .map(|(r, &x)| r.render(x))
                    .collect();
                format!("({})", parts.join(","))
            }
            Backend::GroupRing { coeff, group } => {
                let ds = decode(a, coeff.order, group.order);
                let terms: Vec<String> = ds
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(g, &c)| format!("{}*g{g}", coeff.render(c)))
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            Backend::Sub { parent, elems, .. } => parent.render(elems[a as usize]),
        }
    }

    /// Parent ids (identity on base rings); for corners and subrings this is
    /// the embedding into the parent.
    pub fn embed_in_parent(&self, a: u32) -> Option<u32> {
        match &self.backend {
            Backend::Sub { elems, .. } => Some(elems[a as usize]),
            _ => None,
        }
    }

    pub fn parent(&self) -> Option<&Rc<FiniteStarRing>> {
        match &self.backend {
            Backend::Sub { parent, .. } => Some(parent),
            _ => None,
        }
    }
}

// ---- encoding helpers ----

fn decode(mut id: u32, base: u32, len: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(id % base);
        id /= base;
    }
    out
}

fn encode(digits: &[u32], base: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * base + d)
}

fn digit_zip(a: u32, b: u32, base: u32, len: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
    let da = decode(a, base, len);
    let db = decode(b, base, len);
    let dc: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| f(x, y)).collect();
    encode(&dc, base)
}

fn digit_map(a: u32, base: u32, len: u32, f: impl Fn(u32) -> u32) -> u32 {
    let da = decode(a, base, len);
    let dc: Vec<u32> = da.iter().map(|&x| f(x)).collect();
    encode(&dc, base)
}

fn vec_zip(a: u32, b: u32, base: u32, len: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
    digit_zip(a, b, base, len, f)
}

fn vec_map(a: u32, base: u32, len: u32, f: impl Fn(u32) -> u32) -> u32 {
    digit_map(a, base, len, f)
}

fn prod_decode(mut id: u32, factors: &[Rc<FiniteStarRing>]) -> Vec<u32> {
    factors
        .iter()
        .map(|r| {
            let d = id % r.order;
            id /= r.order;
            d
        })
        .collect()
}

fn prod_encode(digits: &[u32], factors: &[Rc<FiniteStarRing>]) -> u32 {
    factors
        .iter()
        .zip(digits)
        .rev()
        .fold(0u32, |acc, (r, &d)| acc * r.order + d)
}

fn sub_index(elems: &[u32], parent_id: u32) -> u32 {
    elems.binary_search(&parent_id).expect("subring not closed") as u32
}

// ---- polynomial helpers ----

/// Multiply two coefficient vectors over F_p and reduce mod the monic
/// `modulus` (low degree first, length k+1).
fn fp_poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate().take(k) {
            let idx = i - k + j;
            let sub = (c as u64 * m as u64) % p as u64;
            prod[idx] = ((prod[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

/// Same over an arbitrary commutative base ring; modulus monic with
/// coefficients given as base ids.
fn base_poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], base: &FiniteStarRing) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = base.add(prod[i + j], base.mul(x, y));
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate().take(k) {
            let idx = i - k + j;
            prod[idx] = base.sub(prod[idx], base.mul(c, m));
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

/// Lexicographically smallest monic irreducible of degree k over F_p
/// (coefficients low to high, leading coefficient 1).
fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        // t itself; GF(p,1) = F_p.
        return vec![0, 1];
    }
    let count = {
        let mut c = 1u64;
        for _ in 0..k {
            c *= p as u64;
        }
        c
    };
    for low in 0..count {
        let mut m: Vec<u32> = {
            let mut id = low;
            (0..k)
                .map(|_| {
                    let d = (id % p as u64) as u32;
                    id /= p as u64;
                    d
                })
                .collect()
        };
        m.push(1);
        if fp_poly_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn fp_poly_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    // Trial division by all monic polynomials of degree 1..=k/2.
    for d in 1..=(k / 2) {
        let count = {
            let mut c = 1u64;
            for _ in 0..d {
                c *= p as u64;
            }
            c
        };
        for low in 0..count {
            let mut div: Vec<u32> = {
                let mut id = low;
                (0..d)
                    .map(|_| {
                        let x = (id % p as u64) as u32;
                        id /= p as u64;
                        x
                    })
                    .collect()
            };
            div.push(1);
            if fp_poly_divides(&div, m, p) {
                return false;
            }
        }
    }
    true
}

fn fp_poly_divides(div: &[u32], m: &[u32], p: u32) -> bool {
    // Remainder of m by monic div.
    let mut rem: Vec<u32> = m.to_vec();
    let d = div.len() - 1;
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for (j, &dj) in div.iter().enumerate().take(d) {
            let idx = i - d + j;
            let sub = (c as u64 * dj as u64) % p as u64;
            rem[idx] = ((rem[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
    }
    rem.iter().take(d).all(|&c| c == 0)
}

// ---- constructors ----

fn new_ring(
    order: u64,
    one: u32,
    backend: Backend,
    canonical: Option<RingExpr>,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if order > config.order_cap {
        return Err(BuildError::TooLarge {
            order,
            cap: config.order_cap,
        });
    }
    Ok(Rc::new(FiniteStarRing {
        order: order as u32,
        one,
        backend,
        canonical,
        table_threshold: config.table_threshold,
        caches: Caches::default(),
    }))
}

pub fn build_zmod(n: u32, config: &BuildConfig) -> Result<Rc<FiniteStarRing>, BuildError> {
    if n < 2 {
        return Err(BuildError::InvalidExpr(format!("Z({n}) needs n >= 2")));
    }
    new_ring(
        n as u64,
        1,
        Backend::Zmod { n },
        Some(RingExpr::Zmod { n }),
        config,
    )
}

pub fn build_gf(
    p: u32,
    k: u32,
    frob: u32,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    let expr = RingExpr::FiniteField { p, k, frob };
    expr.validate()?;
    let modulus = smallest_irreducible(p, k);
    let order = expr.order_bound()?;
    new_ring(
        order,
        1,
        Backend::Gf {
            p,
            k,
            modulus,
            frob: frob % k,
        },
        Some(expr.canonicalize()),
        config,
    )
}

pub fn build_quot(
    base: Rc<FiniteStarRing>,
    modulus: &[u32],
    gen_image: &[u32],
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if !base.is_commutative() {
        return Err(BuildError::InvalidExpr(
            "quotient adjunction needs a commutative base".into(),
        ));
    }
    if modulus.len() < 2 || *modulus.last().unwrap() != base.one() {
        return Err(BuildError::InvalidExpr(
            "modulus must be monic of degree >= 1".into(),
        ));
    }
    let deg = (modulus.len() - 1) as u32;
    if modulus.iter().any(|&c| c >= base.order()) || gen_image.iter().any(|&c| c >= base.order()) {
        return Err(BuildError::InvalidExpr("coefficient id out of range".into()));
    }
    if gen_image.len() > deg as usize {
        return Err(BuildError::InvalidExpr(
            "generator image degree exceeds modulus degree".into(),
        ));
    }
    let order = {
        let mut o = 1u64;
        for _ in 0..deg {
            o = o.checked_mul(base.order() as u64).ok_or(BuildError::TooLarge {
                order: u64::MAX,
                cap: config.order_cap,
            })?;
        }
        o
    };
    // Powers of the generator image, reduced mod the modulus.
    let mut gen_pows: Vec<Vec<u32>> = Vec::with_capacity(deg as usize);
    let mut one_poly = vec![0u32; deg as usize];
    one_poly[0] = base.one();
    gen_pows.push(one_poly);
    let mut img = gen_image.to_vec();
    img.resize(deg as usize, 0);
    for i in 1..deg as usize {
        let prev = gen_pows[i - 1].clone();
        gen_pows.push(base_poly_mulmod(&prev, &img, modulus, &base));
    }
    let ring = new_ring(
        order,
        base.one(), // c_0 = 1 digit: id = one since base zero id is 0
        Backend::Quot {
            base,
            deg,
            modulus: modulus.to_vec(),
            gen_pows,
        },
        None,
        config,
    )?;
    // The declared generator image must induce an involution; invalid images
    // are rejected, not repaired.
    let report = verify_star_ring_axioms(&ring, config);
    if let Some(bad) = report.entries.iter().find(|e| !e.pass) {
        return Err(BuildError::InvalidExpr(format!(
            "generator image does not induce a *-ring: {} fails",
            bad.name
        )));
    }
    Ok(ring)
}

pub fn matrix_ring(
    entry: &Rc<FiniteStarRing>,
    n: u32,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if n < 1 {
        return Err(BuildError::InvalidExpr("matrix size must be >= 1".into()));
    }
    let mut order = 1u64;
    for _ in 0..n * n {
        order = order
            .checked_mul(entry.order() as u64)
            .ok_or(BuildError::TooLarge {
                order: u64::MAX,
                cap: config.order_cap,
            })?;
    }
    // Identity matrix id.
    let ord = entry.order();
    let mut digits = vec![0u32; (n * n) as usize];
    for i in 0..n {
        digits[(i * n + i) as usize] = entry.one();
    }
    let one = digits.iter().rev().fold(0u32, |acc, &d| {
        acc.wrapping_mul(ord).wrapping_add(d)
    });
    let canonical = entry.canonical_expr().map(|e| {
        RingExpr::Matrix {
            n,
            entry: alloc::boxed::Box::new(e.clone()),
        }
        .canonicalize()
    });
    new_ring(
        order,
        one,
        Backend::Matrix {
            entry: Rc::clone(entry),
            n,
        },
        canonical,
        config,
    )
}

pub fn direct_product(
    factors: &[Rc<FiniteStarRing>],
    perm: Option<Vec<u32>>,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if factors.is_empty() {
        return Err(BuildError::InvalidExpr("empty product".into()));
    }
    if let Some(p) = &perm {
        if p.len() != factors.len() {
            return Err(BuildError::InvalidExpr("permutation length mismatch".into()));
        }
        for (i, &x) in p.iter().enumerate() {
            if x as usize >= p.len() || p[x as usize] as usize != i {
                return Err(BuildError::InvalidExpr(
                    "factor permutation is not self-inverse".into(),
                ));
            }
            if x as usize != i {
                let a = factors[i].canonical_expr();
                let b = factors[x as usize].canonical_expr();
                if a.is_none() || a != b {
                    return Err(BuildError::InvalidExpr(format!(
                        "swapped factors {i} and {x} are not structurally identical"
                    )));
                }
            }
        }
    }
    let mut order = 1u64;
    for f in factors {
        order = order
            .checked_mul(f.order() as u64)
            .ok_or(BuildError::TooLarge {
                order: u64::MAX,
                cap: config.order_cap,
            })?;
    }
    let ones: Vec<u32> = factors.iter().map(|f| f.one()).collect();
    let one = factors
        .iter()
        .zip(&ones)
        .rev()
        .fold(0u32, |acc, (r, &d)| acc * r.order() + d);
    let canonical = factors
        .iter()
        .map(|f| f.canonical_expr().cloned())
        .collect::<Option<Vec<_>>>()
        .map(|fs| {
            RingExpr::Product {
                factors: fs,
                perm: perm.clone(),
            }
            .canonicalize()
        });
    new_ring(
        order,
        one,
        Backend::Product {
            factors: factors.to_vec(),
            perm,
        },
        canonical,
        config,
    )
}

pub fn corner_ring(
    parent: &Rc<FiniteStarRing>,
    p: u32,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if !parent.is_projection(p) {
        return Err(BuildError::NotAProjection { id: p });
    }
    let mut elems: Vec<u32> = parent
        .elements()
        .map(|x| parent.mul(parent.mul(p, x), p))
        .collect();
    elems.sort_unstable();
    elems.dedup();
    let one = sub_index(&elems, p);
    let canonical = parent.canonical_expr().map(|e| RingExpr::Corner {
        parent: alloc::boxed::Box::new(e.clone()),
        projection: p,
    });
    new_ring(
        elems.len() as u64,
        one,
        Backend::Sub {
            parent: Rc::clone(parent),
            elems,
        },
        canonical,
        config,
    )
}

pub fn generated_subring(
    parent: &Rc<FiniteStarRing>,
    gens: &[u32],
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if gens.iter().any(|&g| g >= parent.order()) {
        return Err(BuildError::InvalidExpr("generator id out of range".into()));
    }
    let n = parent.order();
    let mut in_set = BitSet::empty(n);
    in_set.insert(0);
    in_set.insert(parent.one());
    for &g in gens {
        in_set.insert(g);
    }
    // Fixpoint closure under +, -, *, star.
    loop {
        let current = in_set.to_ids();
        let before = current.len();
        for &a in &current {
            in_set.insert(parent.neg(a));
            in_set.insert(parent.star(a));
            for &b in &current {
                in_set.insert(parent.add(a, b));
                in_set.insert(parent.mul(a, b));
            }
        }
        if in_set.count() as usize == before {
            break;
        }
    }
    let elems = in_set.to_ids();
    let one = sub_index(&elems, parent.one());
    let canonical = parent.canonical_expr().map(|e| {
        RingExpr::GenSub {
            parent: alloc::boxed::Box::new(e.clone()),
            gens: gens.to_vec(),
        }
        .canonicalize()
    });
    new_ring(
        elems.len() as u64,
        one,
        Backend::Sub {
            parent: Rc::clone(parent),
            elems,
        },
        canonical,
        config,
    )
}

pub fn group_ring(
    group: &crate::group::GroupSpec,
    coeff: &Rc<FiniteStarRing>,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    if !coeff.is_commutative() {
        return Err(BuildError::NonCommutativeCoefficients);
    }
    let table = group::realize(group).map_err(|e| BuildError::InvalidExpr(format!("{e}")))?;
    let mut order = 1u64;
    for _ in 0..table.order {
        order = order
            .checked_mul(coeff.order() as u64)
            .ok_or(BuildError::TooLarge {
                order: u64::MAX,
                cap: config.order_cap,
            })?;
    }
    // Identity of the group is index 0, so 1 = 1_coeff * g0.
    let one = coeff.one();
    let canonical = coeff.canonical_expr().map(|e| RingExpr::GroupRing {
        group: group.clone(),
        coeff: alloc::boxed::Box::new(e.clone()),
    });
    new_ring(
        order,
        one,
        Backend::GroupRing {
            coeff: Rc::clone(coeff),
            group: table,
        },
        canonical,
        config,
    )
}

/// Raw-table ring for negative controls in tests.
pub fn from_tables(
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    star: Vec<u32>,
    one: u32,
    config: &BuildConfig,
) -> Result<Rc<FiniteStarRing>, BuildError> {
    let n = neg.len() as u64;
    if add.len() as u64 != n * n || mul.len() as u64 != n * n || star.len() as u64 != n {
        return Err(BuildError::InvalidExpr("table size mismatch".into()));
    }
    new_ring(n, one, Backend::Table { add, mul, neg, star }, None, config)
}

/// Build a ring from a canonicalized expression tree. Element encodings are
/// deterministic functions of the canonical expression.
pub fn build_ring(expr: &RingExpr, config: &BuildConfig) -> Result<Rc<FiniteStarRing>, BuildError> {
    let expr = expr.canonicalize();
    expr.validate()?;
    let order = expr.order_bound()?;
    if order > config.order_cap {
        return Err(BuildError::TooLarge {
            order,
            cap: config.order_cap,
        });
    }
    match &expr {
        RingExpr::Zmod { n } => build_zmod(*n, config),
        RingExpr::FiniteField { p, k, frob } => build_gf(*p, *k, *frob, config),
        RingExpr::QuotAdjoin {
            base,
            modulus,
            gen_image,
        } => {
            let b = build_ring(base, config)?;
            let ring = build_quot(b, modulus, gen_image, config)?;
            // Attach the canonical expr (build_quot itself has no expr view).
            Ok(with_expr(ring, expr.clone()))
        }
        RingExpr::Matrix { n, entry } => {
            let e = build_ring(entry, config)?;
            matrix_ring(&e, *n, config)
        }
        RingExpr::Product { factors, perm } => {
            let fs: Vec<Rc<FiniteStarRing>> = factors
                .iter()
                .map(|f| build_ring(f, config))
                .collect::<Result<_, _>>()?;
            direct_product(&fs, perm.clone(), config)
        }
        RingExpr::GroupRing { group, coeff } => {
            let c = build_ring(coeff, config)?;
            group_ring(group, &c, config)
        }
        RingExpr::Corner { parent, projection } => {
            let p = build_ring(parent, config)?;
            corner_ring(&p, *projection, config)
        }
        RingExpr::GenSub { parent, gens } => {
            let p = build_ring(parent, config)?;
            generated_subring(&p, gens, config)
        }
    }
}

fn with_expr(ring: Rc<FiniteStarRing>, expr: RingExpr) -> Rc<FiniteStarRing> {
    // Rings are shared behind Rc immediately after construction; the only
    // caller holds the single reference, so unwrap is safe.
    let mut inner = Rc::try_unwrap(ring).ok().expect("unshared ring");
    inner.canonical = Some(expr);
    Rc::new(inner)
}

// ---- axiom verification ----

#[derive(Clone, Debug)]
pub struct AxiomCheckEntry {
    pub name: &'static str,
    pub pass: bool,
    /// Offending elements on failure.
    pub witness: Option<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct StarAxiomReport {
    pub entries: Vec<AxiomCheckEntry>,
    /// True when every identity was checked over its full domain.
    pub exhaustive: bool,
    /// Sampled tuples per identity when not exhaustive.
    pub sampled: Option<u32>,
}

impl StarAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Check the ring and involution identities. Pair-quantified identities are
/// exhaustive up to `exhaustive_pair_bound` elements, triple-quantified up
/// to `exhaustive_triple_bound`; beyond that, seeded stratified sampling
/// with the coverage recorded in the report.
pub fn verify_star_ring_axioms(ring: &FiniteStarRing, config: &BuildConfig) -> StarAxiomReport {
    let n = ring.order();
    let pair_exh = n <= config.exhaustive_pair_bound;
    let triple_exh = n <= config.exhaustive_triple_bound;
    let mut entries = Vec::new();
    let mut rng = SplitMix64::new(config.seed);
    let samples = config.sample_count;

    let mut pairs = |f: &dyn Fn(u32, u32) -> bool| -> Option<Vec<u32>> {
        if pair_exh {
            for a in 0..n {
                for b in 0..n {
                    if !f(a, b) {
                        return Some(vec![a, b]);
                    }
                }
            }
            None
        } else {
            for _ in 0..samples {
                let a = rng.below(n);
                let b = rng.below(n);
                if !f(a, b) {
                    return Some(vec![a, b]);
                }
            }
            None
        }
    };

    let unary = |f: &dyn Fn(u32) -> bool| -> Option<Vec<u32>> {
        (0..n).find(|&a| !f(a)).map(|a| vec![a])
    };

    let mut push = |name: &'static str, w: Option<Vec<u32>>| {
        entries.push(AxiomCheckEntry {
            name,
            pass: w.is_none(),
            witness: w,
        });
    };

    push("add_commutative", pairs(&|a, b| ring.add(a, b) == ring.add(b, a)));
    push("zero_identity", unary(&|a| ring.add(a, 0) == a));
    push("neg_inverse", unary(&|a| ring.add(a, ring.neg(a)) == 0));
    push("one_identity", unary(&|a| {
        ring.mul(a, ring.one()) == a && ring.mul(ring.one(), a) == a
    }));
    push("star_involutive", unary(&|a| ring.star(ring.star(a)) == a));
    push(
        "star_additive",
        pairs(&|a, b| ring.star(ring.add(a, b)) == ring.add(ring.star(a), ring.star(b))),
    );
    push(
        "star_antimultiplicative",
        pairs(&|a, b| ring.star(ring.mul(a, b)) == ring.mul(ring.star(b), ring.star(a))),
    );

    let mut triples = |f: &dyn Fn(u32, u32, u32) -> bool| -> Option<Vec<u32>> {
        if triple_exh {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !f(a, b, c) {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        } else {
            for _ in 0..samples {
                let (a, b, c) = (rng.below(n), rng.below(n), rng.below(n));
                if !f(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
            None
        }
    };

    let mut push2 = |name: &'static str, w: Option<Vec<u32>>| {
        entries.push(AxiomCheckEntry {
            name,
            pass: w.is_none(),
            witness: w,
        });
    };
    push2(
        "add_associative",
        triples(&|a, b, c| ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))),
    );
    push2(
        "mul_associative",
        triples(&|a, b, c| ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))),
    );
    push2(
        "left_distributive",
        triples(&|a, b, c| {
            ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        }),
    );
    push2(
        "right_distributive",
        triples(&|a, b, c| {
            ring.mul(ring.add(a, b), c) == ring.add(ring.mul(a, c), ring.mul(b, c))
        }),
    );
    push2(
        "zero_ne_one",
        if n > 1 && ring.one() == 0 {
            Some(vec![0])
        } else {
            None
        },
    );

    StarAxiomReport {
        entries,
        exhaustive: pair_exh && triple_exh,
        sampled: (!(pair_exh && triple_exh)).then_some(samples),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::GroupSpec;
    use alloc::boxed::Box;

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn build(e: &RingExpr) -> Rc<FiniteStarRing> {
        build_ring(e, &cfg()).unwrap()
    }

    #[test]
    fn orders_match_formulas() {
        assert_eq!(build(&RingExpr::Zmod { n: 6 }).order(), 6);
        let m2f2 = RingExpr::Matrix {
            n: 2,
            entry: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
        };
        assert_eq!(build(&m2f2).order(), 16);
        let gr = RingExpr::GroupRing {
            group: GroupSpec::Cyclic(3),
            coeff: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
        };
        assert_eq!(build(&gr).order(), 8);
    }

    #[test]
    fn axioms_hold_on_small_corpus() {
        let exprs = [
            RingExpr::Zmod { n: 6 },
            RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
            },
            RingExpr::FiniteField { p: 3, k: 2, frob: 1 },
            RingExpr::GroupRing {
                group: GroupSpec::Dihedral(3),
                coeff: Box::new(RingExpr::FiniteField { p: 2, k: 1, frob: 0 }),
            },
            RingExpr::Product {
                factors: alloc::vec![
                    RingExpr::FiniteField { p: 3, k: 1, frob: 0 },
                    RingExpr::FiniteField { p: 3, k: 1, frob: 0 },
                ],
                perm: Some(alloc::vec![1, 0]),
            },
        ];
        for e in &exprs {
            let r = build(e);
            let rep = verify_star_ring_axioms(&r, &cfg());
            assert!(rep.all_pass(), "{} fails {:?}", e.print(), rep);
            assert!(rep.exhaustive);
        }
    }

    #[test]
    fn corrupted_table_fails_with_witness() {
        // Z4 tables with one multiplication entry corrupted.
        let n = 4u32;
        let add: Vec<u32> = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let mut mul: Vec<u32> = (0..n).flat_map(|a| (0..n).map(move |b| (a * b) % n)).collect();
        mul[(2 * n + 3) as usize] = 1; // 2*3 = 1, breaks distributivity
        let neg: Vec<u32> = (0..n).map(|a| (n - a) % n).collect();
        let star: Vec<u32> = (0..n).collect();
        let r = from_tables(add, mul, neg, star, 1, &cfg()).unwrap();
        let rep = verify_star_ring_axioms(&r, &cfg());
        assert!(!rep.all_pass());
        let bad = rep.entries.iter().find(|e| !e.pass).unwrap();
        assert!(bad.witness.is_some());
    }

    #[test]
    fn quot_adjoin_gaussian_integers_mod3() {
        // Z3[i] with i* = -i: modulus x^2 + 1, image -x = 2x.
        let base = build_zmod(3, &cfg()).unwrap();
        let ring = build_quot(base, &[1, 0, 1], &[0, 2], &cfg()).unwrap();
        assert_eq!(ring.order(), 9);
        // i has id 3 (digit vector [0,1]); i* = -i = [0,2] -> id 6.
        assert_eq!(ring.star(3), 6);
        // i^2 = -1 = [2,0] -> id 2.
        assert_eq!(ring.mul(3, 3), 2);
    }

    #[test]
    fn quot_adjoin_rejects_non_involution_image() {
        // image i -> 1 is not a ring involution on Z3[i].
        let base = build_zmod(3, &cfg()).unwrap();
        assert!(build_quot(base, &[1, 0, 1], &[1], &cfg()).is_err());
    }

    #[test]
    fn matrix_star_is_conjugate_transpose() {
        let f2 = build_gf(2, 1, 0, &cfg()).unwrap();
        let m = matrix_ring(&f2, 2, &cfg()).unwrap();
        // e12 has digits [0,1,0,0] -> id 2; its star is e21, digits [0,0,1,0] -> id 4.
        assert_eq!(m.star(2), 4);
        for a in m.elements() {
            for b in m.elements() {
                assert_eq!(m.star(m.mul(a, b)), m.mul(m.star(b), m.star(a)));
            }
        }
    }

    #[test]
    fn corner_of_m2f3_at_e11() {
        let f3 = build_gf(3, 1, 0, &cfg()).unwrap();
        let m = matrix_ring(&f3, 2, &cfg()).unwrap();
        // e11 digits [1,0,0,0] -> id 1.
        let c = corner_ring(&m, 1, &cfg()).unwrap();
        assert_eq!(c.order(), 3);
        assert!(c.is_commutative());
        // Corner at 1 is the ring itself; corner at 0 the zero ring.
        assert_eq!(corner_ring(&m, m.one(), &cfg()).unwrap().order(), m.order());
        assert_eq!(corner_ring(&m, 0, &cfg()).unwrap().order(), 1);
        // Non-projection index rejected.
        assert!(matches!(
            corner_ring(&m, 2, &cfg()),
            Err(BuildError::NotAProjection { id: 2 })
        ));
    }

    #[test]
    fn generated_subring_of_e11_in_m2f2() {
        let f2 = build_gf(2, 1, 0, &cfg()).unwrap();
        let m = matrix_ring(&f2, 2, &cfg()).unwrap();
        let s = generated_subring(&m, &[1], &cfg()).unwrap();
        // {0, e11, e22, 1}
        assert_eq!(s.order(), 4);
        let t = generated_subring(&m, &[], &cfg()).unwrap();
        assert_eq!(t.order(), 2); // prime subring of characteristic 2
        let all: Vec<u32> = m.elements().collect();
        assert_eq!(generated_subring(&m, &all, &cfg()).unwrap().order(), 16);
    }

    #[test]
    fn group_ring_c2_f2_has_nilpotent() {
        let f2 = build_gf(2, 1, 0, &cfg()).unwrap();
        let gr = group_ring(&GroupSpec::Cyclic(2), &f2, &cfg()).unwrap();
        assert_eq!(gr.order(), 4);
        // 1 + g has digits [1,1] -> id 3; (1+g)^2 = 0 over F2.
        assert_eq!(gr.mul(3, 3), 0);
    }

    #[test]
    fn group_ring_rejects_noncommutative_coefficients() {
        let f2 = build_gf(2, 1, 0, &cfg()).unwrap();
        let m = matrix_ring(&f2, 2, &cfg()).unwrap();
        assert!(matches!(
            group_ring(&GroupSpec::Cyclic(2), &m, &cfg()),
            Err(BuildError::NonCommutativeCoefficients)
        ));
    }

    #[test]
    fn swap_involution_on_f3xf3() {
        let f3 = build_gf(3, 1, 0, &cfg()).unwrap();
        let p = direct_product(
            &[Rc::clone(&f3), Rc::clone(&f3)],
            Some(alloc::vec![1, 0]),
            &cfg(),
        )
        .unwrap();
        // (1,0) has digits [1,0] -> id 1; star swaps to (0,1) -> id 3.
        assert_eq!(p.star(1), 3);
        assert!(verify_star_ring_axioms(&p, &cfg()).all_pass());
    }

    #[test]
    fn determinism_same_expr_same_tables() {
        let e = RingExpr::GroupRing {
            group: GroupSpec::Cyclic(4),
            coeff: Box::new(RingExpr::Zmod { n: 3 }),
        };
        let a = build(&e);
        let b = build(&e);
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.mul(x, y), b.mul(x, y));
                assert_eq!(a.add(x, y), b.add(x, y));
            }
            assert_eq!(a.star(x), b.star(x));
        }
    }

    #[test]
    fn too_large_rejected() {
        let e = RingExpr::Matrix {
            n: 4,
            entry: Box::new(RingExpr::Zmod { n: 64 }),
        };
        assert!(matches!(
            build_ring(&e, &cfg()),
            Err(BuildError::TooLarge { .. })
        ));
    }
}
