//! Constructor trees for finite *-rings.
//!
//! A `RingExpr` describes how to build a ring: base rings (Z/n, finite
//! fields), quotient adjunctions, matrix rings, direct products (optionally
//! with a factor-permutation involution), group rings, corners and generated
//! subrings. Expressions are canonicalized before building; element ids in
//! `Corner`/`GenSub`/`Quot` refer to the canonical encoding of the child
//! expression.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use crate::group::GroupSpec;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RingExpr {
    /// Z/n with the identity involution, n >= 2.
    Zmod { n: u32 },
    /// GF(p^k). `frob` = j means x -> x^(p^j); j = 0 is the identity.
    /// Requires 2j = 0 mod k so the map is an involution.
    FiniteField { p: u32, k: u32, frob: u32 },
    /// base[t]/(modulus) with t* = gen_image(t) and coefficientwise base star.
    /// `modulus` is a monic polynomial given by base-element ids, low degree
    /// first, length deg+1; `gen_image` has length <= deg.
    QuotAdjoin {
        base: Box<RingExpr>,
        modulus: Vec<u32>,
        gen_image: Vec<u32>,
    },
    /// n x n matrices, involution = entrywise-star transpose.
    Matrix { n: u32, entry: Box<RingExpr> },
    /// Direct product; `perm` (self-inverse, swapping only structurally
    /// identical factors) composes a factor permutation into the involution.
    Product {
        factors: Vec<RingExpr>,
        perm: Option<Vec<u32>>,
    },
    /// Group ring over a commutative coefficient ring; involution is
    /// coefficient star composed with g -> g^{-1}.
    GroupRing {
        group: GroupSpec,
        coeff: Box<RingExpr>,
    },
    /// Corner pRp at the projection with the given element id.
    Corner { parent: Box<RingExpr>, projection: u32 },
    /// Smallest *-subring containing the generators, 0 and 1.
    GenSub { parent: Box<RingExpr>, gens: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Invalid(String),
    TooLarge { order: u64, cap: u64 },
}

impl core::fmt::Display for ExprError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExprError::Invalid(s) => write!(f, "invalid ring expression: {s}"),
            ExprError::TooLarge { order, cap } => {
                write!(f, "ring order {order} exceeds cap {cap}")
            }
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl RingExpr {
    /// Normal form: frobenius exponents reduced mod k, trivial wrappers
    /// (M_1, single-factor products without permutation) unwrapped.
    /// Idempotent: canonicalize(canonicalize(e)) == canonicalize(e).
    pub fn canonicalize(&self) -> RingExpr {
        match self {
            RingExpr::Zmod { n } => RingExpr::Zmod { n: *n },
            RingExpr::FiniteField { p, k, frob } => RingExpr::FiniteField {
                p: *p,
                k: *k,
                frob: if *k == 0 { 0 } else { frob % k },
            },
            RingExpr::QuotAdjoin {
                base,
                modulus,
                gen_image,
            } => {
                let mut gi = gen_image.clone();
                // Trailing zero coefficients carry no information.
                while gi.last() == Some(&0) {
                    gi.pop();
                }
                RingExpr::QuotAdjoin {
                    base: Box::new(base.canonicalize()),
                    modulus: modulus.clone(),
                    gen_image: gi,
                }
            }
            RingExpr::Matrix { n, entry } => {
                let e = entry.canonicalize();
                if *n == 1 {
                    e
                } else {
                    RingExpr::Matrix {
                        n: *n,
                        entry: Box::new(e),
                    }
                }
            }
            RingExpr::Product { factors, perm } => {
                let fs: Vec<RingExpr> = factors.iter().map(|f| f.canonicalize()).collect();
                let perm = match perm {
                    Some(p) if p.iter().enumerate().all(|(i, &x)| x as usize == i) => None,
                    other => other.clone(),
                };
                if fs.len() == 1 && perm.is_none() {
                    fs.into_iter().next().unwrap()
                } else {
                    RingExpr::Product { factors: fs, perm }
                }
            }
            RingExpr::GroupRing { group, coeff } => RingExpr::GroupRing {
                group: group.clone(),
                coeff: Box::new(coeff.canonicalize()),
            },
            RingExpr::Corner { parent, projection } => RingExpr::Corner {
                parent: Box::new(parent.canonicalize()),
                projection: *projection,
            },
            RingExpr::GenSub { parent, gens } => {
                let mut gs = gens.clone();
                gs.sort_unstable();
                gs.dedup();
                RingExpr::GenSub {
                    parent: Box::new(parent.canonicalize()),
                    gens: gs,
                }
            }
        }
    }

    /// Order of the constructed ring, or an upper bound for `Corner` and
    /// `GenSub` (whose exact order needs the parent realized).
    pub fn order_bound(&self) -> Result<u64, ExprError> {
        let check = |o: u64| -> Result<u64, ExprError> {
            if o == 0 {
                Err(ExprError::Invalid("zero order".into()))
            } else {
                Ok(o)
            }
        };
        match self {
            RingExpr::Zmod { n } => check(*n as u64),
            RingExpr::FiniteField { p, k, .. } => {
                checked_pow(*p as u64, *k).ok_or(overflow()).and_then(check)
            }
            RingExpr::QuotAdjoin { base, modulus, .. } => {
                let b = base.order_bound()?;
                let d = modulus.len().saturating_sub(1) as u32;
                checked_pow(b, d).ok_or(overflow()).and_then(check)
            }
            RingExpr::Matrix { n, entry } => {
                let b = entry.order_bound()?;
                checked_pow(b, n * n).ok_or(overflow()).and_then(check)
            }
            RingExpr::Product { factors, .. } => {
                let mut o = 1u64;
                for f in factors {
                    o = o.checked_mul(f.order_bound()?).ok_or(overflow())?;
                }
                check(o)
            }
            RingExpr::GroupRing { group, coeff } => {
                let g = crate::group::realize(group)
                    .map_err(|e| ExprError::Invalid(format!("{e}")))?;
                checked_pow(coeff.order_bound()?, g.order)
                    .ok_or(overflow())
                    .and_then(check)
            }
            RingExpr::Corner { parent, .. } | RingExpr::GenSub { parent, .. } => {
                parent.order_bound()
            }
        }
    }

    /// Cheap structural validation; the full checks (projection indices,
    /// involution axioms of quotient adjunctions, factor-swap compatibility)
    /// run during `build_ring`.
    pub fn validate(&self) -> Result<(), ExprError> {
        match self {
            RingExpr::Zmod { n } => {
                if *n < 2 {
                    return Err(ExprError::Invalid(format!("Z({n}) needs n >= 2")));
                }
            }
            RingExpr::FiniteField { p, k, frob } => {
                if !is_prime(*p) {
                    return Err(ExprError::Invalid(format!("{p} is not prime")));
                }
                if *k == 0 {
                    return Err(ExprError::Invalid("field degree must be >= 1".into()));
                }
                if (2 * (frob % k)) % k != 0 {
                    return Err(ExprError::Invalid(format!(
                        "frobenius x -> x^({p}^{frob}) is not an involution on GF({p},{k})"
                    )));
                }
            }
            RingExpr::QuotAdjoin { base, modulus, .. } => {
                base.validate()?;
                if modulus.len() < 2 {
                    return Err(ExprError::Invalid("quotient modulus must have degree >= 1".into()));
                }
            }
            RingExpr::Matrix { n, entry } => {
                if *n < 1 {
                    return Err(ExprError::Invalid("matrix size must be >= 1".into()));
                }
                entry.validate()?;
            }
            RingExpr::Product { factors, perm } => {
                if factors.is_empty() {
                    return Err(ExprError::Invalid("empty product".into()));
                }
                for f in factors {
                    f.validate()?;
                }
                if let Some(p) = perm {
                    if p.len() != factors.len() {
                        return Err(ExprError::Invalid("permutation length mismatch".into()));
                    }
                    let n = p.len();
                    for (i, &x) in p.iter().enumerate() {
                        if x as usize >= n || p[x as usize] as usize != i {
                            return Err(ExprError::Invalid(
                                "factor permutation is not self-inverse".into(),
                            ));
                        }
                    }
                    // Swapped factors must build identically.
                    for (i, &x) in p.iter().enumerate() {
                        if x as usize != i
                            && factors[i].canonicalize() != factors[x as usize].canonicalize()
                        {
                            return Err(ExprError::Invalid(format!(
                                "swapped factors {i} and {x} are not structurally identical"
                            )));
                        }
                    }
                }
            }
            RingExpr::GroupRing { group, coeff } => {
                crate::group::realize(group).map_err(|e| ExprError::Invalid(format!("{e}")))?;
                coeff.validate()?;
            }
            RingExpr::Corner { parent, .. } => parent.validate()?,
            RingExpr::GenSub { parent, .. } => parent.validate()?,
        }
        Ok(())
    }

    /// Canonical text form, matching the `srl` grammar.
    pub fn print(&self) -> String {
        match self {
            RingExpr::Zmod { n } => format!("Z({n})"),
            RingExpr::FiniteField { p, k, frob } => {
                if *frob == 0 {
                    format!("GF({p},{k})")
                } else {
                    format!("GF({p},{k})@frob({frob})")
                }
            }
            RingExpr::QuotAdjoin {
                base,
                modulus,
                gen_image,
            } => format!(
                "Quot({},{},{})",
                base.print(),
                print_poly(modulus),
                print_poly(gen_image)
            ),
            RingExpr::Matrix { n, entry } => format!("M({n},{})", entry.print()),
            RingExpr::Product { factors, perm } => {
                let body: Vec<String> = factors.iter().map(|f| f.print()).collect();
                let mut s = format!("P({})", body.join(","));
                if let Some(p) = perm {
                    let ps: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
                    s.push_str(&format!("@swap({})", ps.join(",")));
                }
                s
            }
            RingExpr::GroupRing { group, coeff } => {
                format!("GR({},{})", print_group(group), coeff.print())
            }
            RingExpr::Corner { parent, projection } => {
                format!("Corner({},{projection})", parent.print())
            }
            RingExpr::GenSub { parent, gens } => {
                let gs: Vec<String> = gens.iter().map(|g| format!("{g}")).collect();
                format!("Sub({},{})", parent.print(), gs.join(","))
            }
        }
    }
}

fn print_poly(coeffs: &[u32]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| match i {
            0 => format!("{c}"),
            1 => format!("{c}x"),
            _ => format!("{c}x^{i}"),
        })
        .collect();
    terms.join("+")
}

fn print_group(g: &GroupSpec) -> String {
    match g {
        GroupSpec::Cyclic(n) => format!("C({n})"),
        GroupSpec::Dihedral(n) => format!("D({n})"),
        GroupSpec::Symmetric(n) => format!("S({n})"),
        GroupSpec::Product(gs) => {
            let parts: Vec<String> = gs.iter().map(print_group).collect();
            parts.join("x")
        }
        GroupSpec::CayleyTable { table, identity } => {
            format!("Cayley(n={},e={identity})", table.len())
        }
    }
}

fn overflow() -> ExprError {
    ExprError::TooLarge {
        order: u64::MAX,
        cap: u64::MAX,
    }
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > (1 << 40) {
            return None;
        }
    }
    Some(acc)
}
