//! Finite group specifications and their Cayley-table realizations.
//!
//! Group rings need the multiplication table and the inversion map of the
//! coefficient group; everything here is validated at build time
//! (associativity, identity, inverses).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Abstract description of a finite group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupSpec {
    /// Cyclic group of order n (n >= 1).
    Cyclic(u32),
    /// Dihedral group of order 2n (n >= 1).
    Dihedral(u32),
    /// Symmetric group on n letters, n <= 4.
    Symmetric(u32),
    /// Direct product.
    Product(Vec<GroupSpec>),
    /// Explicit Cayley table over indices 0..n; `identity` is the
    /// identity index. Checked for the group axioms on build.
    CayleyTable { table: Vec<Vec<u32>>, identity: u32 },
}

/// Realized finite group: indices 0..order with identity at 0.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub order: u32,
    /// mul[(a * order + b)] = a·b
    pub mul: Vec<u32>,
    /// inv[a] = a^{-1}
    pub inv: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    Invalid(String),
}

impl core::fmt::Display for GroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupError::Invalid(s) => write!(f, "invalid group: {s}"),
        }
    }
}

impl GroupTable {
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.order + b) as usize]
    }

    fn from_raw(order: u32, mul: Vec<u32>, identity: u32) -> Result<Self, GroupError> {
        let n = order;
        if n == 0 {
            return Err(GroupError::Invalid("empty carrier".into()));
        }
        let at = |a: u32, b: u32| mul[(a * n + b) as usize];
        for a in 0..n {
            for b in 0..n {
                if at(a, b) >= n {
                    return Err(GroupError::Invalid("table entry out of range".into()));
                }
            }
        }
        for a in 0..n {
            if at(identity, a) != a || at(a, identity) != a {
                return Err(GroupError::Invalid(format!("{identity} is not an identity")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::Invalid(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![u32::MAX; n as usize];
        for a in 0..n {
            match (0..n).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inv[a as usize] = b,
                None => return Err(GroupError::Invalid(format!("{a} has no inverse"))),
            }
        }
        // Renumber so the identity is index 0.
        if identity != 0 {
            let swap = |x: u32| {
                if x == identity {
                    0
                } else if x == 0 {
                    identity
                } else {
                    x
                }
            };
            let mut mul2 = vec![0u32; (n * n) as usize];
            for a in 0..n {
                for b in 0..n {
                    mul2[(a * n + b) as usize] = swap(at(swap(a), swap(b)));
                }
            }
            let mut inv2 = vec![0u32; n as usize];
            for a in 0..n {
                inv2[a as usize] = swap(inv[swap(a) as usize]);
            }
            return Ok(GroupTable {
                order: n,
                mul: mul2,
                inv: inv2,
            });
        }
        Ok(GroupTable { order: n, mul, inv })
    }
}

/// Realize a specification into a validated Cayley table.
pub fn realize(spec: &GroupSpec) -> Result<GroupTable, GroupError> {
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(GroupError::Invalid("C(0)".into()));
            }
            let mut mul = vec![0u32; (n * n) as usize];
            for a in 0..n {
                for b in 0..n {
                    mul[(a * n + b) as usize] = (a + b) % n;
                }
            }
            GroupTable::from_raw(n, mul, 0)
        }
        GroupSpec::Dihedral(n) => {
            let n = *n;
            if n == 0 {
                return Err(GroupError::Invalid("D(0)".into()));
            }
            // Elements r^i s^j, encoded i + n*j  (0 <= i < n, j in {0,1}).
            let ord = 2 * n;
            let enc = |i: u32, j: u32| i + n * j;
            let mut mul = vec![0u32; (ord * ord) as usize];
            for i1 in 0..n {
                for j1 in 0..2 {
                    for i2 in 0..n {
                        for j2 in 0..2 {
                            // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                            let i = if j1 == 0 {
                                (i1 + i2) % n
                            } else {
                                (i1 + n - i2 % n) % n
                            };
                            let j = (j1 + j2) % 2;
                            mul[(enc(i1, j1) * ord + enc(i2, j2)) as usize] = enc(i, j);
                        }
                    }
                }
            }
            GroupTable::from_raw(ord, mul, 0)
        }
        GroupSpec::Symmetric(n) => {
            let n = *n;
            if n == 0 || n > 4 {
                return Err(GroupError::Invalid("S(n) supported for 1 <= n <= 4".into()));
            }
            let perms = permutations(n as usize);
            let ord = perms.len() as u32;
            let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap() as u32;
            let mut mul = vec![0u32; (ord * ord) as usize];
            for (a, pa) in perms.iter().enumerate() {
                for (b, pb) in perms.iter().enumerate() {
                    // (pa ∘ pb)(x) = pa(pb(x))
                    let comp: Vec<usize> = (0..n as usize).map(|x| pa[pb[x]]).collect();
                    mul[a * ord as usize + b] = index_of(&comp);
                }
            }
            let id: Vec<usize> = (0..n as usize).collect();
            GroupTable::from_raw(ord, mul, index_of(&id))
        }
        GroupSpec::Product(specs) => {
            if specs.is_empty() {
                return Err(GroupError::Invalid("empty group product".into()));
            }
            let tables: Vec<GroupTable> = specs.iter().map(realize).collect::<Result<_, _>>()?;
            let ord: u32 = tables.iter().map(|t| t.order).product();
            let decode = |mut x: u32| -> Vec<u32> {
                tables
                    .iter()
                    .map(|t| {
                        let d = x % t.order;
                        x /= t.order;
                        d
                    })
                    .collect()
            };
            let encode = |ds: &[u32]| -> u32 {
                tables
                    .iter()
                    .zip(ds)
                    .rev()
                    .fold(0u32, |acc, (t, &d)| acc * t.order + d)
            };
            let mut mul = vec![0u32; (ord * ord) as usize];
            for a in 0..ord {
                for b in 0..ord {
                    let da = decode(a);
                    let db = decode(b);
                    let dc: Vec<u32> = tables
                        .iter()
                        .zip(da.iter().zip(&db))
                        .map(|(t, (&x, &y))| t.mul(x, y))
                        .collect();
                    mul[(a * ord + b) as usize] = encode(&dc);
                }
            }
            GroupTable::from_raw(ord, mul, 0)
        }
        GroupSpec::CayleyTable { table, identity } => {
            let n = table.len() as u32;
            if table.iter().any(|row| row.len() as u32 != n) {
                return Err(GroupError::Invalid("table is not square".into()));
            }
            let mut mul = Vec::with_capacity((n * n) as usize);
            for row in table {
                mul.extend_from_slice(row);
            }
            GroupTable::from_raw(n, mul, *identity)
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_dihedral_orders() {
        assert_eq!(realize(&GroupSpec::Cyclic(5)).unwrap().order, 5);
        assert_eq!(realize(&GroupSpec::Dihedral(3)).unwrap().order, 6);
        assert_eq!(realize(&GroupSpec::Symmetric(4)).unwrap().order, 24);
    }

    #[test]
    fn dihedral3_is_nonabelian() {
        let g = realize(&GroupSpec::Dihedral(3)).unwrap();
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
    }

    #[test]
    fn bad_table_rejected() {
        // 2x2 table that is not associative / lacks identity behaviour.
        let spec = GroupSpec::CayleyTable {
            table: vec![vec![0, 1], vec![1, 1]],
            identity: 0,
        };
        assert!(realize(&spec).is_err());
    }

    #[test]
    fn identity_renumbered_to_zero() {
        // C2 with identity at index 1.
        let spec = GroupSpec::CayleyTable {
            table: vec![vec![1, 0], vec![0, 1]],
            identity: 1,
        };
        let g = realize(&spec).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.inv[1], 1);
    }
}
