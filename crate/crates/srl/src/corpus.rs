//! Deterministic corpus of ring specifications plus a randomized stream
//! for counterexample hunting.

use srl_core::rng::SplitMix64;

/// Fixed corpus covering every constructor family: Z/n, finite fields with
/// both involutions, Gaussian-style quotients, 2x2 matrix rings, products
/// (one with a swap involution, one of order 4096), group rings, corners
/// and generated subrings. Order of entries is part of the report format.
pub fn default_corpus() -> Vec<String> {
    let mut out: Vec<String> = (2..=16).map(|n| format!("Z({n})")).collect();
    out.extend(
        [
            "GF(2,2)",
            "GF(2,2)@frob(1)",
            "GF(2,3)",
            "GF(3,2)",
            "GF(3,2)@frob(1)",
            "GF(2,4)@frob(2)",
            "Quot(Z(3),x^2+1,-x)",
            "Quot(Z(7),x^2+1,-x)",
            "M(2,GF(2,1))",
            "M(2,GF(3,1))",
            "M(2,Z(4))",
            "M(2,Z(6))",
            "P(Z(2),Z(3))",
            "P(GF(3,1),GF(3,1))@swap(1,0)",
            "P(Z(4),Z(4),Z(4),Z(4),Z(4),Z(4))",
            "GR(C(2),GF(3,1))",
            "GR(C(3),Z(4))",
            "GR(C(4),Z(2))",
            "GR(D(3),GF(2,1))",
            "Corner(M(2,GF(3,1)),1)",
            "Sub(M(2,GF(2,1)),1)",
            "Sub(M(2,GF(3,1)),1,27)",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    out
}

/// Randomized spec stream for hunts: small members of every family, drawn
/// deterministically from the seed. Duplicates are possible and harmless.
pub fn hunt_stream(seed: u64, count: usize) -> Vec<String> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let primes = [2u32, 3, 5, 7, 11, 13];
    while out.len() < count {
        let spec = match rng.below(8) {
            0 => format!("Z({})", 2 + rng.below(31)),
            1 => {
                let p = primes[rng.below(3) as usize];
                let k = 1 + rng.below(if p == 2 { 4 } else { 2 });
                // x -> x^(p^(k/2)) is an involution only for even k.
                let frob = if k % 2 == 0 && rng.below(2) == 1 {
                    format!("@frob({})", k / 2)
                } else {
                    String::new()
                };
                format!("GF({p},{k}){frob}")
            }
            2 => format!("M(2,Z({}))", 2 + rng.below(5)),
            3 => format!("M(2,GF({},1))", primes[rng.below(3) as usize]),
            4 => format!("P(Z({}),Z({}))", 2 + rng.below(7), 2 + rng.below(7)),
            5 => {
                let n = 2 + rng.below(7);
                format!("P(Z({n}),Z({n}))@swap(1,0)")
            }
            6 => {
                // Group ring order is |coeff|^|G|; keep both small.
                let (g, pmax) = match rng.below(4) {
                    0 => ("C(2)", 3),
                    1 => ("C(3)", 2),
                    2 => ("C(4)", 2),
                    _ => ("D(3)", 1),
                };
                format!("GR({g},Z({}))", primes[rng.below(pmax) as usize])
            }
            _ => format!("Quot(Z({}),x^2+1,-x)", primes[1 + rng.below(4) as usize]),
        };
        out.push(spec);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ring_spec;

    #[test]
    fn corpus_is_large_and_parses() {
        let c = default_corpus();
        assert!(c.len() >= 30, "corpus has {} entries", c.len());
        for s in &c {
            parse_ring_spec(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }

    #[test]
    fn hunt_stream_is_deterministic() {
        assert_eq!(hunt_stream(7, 20), hunt_stream(7, 20));
        for s in hunt_stream(1, 40) {
            parse_ring_spec(&s).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }
}
