//! Recursive descent parser for the ring spec grammar.
//!
//! ring := "Z(" int ")"
//!       | "GF(" prime "," int ")" ["@frob(" int ")"]
//!       | "M(" int "," ring ")"
//!       | "P(" ring {"," ring} ")" ["@swap(" perm ")"]
//!       | "GR(" group "," ring ")"
//!       | "Quot(" ring "," poly "," poly ")"
//!       | "Corner(" ring "," elem ")"
//!       | "Sub(" ring "," elem {"," elem} ")"
//! group := "C(" int ")" | "D(" int ")" | "S(" int ")" | group "x" group
//!
//! Polynomials accept both the canonical low-to-high form ("1+0x+1x^2")
//! and conventional notation ("x^2+1", "-x"); negative coefficients are
//! reduced modulo the characteristic of the base ring. Elements are
//! canonical decimal ids.

use srl_core::{GroupSpec, RingExpr};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at column {col}: expected {expected}")]
    Syntax { col: usize, expected: String },
    #[error("semantic error at column {col}: {message}")]
    Semantic { col: usize, message: String },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_ring_spec(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let expr = p.ring()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("end of input"));
    }
    let expr = expr.canonicalize();
    expr.validate()
        .map_err(|e| ParseError::Semantic {
            col: text.len(),
            message: format!("{e:?}"),
        })?;
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn syntax(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            col: self.pos + 1,
            expected: expected.into(),
        }
    }

    fn semantic(&self, message: String) -> ParseError {
        ParseError::Semantic {
            col: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("'{}'", c as char)))
        }
    }

    fn try_eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn keyword(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_alphabetic())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string()
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.syntax("integer in range"))
    }

    fn int_u32(&mut self) -> Result<u32, ParseError> {
        let v = self.int()?;
        u32::try_from(v).map_err(|_| self.syntax("integer fitting in 32 bits"))
    }

    fn int_list(&mut self) -> Result<Vec<u32>, ParseError> {
        let mut out = vec![self.int_u32()?];
        while self.try_eat(b',') {
            out.push(self.int_u32()?);
        }
        Ok(out)
    }

    fn ring(&mut self) -> Result<RingExpr, ParseError> {
        let col = self.pos;
        let kw = self.keyword();
        match kw.as_str() {
            "Z" => {
                self.eat(b'(')?;
                let n = self.int_u32()?;
                self.eat(b')')?;
                Ok(RingExpr::Zmod { n })
            }
            "GF" => {
                self.eat(b'(')?;
                let p = self.int_u32()?;
                self.eat(b',')?;
                let k = self.int_u32()?;
                self.eat(b')')?;
                let frob = if self.try_eat(b'@') {
                    let kw = self.keyword();
                    if kw != "frob" {
                        return Err(self.syntax("'frob'"));
                    }
                    self.eat(b'(')?;
                    let j = self.int_u32()?;
                    self.eat(b')')?;
                    j
                } else {
                    0
                };
                Ok(RingExpr::FiniteField { p, k, frob })
            }
            "M" => {
                self.eat(b'(')?;
                let n = self.int_u32()?;
                self.eat(b',')?;
                let entry = Box::new(self.ring()?);
                self.eat(b')')?;
                Ok(RingExpr::Matrix { n, entry })
            }
            "P" => {
                self.eat(b'(')?;
                let mut factors = vec![self.ring()?];
                while self.try_eat(b',') {
                    factors.push(self.ring()?);
                }
                self.eat(b')')?;
                let perm = if self.try_eat(b'@') {
                    let kw = self.keyword();
                    if kw != "swap" {
                        return Err(self.syntax("'swap'"));
                    }
                    self.eat(b'(')?;
                    let perm = self.int_list()?;
                    self.eat(b')')?;
                    Some(perm)
                } else {
                    None
                };
                Ok(RingExpr::Product { factors, perm })
            }
            "GR" => {
                self.eat(b'(')?;
                let group = self.group()?;
                self.eat(b',')?;
                let coeff = Box::new(self.ring()?);
                self.eat(b')')?;
                Ok(RingExpr::GroupRing { group, coeff })
            }
            "Quot" => {
                self.eat(b'(')?;
                let base = self.ring()?;
                let ch = characteristic(&base).ok_or_else(|| {
                    self.semantic("cannot determine characteristic of base ring".into())
                })?;
                self.eat(b',')?;
                let modulus = self.poly(ch)?;
                self.eat(b',')?;
                let gen_image = self.poly(ch)?;
                self.eat(b')')?;
                Ok(RingExpr::QuotAdjoin {
                    base: Box::new(base),
                    modulus,
                    gen_image,
                })
            }
            "Corner" => {
                self.eat(b'(')?;
                let parent = Box::new(self.ring()?);
                self.eat(b',')?;
                let projection = self.int_u32()?;
                self.eat(b')')?;
                Ok(RingExpr::Corner { parent, projection })
            }
            "Sub" => {
                self.eat(b'(')?;
                let parent = Box::new(self.ring()?);
                self.eat(b',')?;
                let gens = self.int_list()?;
                self.eat(b')')?;
                Ok(RingExpr::GenSub { parent, gens })
            }
            _ => {
                self.pos = col;
                Err(self.syntax("ring constructor (Z, GF, M, P, GR, Quot, Corner, Sub)"))
            }
        }
    }

    fn group(&mut self) -> Result<GroupSpec, ParseError> {
        let mut parts = vec![self.group_atom()?];
        loop {
            self.skip_ws();
            // 'x' separates product factors; only consume when followed by
            // a group constructor.
            let save = self.pos;
            if self.peek() == Some(b'x') {
                self.pos += 1;
                match self.group_atom() {
                    Ok(g) => {
                        parts.push(g);
                        continue;
                    }
                    Err(_) => {
                        self.pos = save;
                        break;
                    }
                }
            }
            break;
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(GroupSpec::Product(parts))
        }
    }

    fn group_atom(&mut self) -> Result<GroupSpec, ParseError> {
        let col = self.pos;
        let kw = self.keyword();
        let make = match kw.as_str() {
            "C" => GroupSpec::Cyclic as fn(u32) -> GroupSpec,
            "D" => GroupSpec::Dihedral,
            "S" => GroupSpec::Symmetric,
            _ => {
                self.pos = col;
                return Err(self.syntax("group constructor (C, D, S)"));
            }
        };
        self.eat(b'(')?;
        let n = self.int_u32()?;
        self.eat(b')')?;
        Ok(make(n))
    }

    /// poly := ["-"] term {("+"|"-") term}; term := int ["x" ["^" int]]
    /// | "x" ["^" int]. Result is low-to-high coefficients mod ch.
    fn poly(&mut self, ch: u32) -> Result<Vec<u32>, ParseError> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut sign: i64 = if self.try_eat(b'-') { -1 } else { 1 };
        loop {
            let (coef, deg) = self.poly_term()?;
            let deg = deg as usize;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] += sign * coef as i64;
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        if ch == 0 {
            return Err(self.semantic("base ring has unknown characteristic".into()));
        }
        Ok(coeffs
            .iter()
            .map(|&c| (c.rem_euclid(ch as i64)) as u32)
            .collect())
    }

    fn poly_term(&mut self) -> Result<(u32, u32), ParseError> {
        self.skip_ws();
        let coef = if self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            Some(self.int_u32()?)
        } else {
            None
        };
        self.skip_ws();
        if self.peek() == Some(b'x') {
            self.pos += 1;
            let deg = if self.try_eat(b'^') { self.int_u32()? } else { 1 };
            Ok((coef.unwrap_or(1), deg))
        } else {
            match coef {
                Some(c) => Ok((c, 0)),
                None => Err(self.syntax("polynomial term")),
            }
        }
    }
}

/// Additive order of 1, used to reduce signed polynomial coefficients.
pub fn characteristic(expr: &RingExpr) -> Option<u32> {
    match expr {
        RingExpr::Zmod { n } => Some(*n),
        RingExpr::FiniteField { p, .. } => Some(*p),
        RingExpr::QuotAdjoin { base, .. } => characteristic(base),
        RingExpr::Matrix { entry, .. } => characteristic(entry),
        RingExpr::GroupRing { coeff, .. } => characteristic(coeff),
        RingExpr::Product { factors, .. } => {
            let mut l: u64 = 1;
            for f in factors {
                let c = characteristic(f)? as u64;
                l = l / gcd(l, c) * c;
                if l > u32::MAX as u64 {
                    return None;
                }
            }
            Some(l as u32)
        }
        RingExpr::Corner { .. } | RingExpr::GenSub { .. } => None,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_specs() {
        assert_eq!(parse_ring_spec("Z(6)").unwrap(), RingExpr::Zmod { n: 6 });
        assert_eq!(
            parse_ring_spec("M(2, GF(3,1))").unwrap(),
            RingExpr::Matrix {
                n: 2,
                entry: Box::new(RingExpr::FiniteField { p: 3, k: 1, frob: 0 }),
            }
        );
        let q = parse_ring_spec("Quot(Z(3), x^2+1, -x)").unwrap();
        assert_eq!(
            q,
            RingExpr::QuotAdjoin {
                base: Box::new(RingExpr::Zmod { n: 3 }),
                modulus: vec![1, 0, 1],
                gen_image: vec![0, 2],
            }
        );
    }

    #[test]
    fn position_annotated_errors() {
        match parse_ring_spec("Z(x)") {
            Err(ParseError::Syntax { col, .. }) => assert_eq!(col, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_ring_spec("GF(4,1)"),
            Err(ParseError::Semantic { .. })
        ));
        assert!(parse_ring_spec("Frob(2)").is_err());
        assert!(parse_ring_spec("Z(6) trailing").is_err());
    }

    #[test]
    fn round_trip_on_printed_form() {
        let specs = [
            "Z(12)",
            "GF(2,2)@frob(1)",
            "M(2,Z(6))",
            "P(Z(2),Z(3),Z(5))",
            "P(GF(3,1),GF(3,1))@swap(1,0)",
            "GR(C(3),Z(4))",
            "GR(D(3),GF(2,1))",
            "GR(C(2)xC(2),Z(3))",
            "Quot(Z(7),x^2+1,-x)",
            "Corner(M(2,GF(3,1)),1)",
            "Sub(M(2,GF(2,1)),1)",
        ];
        for s in specs {
            let e = parse_ring_spec(s).unwrap();
            let printed = e.print();
            let e2 = parse_ring_spec(&printed).unwrap();
            assert_eq!(e, e2, "round trip failed for {s} -> {printed}");
        }
    }

    #[test]
    fn round_trip_on_randomized_specs() {
        // parse . print . parse = parse over the hunt generator's output.
        for spec in crate::corpus::hunt_stream(0xA11CE, 300) {
            let e = parse_ring_spec(&spec).unwrap_or_else(|err| panic!("{spec}: {err}"));
            let printed = e.print();
            let e2 = parse_ring_spec(&printed)
                .unwrap_or_else(|err| panic!("{spec} -> {printed}: {err}"));
            assert_eq!(e, e2, "round trip failed for {spec} -> {printed}");
            assert_eq!(printed, e2.print());
        }
    }

    #[test]
    fn group_products_parse() {
        let e = parse_ring_spec("GR(C(2)xC(3),Z(2))").unwrap();
        match e {
            RingExpr::GroupRing { group, .. } => {
                assert_eq!(
                    group,
                    GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(3)])
                );
            }
            _ => panic!(),
        }
    }
}
