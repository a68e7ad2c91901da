//! Integer polynomials in `x, y, z` and a small expression parser.
//!
//! Grammar: integers, the variables `x`, `y`, `z`, binary `+ - *`, unary
//! `-`, `^` with a nonnegative integer exponent, and parentheses.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const VARS: [char; 3] = ['x', 'y', 'z'];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly {
    terms: BTreeMap<[u32; 3], i64>,
}

impl IntPoly {
    pub fn constant(c: i64) -> Self {
        let mut out = Self::default();
        out.add_term([0; 3], c);
        out
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        let mut out = Self::default();
        out.add_term(e, 1);
        out
    }

    fn add_term(&mut self, e: [u32; 3], c: i64) {
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], i64> {
        &self.terms
    }

    /// Number of leading variables needed to evaluate.
    pub fn arity(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().rposition(|&k| k > 0).map_or(0, |i| i + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn negate(&self) -> Self {
        IntPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(1), |acc, _| acc.times(self))
    }

    /// `f(x) mod modulus` for residues `x` (missing coordinates read as 0).
    pub fn eval_mod(&self, x: &[u64], modulus: u64) -> u64 {
        let m = modulus as u128;
        let mut acc: u128 = 0;
        for (e, c) in &self.terms {
            let mut v = (*c).rem_euclid(modulus as i64) as u128;
            for (i, &k) in e.iter().enumerate() {
                let base = x.get(i).copied().unwrap_or(0) as u128 % m;
                for _ in 0..k {
                    v = v * base % m;
                }
            }
            acc = (acc + v) % m;
        }
        acc as u64
    }

    /// `f(x) + f'(y)` with the variables of `other` placed after those of `self`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let shift = self.arity();
        if shift + other.arity() > VARS.len() {
            return Err(Error::Unsupported("more than three variables".into()));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let mut moved = [0; 3];
            for i in 0..other.arity() {
                moved[i + shift] = e[i];
            }
            out.add_term(moved, *c);
        }
        Ok(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(VARS[i].to_string()),
                    _ => factors.push(format!("{}^{k}", VARS[i])),
                }
            }
            let mag = c.unsigned_abs();
            let body = match (factors.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => factors.join("*"),
                (false, _) => format!("{mag}*{}", factors.join("*")),
            };
            match (first, *c < 0) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.plus(&rhs) } else { acc.plus(&rhs.negate()) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.times(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.negate());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip();
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.err("integer overflow"))
    }

    fn atom(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(self.integer()?)),
            Some(c) => match VARS.iter().position(|&v| v as u8 == c) {
                Some(i) => {
                    self.pos += 1;
                    Ok(IntPoly::var(i))
                }
                None => Err(self.err(&format!("unexpected '{}'", c as char))),
            },
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        let f: IntPoly = "x^2 + y^3".parse().unwrap();
        assert_eq!(f.arity(), 2);
        assert_eq!(f.eval_mod(&[3, 2], 100), 17);
        let g: IntPoly = "-(x - 1)*(x + 1) + 2*z".parse().unwrap();
        assert_eq!(g.eval_mod(&[4, 0, 5], 1000), 1000 - 15 + 10);
        assert_eq!("x*y".parse::<IntPoly>().unwrap().eval_mod(&[6, 7], 9), 42 % 9);
    }

    #[test]
    fn display_roundtrip() {
        for src in ["x^2 + y^3", "3*x*y - 7", "-x + z^4", "0"] {
            let f: IntPoly = src.parse().unwrap();
            let back: IntPoly = f.to_string().parse().unwrap();
            assert_eq!(f, back, "{src} -> {f}");
        }
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x +", "w", "(x", "x^-1", "x)"] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn direct_sum_shifts_variables() {
        let f: IntPoly = "x^2".parse().unwrap();
        let g: IntPoly = "x^3 + x*y".parse().unwrap();
        assert_eq!(f.direct_sum(&g).unwrap(), "x^2 + y^3 + y*z".parse().unwrap());
    }
}
