use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational coefficients.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Hodge bidegree `(p, q)` of a rank-one summand. `p + q` is always an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub p: Rational64,
    pub q: Rational64,
}

impl Bidegree {
    pub fn new(p: Rational64, q: Rational64) -> Result<Self, Error> {
        if !(p + q).is_integer() {
            return Err(Error::Invariant(format!("bidegree ({p}, {q}) has non-integral weight")));
        }
        Ok(Bidegree { p, q })
    }

    pub fn integral(p: i64, q: i64) -> Self {
        Bidegree { p: Rational64::from_integer(p), q: Rational64::from_integer(q) }
    }

    pub fn weight(&self) -> i64 {
        (self.p + self.q).to_integer()
    }

    fn plus(&self, other: &Bidegree) -> Bidegree {
        Bidegree { p: self.p + other.p, q: self.q + other.q }
    }

    /// Splits off the largest power of `L = uv` so that the remaining `p` lies in `[0, 1)`.
    fn lefschetz_split(&self) -> (Bidegree, i64) {
        let k = self.p.floor().to_integer();
        let base = Bidegree { p: self.p - k, q: self.q - k };
        (base, k)
    }
}

/// Formal sum of Hodge classes `Σ c·u^p v^q`: the Hodge realization of a
/// virtual motive, with rational bigrading allowed for Gauss-sum classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MotiveClass {
    terms: BTreeMap<Bidegree, Q>,
}

impl MotiveClass {
    pub fn zero() -> Self {
        MotiveClass { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(q(1))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(q(n))
    }

    pub fn from_rational(c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(Bidegree::integral(0, 0), c);
        out
    }

    /// `c · u^p v^q`.
    pub fn monomial(p: Rational64, q_: Rational64, c: Q) -> Result<Self, Error> {
        let mut out = Self::zero();
        out.add_term(Bidegree::new(p, q_)?, c);
        Ok(out)
    }

    /// `L^k = (uv)^k`.
    pub fn lefschetz_pow(k: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(Bidegree::integral(k, k), q(1));
        out
    }

    /// `L - 1`.
    pub fn lefschetz_minus_one() -> Self {
        Self::lefschetz_pow(1) - Self::one()
    }

    /// `Σ c_k L^k` from `(k, c_k)` pairs.
    pub fn lefschetz_poly<I: IntoIterator<Item = (i64, Q)>>(coeffs: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs {
            out.add_term(Bidegree::integral(k, k), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Bidegree::integral(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bidegree, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, deg: &Bidegree) -> Q {
        self.terms.get(deg).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, deg: Bidegree, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(deg).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MotiveClass { terms: self.terms.iter().map(|(d, v)| (*d, v * c)).collect() }
    }

    /// Multiplies by `u^p v^q`.
    pub fn shift(&self, by: &Bidegree) -> Self {
        MotiveClass { terms: self.terms.iter().map(|(d, v)| (d.plus(by), v.clone())).collect() }
    }

    pub fn shift_lefschetz(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.shift(&Bidegree::integral(k, k))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Groups terms into Laurent polynomials in `L`, keyed by the residual
    /// bidegree with `p` in `[0, 1)`.
    fn lefschetz_components(&self) -> BTreeMap<Bidegree, BTreeMap<i64, Q>> {
        let mut out: BTreeMap<Bidegree, BTreeMap<i64, Q>> = BTreeMap::new();
        for (deg, c) in &self.terms {
            let (base, k) = deg.lefschetz_split();
            out.entry(base).or_default().insert(k, c.clone());
        }
        out
    }

    /// `L^n - 1` divides iff on every `L`-coset the coefficients summed over
    /// each residue class of exponents mod `n` vanish.
    pub fn divisible_by_lefschetz_minus_one(&self, n: u32) -> bool {
        let n = n as i64;
        let mut sums: BTreeMap<(Bidegree, i64), Q> = BTreeMap::new();
        for (deg, c) in &self.terms {
            let (base, k) = deg.lefschetz_split();
            *sums.entry((base, k.rem_euclid(n))).or_insert_with(Q::zero) += c;
        }
        sums.values().all(Zero::is_zero)
    }

    /// Exact quotient by `L^n - 1`, or `None` if it does not divide.
    pub fn div_lefschetz_minus_one(&self, n: u32) -> Option<MotiveClass> {
        assert!(n >= 1);
        let n = n as i64;
        let mut out = MotiveClass::zero();
        for (base, poly) in self.lefschetz_components() {
            let lo = *poly.keys().next().expect("nonempty component");
            let hi = *poly.keys().next_back().expect("nonempty component");
            let len = (hi - lo + 1) as usize;
            let mut coeffs = vec![Q::zero(); len];
            for (k, c) in poly {
                coeffs[(k - lo) as usize] = c;
            }
            // synthetic division by L^n - 1, from the top degree down
            let mut quotient = vec![Q::zero(); len];
            for deg in (n as usize..len).rev() {
                let c = std::mem::take(&mut coeffs[deg]);
                if c.is_zero() {
                    continue;
                }
                coeffs[deg - n as usize] += &c;
                quotient[deg - n as usize] = c;
            }
            if coeffs.iter().any(|c| !c.is_zero()) {
                return None;
            }
            for (idx, c) in quotient.into_iter().enumerate() {
                if !c.is_zero() {
                    let k = lo + idx as i64;
                    out.add_term(base.plus(&Bidegree::integral(k, k)), c);
                }
            }
        }
        Some(out)
    }

    /// True when every term has bidegree `(k, k)`, i.e. the class is a Laurent polynomial in `L`.
    pub fn is_lefschetz_polynomial(&self) -> bool {
        self.terms.keys().all(|d| d.p == d.q && d.p.is_integer())
    }

    /// Renders the class either with explicit `u^p v^q` monomials or, where
    /// `p = q` is integral, as powers of `L`.
    pub fn render(&self, lefschetz: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (deg, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(deg, lefschetz);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

fn render_monomial(deg: &Bidegree, lefschetz: bool) -> String {
    let zero = Rational64::zero();
    if deg.p == zero && deg.q == zero {
        return String::new();
    }
    if lefschetz && deg.p == deg.q && deg.p.is_integer() {
        let k = deg.p.to_integer();
        return if k == 1 { "L".into() } else { format!("L^{k}") };
    }
    let mut parts = Vec::new();
    for (name, e) in [("u", deg.p), ("v", deg.q)] {
        if e == zero {
            continue;
        }
        if e == Rational64::one() {
            parts.push(name.to_string());
        } else if e.is_integer() {
            parts.push(format!("{name}^{e}"));
        } else {
            parts.push(format!("{name}^({e})"));
        }
    }
    parts.join("*")
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl<'a> Add<&'a MotiveClass> for &'a MotiveClass {
    type Output = MotiveClass;
    fn add(self, rhs: &'a MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MotiveClass {
    type Output = MotiveClass;
    fn add(mut self, rhs: MotiveClass) -> MotiveClass {
        self += &rhs;
        self
    }
}

impl AddAssign<&MotiveClass> for MotiveClass {
    fn add_assign(&mut self, rhs: &MotiveClass) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, c.clone());
        }
    }
}

impl<'a> Sub<&'a MotiveClass> for &'a MotiveClass {
    type Output = MotiveClass;
    fn sub(self, rhs: &'a MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, -c.clone());
        }
        out
    }
}

impl Sub for MotiveClass {
    type Output = MotiveClass;
    fn sub(self, rhs: MotiveClass) -> MotiveClass {
        &self - &rhs
    }
}

impl Neg for MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        MotiveClass { terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect() }
    }
}

impl Neg for &MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        -self.clone()
    }
}

impl<'a> Mul<&'a MotiveClass> for &'a MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: &'a MotiveClass) -> MotiveClass {
        let mut out = MotiveClass::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                out.add_term(d1.plus(d2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: MotiveClass) -> MotiveClass {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> MotiveClass {
        MotiveClass::lefschetz_pow(1)
    }

    #[test]
    fn rejects_fractional_weight() {
        assert!(MotiveClass::monomial(Rational64::new(1, 2), Rational64::new(1, 3), q(1)).is_err());
        assert!(MotiveClass::monomial(Rational64::new(1, 3), Rational64::new(2, 3), q(1)).is_ok());
    }

    #[test]
    fn no_zero_terms_stored() {
        let x = &l() - &l();
        assert!(x.is_zero());
        assert_eq!(x.len(), 0);
    }

    #[test]
    fn lefschetz_arithmetic() {
        let lm1 = MotiveClass::lefschetz_minus_one();
        let sq = &lm1 * &lm1;
        let expected = MotiveClass::lefschetz_poly([(2, q(1)), (1, q(-2)), (0, q(1))]);
        assert_eq!(sq, expected);
        assert_eq!(lm1.pow(2), expected);
    }

    #[test]
    fn exact_division() {
        // L^4 - 1 = (L^2 - 1)(L^2 + 1)
        let p = MotiveClass::lefschetz_poly([(4, q(1)), (0, q(-1))]);
        let quo = p.div_lefschetz_minus_one(2).unwrap();
        assert_eq!(quo, MotiveClass::lefschetz_poly([(2, q(1)), (0, q(1))]));
        assert!(quo.div_lefschetz_minus_one(1).is_none());
        // components with fractional bidegree divide independently
        let half = MotiveClass::monomial(Rational64::new(1, 2), Rational64::new(1, 2), q(1)).unwrap();
        let prod = &half * &MotiveClass::lefschetz_minus_one();
        assert_eq!(prod.div_lefschetz_minus_one(1).unwrap(), half);
        // negative powers of L are fine
        let neg = MotiveClass::lefschetz_poly([(-1, q(1)), (-3, q(-1))]);
        assert_eq!(neg.div_lefschetz_minus_one(2).unwrap(), MotiveClass::lefschetz_pow(-3));
    }

    #[test]
    fn render_modes() {
        let x = &l() - &MotiveClass::from_int(2);
        assert_eq!(x.render(true), "L - 2");
        assert_eq!(x.render(false), "u*v - 2");
        let g = MotiveClass::monomial(Rational64::new(1, 2), Rational64::new(1, 2), q(-1)).unwrap();
        assert_eq!(g.render(true), "-u^(1/2)*v^(1/2)");
    }
}
