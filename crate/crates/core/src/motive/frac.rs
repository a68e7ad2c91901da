use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::class::{q, MotiveClass, Q};
use crate::error::Error;

/// A Hodge class localized at differences of powers of `L`.
///
/// Every allowed factor `L^a - L^b` is `±L^min(a,b) (L^n - 1)` with
/// `n = |a - b|`, and the monomial unit is folded into the numerator, so the
/// denominator is stored as multiplicities of `L^n - 1`. Factors are
/// cancelled only when they divide the numerator exactly; equality is decided
/// by cross-multiplication.
#[derive(Clone, Debug, Default)]
pub struct MotiveFrac {
    num: MotiveClass,
    den: BTreeMap<u32, u32>,
}

fn den_poly(den: &BTreeMap<u32, u32>) -> MotiveClass {
    let mut out = MotiveClass::one();
    for (&n, &k) in den {
        let factor = MotiveClass::lefschetz_poly([(n as i64, q(1)), (0, q(-1))]);
        for _ in 0..k {
            out = &out * &factor;
        }
    }
    out
}

impl MotiveFrac {
    pub fn zero() -> Self {
        MotiveFrac::default()
    }

    pub fn one() -> Self {
        MotiveClass::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        MotiveClass::from_int(n).into()
    }

    pub fn from_rational(c: Q) -> Self {
        MotiveClass::from_rational(c).into()
    }

    pub fn lefschetz_pow(k: i64) -> Self {
        MotiveClass::lefschetz_pow(k).into()
    }

    /// `1 / (L^a - L^b)`.
    pub fn inv_lefschetz_difference(a: i64, b: i64) -> Result<Self, Error> {
        if a == b {
            return Err(Error::DivisionByZero(format!("L^{a} - L^{b}")));
        }
        let (lo, sign) = if a > b { (b, 1) } else { (a, -1) };
        let n = (a - b).unsigned_abs() as u32;
        let mut den = BTreeMap::new();
        den.insert(n, 1);
        Ok(MotiveFrac { num: MotiveClass::lefschetz_pow(-lo).scale(&q(sign)), den })
    }

    /// `1 / (L - 1)`.
    pub fn inv_lefschetz_minus_one() -> Self {
        Self::inv_lefschetz_difference(1, 0).expect("distinct exponents")
    }

    /// Builds `num / Π (L^a - L^b)`.
    pub fn from_parts(num: MotiveClass, factors: &[(i64, i64)]) -> Result<Self, Error> {
        let mut out: MotiveFrac = num.into();
        for &(a, b) in factors {
            out = &out * &Self::inv_lefschetz_difference(a, b)?;
        }
        Ok(out)
    }

    pub fn numerator(&self) -> &MotiveClass {
        &self.num
    }

    /// Denominator as `(a, b)` pairs each meaning `L^a - L^b`; always of the form `(n, 0)`.
    pub fn denominator_factors(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (&n, &k) in &self.den {
            for _ in 0..k {
                out.push((n as i64, 0));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying class when no denominator remains.
    pub fn as_class(&self) -> Option<&MotiveClass> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MotiveFrac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn shift_lefschetz(&self, k: i64) -> Self {
        MotiveFrac { num: self.num.shift_lefschetz(k), den: self.den.clone() }
    }

    pub fn mul_class(&self, c: &MotiveClass) -> Self {
        MotiveFrac { num: &self.num * c, den: self.den.clone() }.reduced()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<u32> = self.den.keys().copied().collect();
        for n in keys {
            loop {
                let k = self.den[&n];
                if k == 0 {
                    self.den.remove(&n);
                    break;
                }
                if !self.num.divisible_by_lefschetz_minus_one(n) {
                    break;
                }
                match self.num.div_lefschetz_minus_one(n) {
                    Some(quo) => {
                        self.num = quo;
                        self.den.insert(n, k - 1);
                    }
                    None => break,
                }
            }
        }
        self
    }

    /// Rewrites both operands over the least common multiple of their factor multisets.
    fn common(&self, other: &Self) -> (MotiveClass, MotiveClass, BTreeMap<u32, u32>) {
        let mut den = self.den.clone();
        for (&n, &k) in &other.den {
            let e = den.entry(n).or_insert(0);
            *e = (*e).max(k);
        }
        let missing = |own: &BTreeMap<u32, u32>| -> BTreeMap<u32, u32> {
            den.iter()
                .filter_map(|(&n, &k)| {
                    let have = own.get(&n).copied().unwrap_or(0);
                    (k > have).then_some((n, k - have))
                })
                .collect()
        };
        let a = &self.num * &den_poly(&missing(&self.den));
        let b = &other.num * &den_poly(&missing(&other.den));
        (a, b, den)
    }

    pub fn render(&self, lefschetz: bool) -> String {
        if self.den.is_empty() {
            return self.num.render(lefschetz);
        }
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(&n, &k)| {
                let base = if lefschetz {
                    if n == 1 { "(L - 1)".to_string() } else { format!("(L^{n} - 1)") }
                } else if n == 1 {
                    "(u*v - 1)".to_string()
                } else {
                    format!("(u^{n}*v^{n} - 1)")
                };
                if k == 1 { base } else { format!("{base}^{k}") }
            })
            .collect();
        format!("({}) / {}", self.num.render(lefschetz), factors.join("*"))
    }
}

impl From<MotiveClass> for MotiveFrac {
    fn from(num: MotiveClass) -> Self {
        MotiveFrac { num, den: BTreeMap::new() }
    }
}

impl PartialEq for MotiveFrac {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        if self.num.is_zero() || other.num.is_zero() {
            return self.num.is_zero() && other.num.is_zero();
        }
        let (a, b, _) = self.common(other);
        a == b
    }
}

impl Eq for MotiveFrac {}

impl fmt::Display for MotiveFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl<'a> Add<&'a MotiveFrac> for &'a MotiveFrac {
    type Output = MotiveFrac;
    fn add(self, rhs: &'a MotiveFrac) -> MotiveFrac {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return MotiveFrac { num: &self.num + &rhs.num, den: self.den.clone() }.reduced();
        }
        let (a, b, den) = self.common(rhs);
        MotiveFrac { num: a + b, den }.reduced()
    }
}

impl Add for MotiveFrac {
    type Output = MotiveFrac;
    fn add(self, rhs: MotiveFrac) -> MotiveFrac {
        &self + &rhs
    }
}

impl<'a> Sub<&'a MotiveFrac> for &'a MotiveFrac {
    type Output = MotiveFrac;
    fn sub(self, rhs: &'a MotiveFrac) -> MotiveFrac {
        self + &(-rhs)
    }
}

impl Sub for MotiveFrac {
    type Output = MotiveFrac;
    fn sub(self, rhs: MotiveFrac) -> MotiveFrac {
        &self - &rhs
    }
}

impl Neg for &MotiveFrac {
    type Output = MotiveFrac;
    fn neg(self) -> MotiveFrac {
        MotiveFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for MotiveFrac {
    type Output = MotiveFrac;
    fn neg(self) -> MotiveFrac {
        MotiveFrac { num: -self.num, den: self.den }
    }
}

impl<'a> Mul<&'a MotiveFrac> for &'a MotiveFrac {
    type Output = MotiveFrac;
    fn mul(self, rhs: &'a MotiveFrac) -> MotiveFrac {
        if self.is_zero() || rhs.is_zero() {
            return MotiveFrac::zero();
        }
        // a unit monomial cannot change divisibility by L^n - 1
        if rhs.den.is_empty() && rhs.num.len() == 1 {
            return MotiveFrac { num: &self.num * &rhs.num, den: self.den.clone() };
        }
        if self.den.is_empty() && self.num.len() == 1 {
            return MotiveFrac { num: &self.num * &rhs.num, den: rhs.den.clone() };
        }
        let mut den = self.den.clone();
        for (&n, &k) in &rhs.den {
            *den.entry(n).or_insert(0) += k;
        }
        MotiveFrac { num: &self.num * &rhs.num, den }.reduced()
    }
}

impl Mul for MotiveFrac {
    type Output = MotiveFrac;
    fn mul(self, rhs: MotiveFrac) -> MotiveFrac {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_minus_inverse_power_is_allowed() {
        // (1 - L^-2)^-1 = L^2 / (L^2 - 1)
        let inv = MotiveFrac::inv_lefschetz_difference(0, -2).unwrap();
        let back = &inv * &MotiveFrac::from(MotiveClass::lefschetz_poly([(0, q(1)), (-2, q(-1))]));
        assert_eq!(back, MotiveFrac::one());
        assert!(back.as_class().is_some());
    }

    #[test]
    fn rejects_equal_exponents() {
        assert!(MotiveFrac::inv_lefschetz_difference(3, 3).is_err());
    }

    #[test]
    fn cancellation_and_cross_equality() {
        let lm1: MotiveFrac = MotiveClass::lefschetz_minus_one().into();
        let x = &lm1 * &MotiveFrac::inv_lefschetz_minus_one();
        assert_eq!(x.as_class(), Some(&MotiveClass::one()));
        // 1/(L-1) - 1/(L^2-1)·(L+1) = 0, only visible after cross-multiplication
        let lp1: MotiveFrac = MotiveClass::lefschetz_poly([(1, q(1)), (0, q(1))]).into();
        let y = &lp1 * &MotiveFrac::inv_lefschetz_difference(2, 0).unwrap();
        assert_eq!(y, MotiveFrac::inv_lefschetz_minus_one());
        assert!((&y - &MotiveFrac::inv_lefschetz_minus_one()).is_zero());
    }

    #[test]
    fn geometric_series_identity() {
        // 1/(1 - L^-1) = 1 + L^-1/(1 - L^-1)
        let g = MotiveFrac::inv_lefschetz_difference(0, -1).unwrap();
        let rhs = &MotiveFrac::one() + &g.shift_lefschetz(-1);
        assert_eq!(g, rhs);
    }
}
