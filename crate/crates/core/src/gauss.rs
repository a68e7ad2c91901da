//! The Gauss-sum ring `U`: the free module over the motive ring with basis
//! `G_α`, `α ∈ Q/Z`, subject to
//!
//! * `G_1 = -1`,
//! * `G_α G_{α⁻¹} = [α(-1)] L` for `α ≠ 1`,
//! * `G_{α₁} G_{α₂} = J(α₁, α₂) G_{α₁α₂}` when `α₁, α₂, α₁α₂ ≠ 1`.
//!
//! `G_1` is never stored: it is folded into the scalar part.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::One;

use crate::motive::{jacobi, q, Character, MotiveClass, MotiveFrac};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UElement {
    scalar: MotiveFrac,
    gauss: BTreeMap<Character, MotiveFrac>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one() -> Self {
        Self::from_scalar(MotiveFrac::one())
    }

    pub fn from_scalar(scalar: MotiveFrac) -> Self {
        UElement { scalar, gauss: BTreeMap::new() }
    }

    /// The basis element `G_α` (which is `-1` for the trivial character).
    pub fn gauss(alpha: Character) -> Self {
        Self::gauss_scaled(alpha, MotiveFrac::one())
    }

    /// `c · G_α`.
    pub fn gauss_scaled(alpha: Character, c: MotiveFrac) -> Self {
        let mut out = Self::zero();
        out.add_gauss(alpha, c);
        out
    }

    pub fn scalar(&self) -> &MotiveFrac {
        &self.scalar
    }

    /// Coefficients on the nontrivial basis elements.
    pub fn gauss_part(&self) -> &BTreeMap<Character, MotiveFrac> {
        &self.gauss
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.gauss.is_empty()
    }

    /// Adds `c · G_α`, folding `G_1 = -1` into the scalar.
    pub fn add_gauss(&mut self, alpha: Character, c: MotiveFrac) {
        if c.is_zero() {
            return;
        }
        if alpha.is_trivial() {
            self.scalar = &self.scalar - &c;
            return;
        }
        let next = match self.gauss.remove(&alpha) {
            Some(old) => &old + &c,
            None => c,
        };
        if !next.is_zero() {
            self.gauss.insert(alpha, next);
        }
    }

    pub fn add_scalar(&mut self, c: &MotiveFrac) {
        self.scalar = &self.scalar + c;
    }

    pub fn scale(&self, c: &MotiveFrac) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = UElement { scalar: &self.scalar * c, gauss: BTreeMap::new() };
        for (alpha, v) in &self.gauss {
            out.add_gauss(*alpha, v * c);
        }
        out
    }

    /// Coefficients `c_α` with `self = Σ_α G_{α⁻¹} c_α`; the trivial
    /// coefficient is minus the scalar part since `G_1 = -1`.
    pub fn sg_decompose(&self) -> BTreeMap<Character, MotiveFrac> {
        let mut out = BTreeMap::new();
        if !self.scalar.is_zero() {
            out.insert(Character::TRIVIAL, -&self.scalar);
        }
        for (beta, c) in &self.gauss {
            out.insert(beta.inverse(), c.clone());
        }
        out
    }

    /// Inverse of [`UElement::sg_decompose`]: `Σ_α G_{α⁻¹} c_α`.
    pub fn from_sg_coefficients<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Character, &'a MotiveFrac)>,
    {
        let mut out = Self::zero();
        for (alpha, c) in coeffs {
            out.add_gauss(alpha.inverse(), c.clone());
        }
        out
    }

    /// Hodge realization: `G_α ↦ -u^{1-γ(α)} v^{γ(α)}`, scalars unchanged.
    pub fn hodge_realize(&self) -> MotiveFrac {
        let mut out = self.scalar.clone();
        for (alpha, c) in &self.gauss {
            out = &out + &c.mul_class(&realize_gauss(alpha));
        }
        out
    }

    pub fn render(&self, lefschetz: bool) -> String {
        let mut parts = Vec::new();
        if !self.scalar.is_zero() {
            parts.push(self.scalar.render(lefschetz));
        }
        for (alpha, c) in &self.gauss {
            parts.push(format!("({})*G[{alpha}]", c.render(lefschetz)));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// `H(G_α)` for a nontrivial character.
pub fn realize_gauss(alpha: &Character) -> MotiveClass {
    if alpha.is_trivial() {
        return MotiveClass::from_int(-1);
    }
    let g = alpha.gamma();
    MotiveClass::monomial(Rational64::one() - g, g, q(-1)).expect("weight one")
}

/// Product of two basis elements `G_a · G_b`.
fn basis_product(a: &Character, b: &Character) -> UElement {
    let prod = a.mul(b);
    if prod.is_trivial() {
        // [α(-1)] = 1
        UElement::from_scalar(MotiveFrac::lefschetz_pow(1))
    } else {
        UElement::gauss_scaled(prod, jacobi(a, b).into())
    }
}

impl From<MotiveFrac> for UElement {
    fn from(c: MotiveFrac) -> Self {
        UElement::from_scalar(c)
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl<'a> Add<&'a UElement> for &'a UElement {
    type Output = UElement;
    fn add(self, rhs: &'a UElement) -> UElement {
        let mut out = self.clone();
        out.add_scalar(&rhs.scalar);
        for (alpha, c) in &rhs.gauss {
            out.add_gauss(*alpha, c.clone());
        }
        out
    }
}

impl Add for UElement {
    type Output = UElement;
    fn add(self, rhs: UElement) -> UElement {
        &self + &rhs
    }
}

impl Neg for &UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        UElement {
            scalar: -&self.scalar,
            gauss: self.gauss.iter().map(|(a, c)| (*a, -c)).collect(),
        }
    }
}

impl Neg for UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        -&self
    }
}

impl<'a> Sub<&'a UElement> for &'a UElement {
    type Output = UElement;
    fn sub(self, rhs: &'a UElement) -> UElement {
        self + &(-rhs)
    }
}

impl Sub for UElement {
    type Output = UElement;
    fn sub(self, rhs: UElement) -> UElement {
        &self - &rhs
    }
}

impl<'a> Mul<&'a UElement> for &'a UElement {
    type Output = UElement;
    fn mul(self, rhs: &'a UElement) -> UElement {
        let mut out = UElement::from_scalar(&self.scalar * &rhs.scalar);
        for (b, c) in &rhs.gauss {
            out.add_gauss(*b, &self.scalar * c);
        }
        for (a, c) in &self.gauss {
            out.add_gauss(*a, c * &rhs.scalar);
        }
        for (a, ca) in &self.gauss {
            for (b, cb) in &rhs.gauss {
                let coeff = ca * cb;
                out = &out + &basis_product(a, b).scale(&coeff);
            }
        }
        out
    }
}

impl Mul for UElement {
    type Output = UElement;
    fn mul(self, rhs: UElement) -> UElement {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: i64, d: i64) -> Character {
        Character::new(a, d).unwrap()
    }

    fn class(p: Rational64, q_: Rational64, c: i64) -> MotiveFrac {
        MotiveClass::monomial(p, q_, q(c)).unwrap().into()
    }

    #[test]
    fn relation_examples() {
        let g2 = UElement::gauss(ch(1, 2));
        assert_eq!(&g2 * &g2, UElement::from_scalar(MotiveFrac::lefschetz_pow(1)));

        let g3 = UElement::gauss(ch(1, 3));
        let minus_u = class(Rational64::one(), Rational64::from_integer(0), -1);
        assert_eq!(&g3 * &g3, UElement::gauss_scaled(ch(2, 3), minus_u));

        let minus_one = UElement::from_scalar(MotiveFrac::from_int(-1));
        assert_eq!(&minus_one * &g2, -&g2);
        assert_eq!(&UElement::gauss(Character::TRIVIAL) * &g2, -&g2);
    }

    #[test]
    fn trivial_basis_folds_into_scalar() {
        let g1 = UElement::gauss(Character::TRIVIAL);
        assert!(g1.gauss_part().is_empty());
        assert_eq!(g1.scalar(), &MotiveFrac::from_int(-1));
    }

    #[test]
    fn realization_examples() {
        let half = Rational64::new(1, 2);
        assert_eq!(UElement::gauss(ch(1, 2)).hodge_realize(), class(half, half, -1));
        let prod = &UElement::gauss(ch(1, 3)) * &UElement::gauss(ch(2, 3));
        assert_eq!(prod.hodge_realize(), MotiveFrac::lefschetz_pow(1));
        assert_eq!(UElement::one().hodge_realize(), MotiveFrac::one());
    }

    #[test]
    fn decompose_examples() {
        let d = UElement::gauss(ch(1, 2)).sg_decompose();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&ch(1, 2)], MotiveFrac::one());

        let d = UElement::from_scalar(MotiveFrac::lefschetz_pow(1)).sg_decompose();
        assert_eq!(d[&Character::TRIVIAL], -MotiveFrac::lefschetz_pow(1));

        assert!(UElement::zero().sg_decompose().is_empty());

        let x = &UElement::gauss(ch(1, 6)) + &UElement::from_scalar(MotiveFrac::from_int(3));
        assert_eq!(UElement::from_sg_coefficients(&x.sg_decompose()), x);
    }
}
