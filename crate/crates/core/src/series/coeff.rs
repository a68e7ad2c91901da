use std::fmt::Debug;

use crate::gauss::UElement;
use crate::motive::{MotiveFrac, Q};

/// Coefficient ring of rational series: a commutative algebra over the
/// localized motive ring.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_frac(c: MotiveFrac) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, c: &MotiveFrac) -> Self;
    fn scale_q(&self, c: &Q) -> Self;
    /// Multiplication by `L^k`.
    fn shift_lefschetz(&self, k: i64) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
}

impl Coefficient for MotiveFrac {
    fn zero() -> Self {
        MotiveFrac::zero()
    }
    fn is_zero(&self) -> bool {
        MotiveFrac::is_zero(self)
    }
    fn from_frac(c: MotiveFrac) -> Self {
        c
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &MotiveFrac) -> Self {
        self * c
    }
    fn scale_q(&self, c: &Q) -> Self {
        MotiveFrac::scale(self, c)
    }
    fn shift_lefschetz(&self, k: i64) -> Self {
        MotiveFrac::shift_lefschetz(self, k)
    }
}

impl Coefficient for UElement {
    fn zero() -> Self {
        UElement::zero()
    }
    fn is_zero(&self) -> bool {
        UElement::is_zero(self)
    }
    fn from_frac(c: MotiveFrac) -> Self {
        UElement::from_scalar(c)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &MotiveFrac) -> Self {
        UElement::scale(self, c)
    }
    fn scale_q(&self, c: &Q) -> Self {
        UElement::scale(self, &MotiveFrac::from_rational(c.clone()))
    }
    fn shift_lefschetz(&self, k: i64) -> Self {
        UElement::scale(self, &MotiveFrac::lefschetz_pow(k))
    }
}
