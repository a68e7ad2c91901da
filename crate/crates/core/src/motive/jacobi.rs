//! Jacobi motives, Fermat torus classes and torus character classes in the
//! Hodge realization. The sign class `[α(-1)]` is taken to be 1 throughout,
//! as the base field contains every root of unity.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::One;

use super::character::Character;
use super::class::{q, MotiveClass};

/// The section `Q/Z -> [0, 1)`.
pub fn gamma(alpha: &Character) -> Rational64 {
    alpha.gamma()
}

/// Realization of the Jacobi motive `J(α₁, α₂)`.
pub fn jacobi(a1: &Character, a2: &Character) -> MotiveClass {
    match (a1.is_trivial(), a2.is_trivial()) {
        (true, true) => MotiveClass::lefschetz_pow(1),
        (true, false) | (false, true) => MotiveClass::zero(),
        (false, false) => {
            let prod = a1.mul(a2);
            if prod.is_trivial() {
                return MotiveClass::from_int(-1);
            }
            // s = γ(α₁) + γ(α₂) - γ(α₁α₂) is 0 or 1
            let s = a1.gamma() + a2.gamma() - prod.gamma();
            MotiveClass::monomial(Rational64::one() - s, s, q(-1))
                .expect("Jacobi bidegree has weight 1")
        }
    }
}

/// `χ_c` of the open Fermat curve `x₁^d + x₂^d = 1, x₁x₂ ≠ 0` in the isotypic
/// component `(α₁, α₂)`.
pub fn fermat_torus_class(a1: &Character, a2: &Character) -> MotiveClass {
    match (a1.is_trivial(), a2.is_trivial()) {
        (true, true) => &MotiveClass::lefschetz_pow(1) - &MotiveClass::from_int(2),
        (true, false) | (false, true) => MotiveClass::from_int(-1),
        (false, false) => jacobi(a1, a2),
    }
}

/// Class of the torus `G_m^m` twisted by `α` pulled back along the monomial
/// `Π c_j^{n_j}`.
///
/// Equals `(L - 1)^m` when the order of `α` divides `gcd{n_j : n_j > 0}`, and
/// zero otherwise. With every exponent zero only the trivial character survives.
pub fn torus_char_class(exponents: &[u32], alpha: &Character) -> MotiveClass {
    let g = exponents.iter().filter(|&&n| n > 0).fold(0u64, |acc, &n| acc.gcd(&(n as u64)));
    let survives = if g == 0 { alpha.is_trivial() } else { alpha.order_divides(g) };
    if survives {
        MotiveClass::lefschetz_minus_one().pow(exponents.len() as u32)
    } else {
        MotiveClass::zero()
    }
}

/// Weight `p + q` of a single-term class, if it has one term.
pub fn pure_weight(c: &MotiveClass) -> Option<i64> {
    let mut it = c.terms();
    let (deg, _) = it.next()?;
    if it.next().is_some() {
        return None;
    }
    Some(deg.weight())
}
