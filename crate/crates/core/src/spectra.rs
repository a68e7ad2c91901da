//! Nearby and vanishing-cycle classes, the Gauss-twisted class `SG`, and
//! Hodge spectra.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::arc::{direct_zeta_series, MonomialGeometry};
use crate::error::{Error, Result};
use crate::gauss::UElement;
use crate::motive::{Character, MotiveClass, MotiveFrac};

/// `Σ n_β t^β` with rational exponents and integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpectrumPoly {
    terms: BTreeMap<Rational64, i64>,
}

impl SpectrumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational64::zero(), 1)
    }

    pub fn monomial(beta: Rational64, n: i64) -> Self {
        let mut out = Self::zero();
        out.add(beta, n);
        out
    }

    pub fn add(&mut self, beta: Rational64, n: i64) {
        let e = self.terms.entry(beta).or_insert(0);
        *e += n;
        if *e == 0 {
            self.terms.remove(&beta);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Rational64, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                out.add(a + b, m * n);
            }
        }
        out
    }

    /// `t^β ↦ t^{-β}`.
    pub fn iota(&self) -> Self {
        SpectrumPoly { terms: self.terms.iter().map(|(b, n)| (-b, *n)).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: Rational64) -> Self {
        SpectrumPoly { terms: self.terms.iter().map(|(b, n)| (b + k, *n)).collect() }
    }

    /// Invariance under `β ↦ center·2 - β`.
    pub fn is_symmetric_about(&self, center: Rational64) -> bool {
        self.terms.iter().all(|(b, n)| self.terms.get(&(center * 2 - b)) == Some(n))
    }
}

impl fmt::Display for SpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, n)| if *n == 1 { format!("t^{b}") } else { format!("{n}*t^{b}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn l_over_one_minus_l(m: usize) -> MotiveFrac {
    // L^m / (1 - L) = -L^m / (L - 1)
    -(&MotiveFrac::lefschetz_pow(m as i64) * &MotiveFrac::inv_lefschetz_minus_one())
}

/// `S^ψ_α = L^m / (1 - L) · λ(Z_α)`.
pub fn s_psi(geom: &MonomialGeometry, alpha: &Character) -> MotiveFrac {
    let z = geom.zeta_series(alpha);
    &l_over_one_minus_l(geom.ambient_dim()) * &z.lambda()
}

/// `S^φ_α`: `S^ψ_α - χ_c(W)` at the trivial character, `S^ψ_α` otherwise.
pub fn s_phi(geom: &MonomialGeometry, alpha: &Character) -> MotiveFrac {
    let psi = s_psi(geom, alpha);
    if alpha.is_trivial() {
        &psi - &MotiveFrac::from(geom.chi_c_w())
    } else {
        psi
    }
}

/// `χ_c(W)` for a union of coordinate hyperplanes.
pub fn chi_c_w(geom: &MonomialGeometry) -> MotiveClass {
    geom.chi_c_w()
}

/// `SG = Σ_α G_{α⁻¹} S^φ_α`.
pub fn sg(geom: &MonomialGeometry) -> UElement {
    // Z_α is Z_1 or 0, so one λ serves every character
    let psi = &l_over_one_minus_l(geom.ambient_dim()) * &geom.zeta_series(&Character::TRIVIAL).lambda();
    let mut out = UElement::zero();
    for alpha in Character::of_order_dividing(geom.big_d()) {
        let mut phi = if alpha.order_divides(geom.exponent_gcd()) { psi.clone() } else { MotiveFrac::zero() };
        if alpha.is_trivial() {
            phi = &phi - &MotiveFrac::from(geom.chi_c_w());
        }
        out.add_gauss(alpha.inverse(), phi);
    }
    out
}

/// `SG` of `f ⊕ f'` on `W × W'`, computed from the stratified zeta series
/// rather than from products in `U`.
pub fn sg_product_direct(left: &MonomialGeometry, right: &MonomialGeometry) -> UElement {
    let m = left.ambient_dim() + right.ambient_dim();
    let chi = &left.chi_c_w() * &right.chi_c_w();
    let mut out = UElement::zero();
    for alpha in Character::of_order_dividing(left.big_d().lcm(&right.big_d())) {
        let z = direct_zeta_series(left, right, &alpha);
        let mut phi = &l_over_one_minus_l(m) * &z.lambda();
        if alpha.is_trivial() {
            phi = &phi - &MotiveFrac::from(chi.clone());
        }
        out.add_gauss(alpha.inverse(), phi);
    }
    out
}

/// Spectrum read off an `SG` class of total dimension `m`:
/// `t^m ι(Σ_α (-1)^{m-1} Σ c t^{p + γ(α)})` over the realization terms of `S^φ_α`.
pub fn sp_from_sg(sg: &UElement, m: usize) -> Result<SpectrumPoly> {
    let sign = if m % 2 == 1 { 1 } else { -1 };
    let mut inner = SpectrumPoly::zero();
    for (alpha, coeff) in sg.sg_decompose() {
        let class = coeff.as_class().ok_or_else(|| {
            Error::Unsupported(format!("vanishing-cycle class at {alpha} is not a polynomial class: {coeff}"))
        })?;
        for (deg, c) in class.terms() {
            if !deg.p.is_integer() {
                return Err(Error::Unsupported(format!("fractional Hodge degree {} at {alpha}", deg.p)));
            }
            if !c.is_integer() {
                return Err(Error::Unsupported(format!("non-integral multiplicity {c} at {alpha}")));
            }
            let n = c.to_integer().to_i64().ok_or_else(|| Error::Unsupported("multiplicity overflow".into()))?;
            inner.add(deg.p + alpha.gamma(), sign * n);
        }
    }
    Ok(inner.iota().shift(Rational64::from_integer(m as i64)))
}

/// Spectrum of monomial data with `W` the coordinate cross and every exponent
/// positive.
pub fn sp(geom: &MonomialGeometry) -> Result<SpectrumPoly> {
    if !geom.w_is_full() || geom.f_exponents().iter().any(|&n| n == 0) {
        return Err(Error::Geometry(
            "spectra need W to be the full coordinate cross and every f-exponent positive".into(),
        ));
    }
    sp_from_sg(&sg(geom), geom.ambient_dim())
}

/// Spectrum of `Σ x_i^{a_i}` from the monomial basis of its Milnor algebra.
pub fn brieskorn_oracle(exponents: &[u32]) -> Result<SpectrumPoly> {
    if let Some(a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::Geometry(format!("Brieskorn exponent {a} is below 2")));
    }
    let mut out = SpectrumPoly::one();
    for &a in exponents {
        let mut factor = SpectrumPoly::zero();
        for l in 0..a - 1 {
            factor.add(Rational64::new(l as i64 + 1, a as i64), 1);
        }
        out = out.mul(&factor);
    }
    Ok(out)
}

/// `SG(x_1^{a_1}) ⋯ SG(x_k^{a_k})` in `U`.
pub fn sg_brieskorn(exponents: &[u32]) -> Result<UElement> {
    let mut out = UElement::one();
    for &a in exponents {
        out = &out * &sg(&MonomialGeometry::power(a)?);
    }
    Ok(out)
}

/// Spectrum of `Σ x_i^{a_i}` through products of `SG` classes.
pub fn sp_brieskorn(exponents: &[u32]) -> Result<SpectrumPoly> {
    sp_from_sg(&sg_brieskorn(exponents)?, exponents.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: i64, d: i64) -> Character {
        Character::new(a, d).unwrap()
    }

    fn spectrum_of(pairs: &[(i64, i64, i64)]) -> SpectrumPoly {
        let mut out = SpectrumPoly::zero();
        for &(a, b, n) in pairs {
            out.add(Rational64::new(a, b), n);
        }
        out
    }

    #[test]
    fn psi_examples() {
        for a in 1..6 {
            let g = MonomialGeometry::power(a).unwrap();
            for alpha in Character::of_order_dividing(a as u64) {
                assert_eq!(s_psi(&g, &alpha), MotiveFrac::one(), "a={a} alpha={alpha}");
            }
        }
        let x2 = MonomialGeometry::power(2).unwrap();
        assert!(s_psi(&x2, &ch(1, 3)).is_zero());
    }

    #[test]
    fn phi_examples() {
        let x = MonomialGeometry::power(1).unwrap();
        assert!(s_phi(&x, &Character::TRIVIAL).is_zero());
        let x2 = MonomialGeometry::power(2).unwrap();
        assert_eq!(s_phi(&x2, &ch(1, 2)), MotiveFrac::one());
        assert!(s_phi(&x2, &Character::TRIVIAL).is_zero());
    }

    #[test]
    fn sg_examples() {
        assert_eq!(sg(&MonomialGeometry::power(2).unwrap()), UElement::gauss(ch(1, 2)));
        assert!(sg(&MonomialGeometry::power(1).unwrap()).is_zero());
        let g = MonomialGeometry::power(5).unwrap();
        let decomposed = sg(&g).sg_decompose();
        for alpha in Character::of_order_dividing(5) {
            let expected = s_phi(&g, &alpha);
            assert_eq!(decomposed.get(&alpha).cloned().unwrap_or_default(), expected);
        }
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(sp(&MonomialGeometry::power(2).unwrap()).unwrap(), spectrum_of(&[(1, 2, 1)]));
        let xy = MonomialGeometry::at_origin(vec![1, 1], vec![]).unwrap();
        assert_eq!(sp(&xy).unwrap(), spectrum_of(&[(1, 1, 1)]));
        assert_eq!(sp_brieskorn(&[2, 3]).unwrap(), spectrum_of(&[(5, 6, 1), (7, 6, 1)]));
        assert_eq!(sp_brieskorn(&[2, 2, 2]).unwrap(), spectrum_of(&[(3, 2, 1)]));
    }

    #[test]
    fn sp_rejects_non_point_data() {
        let g = MonomialGeometry::new(vec![2, 1], vec![], &[1]).unwrap();
        assert!(sp(&g).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brieskorn_oracle(&[2]).unwrap(), spectrum_of(&[(1, 2, 1)]));
        assert_eq!(brieskorn_oracle(&[2, 3]).unwrap(), spectrum_of(&[(5, 6, 1), (7, 6, 1)]));
        assert_eq!(brieskorn_oracle(&[2, 2, 2]).unwrap(), spectrum_of(&[(3, 2, 1)]));
        assert!(brieskorn_oracle(&[1, 3]).is_err());
        let s = brieskorn_oracle(&[3, 4, 5]).unwrap();
        assert_eq!(s.total(), 2 * 3 * 4);
        assert!(s.is_symmetric_about(Rational64::new(3, 2)));
    }

    #[test]
    fn direct_sg_matches_u_product() {
        let x2 = MonomialGeometry::power(2).unwrap();
        let y3 = MonomialGeometry::power(3).unwrap();
        assert_eq!(sg_product_direct(&x2, &y3), &sg(&x2) * &sg(&y3));
    }
}
