//! Gauss and Jacobi sums over `F_p`.

use std::sync::Arc;

use num_complex::Complex64;

use super::padic::{gauss_sum_numeric, ResidueCharacter, UnitGroup, TOLERANCE};
use crate::error::Result;

/// `Σ_{x ≠ 0, 1} χ₁(x) χ₂(1 - x)` for characters mod `p`.
pub fn jacobi_sum_numeric(p: u64, chi1: &ResidueCharacter, chi2: &ResidueCharacter) -> Complex64 {
    (2..p).map(|x| chi1.eval(x) * chi2.eval(p + 1 - x)).sum()
}

/// `Σ_{v ∈ F_p^×} χ(v) e^{2πi v/p}`.
pub fn gauss_sum_fp(chi: &ResidueCharacter) -> Complex64 {
    gauss_sum_numeric(chi)
}

/// All characters of `F_p^×`.
pub fn characters_mod(p: u64) -> Result<(Arc<UnitGroup>, Vec<ResidueCharacter>)> {
    let g = UnitGroup::new(p, 1)?;
    let chars = g.characters();
    Ok((g, chars))
}

/// Largest deviations found in the three Gauss/Jacobi identities mod `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussJacobiReport {
    pub p: u64,
    /// `g(χ₁)g(χ₂) = j(χ₁,χ₂)g(χ₁χ₂)` over pairs with `χ₁χ₂ ≠ 1`.
    pub product_residue: f64,
    /// `g(χ)g(χ⁻¹) = χ(-1)p` over `χ ≠ 1`.
    pub inverse_residue: f64,
    /// `|j(χ₁,χ₂)| = √p` over pairs with `χ₁, χ₂, χ₁χ₂ ≠ 1`.
    pub weight_residue: f64,
    pub pairs: usize,
}

impl GaussJacobiReport {
    pub fn pass(&self) -> bool {
        self.product_residue <= TOLERANCE && self.inverse_residue <= TOLERANCE && self.weight_residue <= TOLERANCE
    }
}

pub fn check_gauss_jacobi(p: u64) -> Result<GaussJacobiReport> {
    let (_, chars) = characters_mod(p)?;
    let gauss: Vec<Complex64> = chars.iter().map(gauss_sum_fp).collect();
    let sqrt_p = (p as f64).sqrt();
    let mut report =
        GaussJacobiReport { p, product_residue: 0.0, inverse_residue: 0.0, weight_residue: 0.0, pairs: 0 };
    for (a, chi1) in chars.iter().enumerate() {
        if !chi1.is_trivial() {
            let inv = chi1.inverse();
            let lhs = gauss[a] * gauss[inv.index() as usize];
            let rhs = chi1.eval(p - 1) * p as f64;
            report.inverse_residue = report.inverse_residue.max((lhs - rhs).norm());
        }
        for (b, chi2) in chars.iter().enumerate() {
            let prod = chi1.mul(chi2);
            if prod.is_trivial() {
                continue;
            }
            report.pairs += 1;
            let j = jacobi_sum_numeric(p, chi1, chi2);
            let lhs = gauss[a] * gauss[b];
            let rhs = j * gauss[prod.index() as usize];
            report.product_residue = report.product_residue.max((lhs - rhs).norm());
            if !chi1.is_trivial() && !chi2.is_trivial() {
                report.weight_residue = report.weight_residue.max((j.norm() - sqrt_p).abs());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::Character;

    #[test]
    fn jacobi_examples() {
        let (g, chars) = characters_mod(7).unwrap();
        let triv = ResidueCharacter::trivial(&g);
        for chi in chars.iter().filter(|c| !c.is_trivial()) {
            assert!((jacobi_sum_numeric(7, &triv, chi) + 1.0).norm() < 1e-12);
            let j = jacobi_sum_numeric(7, chi, &chi.inverse());
            assert!((j + chi.eval(6)).norm() < 1e-12);
        }
        let cubic = ResidueCharacter::from_character(&g, &Character::new(1, 3).unwrap()).unwrap();
        assert!((jacobi_sum_numeric(7, &cubic, &cubic).norm() - 7f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn identities_hold() {
        for p in [5, 7, 11, 13] {
            let r = check_gauss_jacobi(p).unwrap();
            assert!(r.pass(), "{r:?}");
        }
    }
}
