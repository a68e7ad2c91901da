//! Floating-point ground truth: `p`-adic exponential sums and finite-field
//! Gauss and Jacobi sums.

pub mod finite_field;
pub mod padic;
pub mod poly_expr;

pub use finite_field::{check_gauss_jacobi, gauss_sum_fp, jacobi_sum_numeric, GaussJacobiReport};
pub use padic::{
    check_decomposition, gauss_sum_numeric, padic_char_integral, padic_exp_integral, PadicContext, DecompositionReport,
    ResidualFunction, ResidueCharacter, UnitGroup, TOLERANCE,
};
pub use poly_expr::IntPoly;
