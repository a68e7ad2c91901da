//! Exact motivic exponential integrals for monomial normal-crossings data.
//!
//! The crate works in the Hodge realization of the Grothendieck ring of
//! motives: virtual motives are bigraded classes `Σ c·u^p v^q` with `L = uv`,
//! extended by formal Gauss-sum classes `G_α` for characters `α ∈ Q/Z`.
//! On top of that it provides
//!
//! * rational series in `T` with the two expansions at `0` and `∞`, the
//!   Hadamard product and the constant-term functional `λ` ([`series`]);
//! * character integrals, zeta series and exponential-integral series over
//!   arc spaces of monomial data, together with an independent stratified
//!   computation for `f(x) + f'(y)` ([`arc`]);
//! * vanishing-cycle classes and Hodge spectra ([`spectra`]);
//! * p-adic and finite-field numeric oracles ([`oracles`]).

pub mod arc;
pub mod cli;
pub mod error;
pub mod gauss;
pub mod json;
pub mod motive;
pub mod oracles;
pub mod selftest;
pub mod series;
pub mod spectra;

pub use error::{Error, Result};
pub use gauss::UElement;
pub use motive::{Character, MotiveClass, MotiveFrac};
