//! Characters of `μ̂ ≅ Q/Z` and the Hodge-realized ring of virtual motives.

pub mod character;
pub mod class;
pub mod frac;
pub mod jacobi;

pub use character::Character;
pub use class::{q, q_frac, Bidegree, MotiveClass, Q};
pub use frac::MotiveFrac;
pub use jacobi::{fermat_torus_class, gamma, jacobi, torus_char_class};
