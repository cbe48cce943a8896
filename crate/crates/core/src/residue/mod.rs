//! Exact linear algebra over ℤ_M.

mod howell;
mod invariants;
mod matrix;
mod modulus;
mod subgroup;

pub use invariants::InvariantFactors;
pub use matrix::{add_vec, axpy, dot, scale_vec, sub_vec, ResidueMatrix};
pub use modulus::{divisors, ext_gcd, factorize, gcd, Modulus};
pub use subgroup::Subgroup;
