//! Exact duality and dynamics of abelian group codes over `Z_M` on finite
//! time axes: duals, state spaces, granules, controllability and
//! observability, and executable encoder / observer / syndrome-former
//! machines, with a brute-force oracle to check them against.

pub mod cli;
pub mod code;
pub mod convolutional;
pub mod dynamics;
pub mod error;
pub mod fixtures;
pub mod machines;
pub mod oracle;
pub mod report;
pub mod residue;
pub mod sequence;
pub mod spec_file;
pub mod verify;

pub use code::GroupCode;
pub use error::{Error, Result};
pub use residue::{InvariantFactors, Modulus, ResidueMatrix, Subgroup};
pub use sequence::{Interval, SymbolLayout, TimeSubset};
