//! Exact enumeration and bounds for unlabelled bicolored graphs.
//!
//! A bicolored graph with parts of sizes `p` and `q` is a subset of the `p×q`
//! grid; two are identified when some pair of row and column permutations maps
//! one onto the other. `|B_u(p,q)|` counts the resulting orbits.

pub mod arith;
pub mod asymptotic;
pub mod bounds;
pub mod cycle_form;
pub mod dirichlet;
pub mod enumeration;
pub mod error;
pub mod limits;
pub mod perm;
pub mod record;
pub mod verify;

pub use arith::{HalfInteger, QSqrt2, StirlingTable};
pub use error::{Error, Result};
pub use limits::Limits;
pub use perm::{CycleType, Permutation};
