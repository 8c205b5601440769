//! Exact computations around the invariants of the general linear Lie
//! superalgebra: Kronecker multiplicities over a `k x l` hook, hook Schur
//! functions, constant-term extraction against the superalgebra kernel, and
//! the Poincaré series built from them.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and no
//! floating point is involved anywhere.

pub mod charkron;
pub mod cli;
pub mod error;
pub mod hookschur;
pub mod laurent;
pub mod partition;
pub mod poincare;
pub mod qseries;
pub mod residue;

pub use error::{Error, Result};
pub use partition::{Hook, HookClass, Partition};
