//! Exact symmetric-function kernel for plethystic Murnaghan-Nakayama rules.
//!
//! Every symmetric function lives in the power-sum basis with coefficients in
//! Q(t). Schur Q-functions and Hall-Littlewood functions are built from vertex
//! operators acting on that representation, and the combinatorial rules
//! ([`pleth_q`], [`hall_littlewood`]) are checked against brute-force
//! expansions obtained by orthogonality ([`verify`]).

pub mod algebra;
pub mod error;
pub mod expansion;
pub mod hall_littlewood;
pub mod partition;
pub mod pleth_q;
pub mod schur_q;
pub mod symfunc;
pub mod verify;

mod memo;

pub use algebra::{BigInt, BigRational, TPoly, TRational};
pub use error::{Error, Result};
pub use expansion::{HExpansion, QExpansion};
pub use partition::{Composition, Partition, StrictPartition};
pub use symfunc::PSeriesElem;
