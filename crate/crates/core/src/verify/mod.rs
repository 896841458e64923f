//! Brute-force oracles and the verification suites built on them.

pub mod config;
pub mod oracles;
pub mod report;
pub mod suites;

pub use config::SweepConfig;
pub use oracles::{oracle_hl, oracle_q};
pub use report::{Failure, VerifyReport};
pub use suites::{run_suite, Suite};
