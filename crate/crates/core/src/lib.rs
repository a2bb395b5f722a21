//! Exact-arithmetic library for computing the resolution invariant and
//! associated marked centre of a singular affine scheme, performing
//! stack-theoretic weighted blow-ups chart by chart, verifying that the
//! invariant strictly decreases, and benchmarking the derivative-ideal
//! method against the factorial-growth coefficient-ideal baseline.

pub mod atw_baseline;
pub mod benchmarks;
pub mod blowup_engine;
pub mod core_algebra;
pub mod error;
pub mod expr_io;
pub mod global_strat;
pub mod method_one;
pub mod method_two;
pub mod newton_graph;
pub mod validate;
pub mod weighting;
pub mod work;

pub use error::{Error, Result};
