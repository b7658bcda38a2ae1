//! Exact enumeration around graphical degree sequences, graphical bridges
//! and cyclically distinct plane trees.
//!
//! The crate counts plane trees (`T_n`), graphical bridges (`B_n`), lattice
//! paths and bridges with area divisible by `n`, and graphical degree
//! sequences (`G_n`); computes log transforms and renewal decompositions in
//! exact arithmetic; runs the bridge/path and cyclic-shift bijections; and
//! evaluates the limiting constants `xi`, `C` and `rho` with error bounds,
//! alongside a Monte Carlo estimator for `rho`.

pub mod bijections;
pub mod bridges;
pub mod constants;
pub mod error;
pub mod graphseq;
pub mod numtheory;
pub mod series;
pub mod trees;
pub mod walks_mc;

pub use bridges::{Bridge, LazyWalk, Walk};
pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use series::{ExactRational, IntSeqTable};

pub use trees::{LatticePath, Step};

/// How a count is obtained: by visiting every object, or by dynamic
/// programming over a compressed state space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMode {
    Exhaustive,
    Dp,
}
