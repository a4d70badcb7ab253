//! Exact computations around nilpotent orbits, root systems and locally
//! nilpotent derivations.
//!
//! - [`partitions`]: constrained integer partitions and their counts.
//! - [`rootsys`]: root systems, Cartan matrices and group dimensions.
//! - [`orbits`]: nilpotent orbit counts and type-A orbit dimensions.
//! - [`lnd`]: derivations on polynomial quotient rings, with the `SL_2` instance.
//! - [`embedcheck`]: case analysis for principal and subregular `SL_2` witnesses.
//! - [`report`]: kind-tagged result records for the command-line tool.
//!
//! Arithmetic is exact throughout. Sweeps run on rayon when the `parallel`
//! feature is enabled; see [`exec::Execution`].

pub mod embedcheck;
pub mod exec;
pub mod linalg;
pub mod lnd;
pub mod orbits;
pub mod partitions;
pub mod report;
pub mod rootsys;
