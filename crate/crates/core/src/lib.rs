//! Saturation numbers of graphs.
//!
//! A graph `G` is `H`-saturated when it contains no copy of `H` but adding
//! any missing edge creates one; `sat(H, n)` is the fewest edges such a
//! graph on `n` vertices can have. This crate provides:
//!
//! * [`graph`]: immutable simple graphs and the usual constructors;
//! * [`canon`] and [`embed`]: canonical forms and subgraph search;
//! * [`saturation`]: a saturation verifier that returns certificates;
//! * [`weight`]: the edge-weight function and the lower bound on
//!   `sat(H, n)` it yields;
//! * [`threshold`]: threshold-graph build sequences, recognition and weight
//!   tracking;
//! * [`constructions`]: explicit saturated graphs;
//! * [`oracle`]: exact `sat(H, n)` for small `n`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod saturation;
pub mod threshold;
pub mod weight;

pub use num_rational::Ratio;

/// Exact rational used for slopes and constants.
pub type Rational = Ratio<i64>;

pub use canon::{canonical_form, CANON_CAP};
pub use embed::{contains_subgraph, Embedding};
pub use error::{Error, ErrorKind, Result};
pub use graph::Graph;
pub use oracle::{Executor, SatResult, SatValue, Serial, SharpnessProbe, ENUM_CAP};
pub use saturation::{verify_saturation, Certificate, SaturationVerdict};
pub use threshold::{AutomatonState, Step, ThresholdSequence};
pub use weight::{LowerBound, SatLimit, SatLowerBound, Weight, WeightReport};
