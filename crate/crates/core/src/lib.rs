//! Exact finite combinatorics of the simplex category Δ, the interval
//! category ∇ and the cyclic category Λ, together with finite truncated
//! presheaves on them.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod crossed;
pub mod delta;
pub mod error;
pub mod lambda;
pub mod lifting;
pub mod presheaf;
pub mod reedy;
pub mod report;
pub mod segal;
pub mod suites;
mod union_find;

pub use error::{Error, Result};
