//! Projective reflection groups `G(r,p,s,n)`, their descent-type statistics,
//! and exact verifiers for the generating-function identities those
//! statistics satisfy.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of immutable values:
//!
//! - [`group`]: colored permutations, the quotient groups and their
//!   canonical representatives, deterministic enumeration, window notation.
//! - [`stats`]: color order and the alternative order, descent sets, the
//!   `λ(g)` partition and everything derived from it.
//! - [`cyclotomic`]: exact arithmetic in `ℤ[ζ_r]`.
//! - [`series`]: sparse truncated multivariate series over `ℤ` or `ℤ[ζ_r]`.
//! - [`identities`]: one verifier per identity, each comparing an
//!   enumeration against a closed form.
//! - [`bijections`]: the `ℕⁿ(p)` encoding, 2-partite partitions, the order
//!   relabeling and Robinson–Schensted for signed permutations.
//!
//! Enumeration-heavy verifiers are generic over an [`exec::Executor`], so a
//! std front end can plug in a thread pool without this crate knowing.

#![no_std]

extern crate alloc;

pub mod bijections;
pub mod cyclotomic;
pub mod error;
pub mod exec;
pub mod group;
pub mod identities;
pub mod series;
pub mod stats;

pub use crate::cyclotomic::CycInt;
pub use crate::error::{Error, Result};
pub use crate::group::{residue, ColoredPermutation, GroupDescriptor, ProjectiveElement};
pub use crate::identities::{Outcome, VerificationReport, Verifier};
pub use crate::series::{CyclotomicRing, IntegerRing, Monomial, Ring, TruncatedSeries};
pub use crate::stats::{Order, StatRecord};
