//! Edge colorings with restricted color transitions.
//!
//! A coloring assigns to every edge of a simple graph `G` a vertex of a
//! *pattern graph* `H` (loops permitted). Two consecutive edges of a walk
//! make a legal transition exactly when their colors are adjacent in `H`;
//! an interior vertex where the transition is illegal is an *obstruction*.
//! Walks, paths and cycles without obstructions are the central objects:
//! when `H` is complete and loopless they are precisely the properly
//! colored ones.
//!
//! The crate provides:
//!
//! * the shared data model ([`model`]),
//! * the local auxiliary graph at a vertex and its complete-multipartite
//!   partition ([`local`]),
//! * obstruction analysis and fixed-length cycle search ([`walks`]),
//! * the dependence property, its tournament orientation and the
//!   bounded-part extraction ([`dependence`]),
//! * hypothesis/conclusion verifiers for the short-cycle theorems
//!   ([`theorems`]),
//! * the properly colored specialization ([`proper`]),
//! * instance generators and the constrained tightness search
//!   ([`factory`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `hcolor-cli` crate.

#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::int_plus_one)] // bounds keep their 2k >= n+1 form

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dependence;
mod error;
pub mod factory;
pub mod local;
pub mod model;
pub mod proper;
pub mod theorems;
pub mod walks;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
