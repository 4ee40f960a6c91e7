//! Dynkin graphs, their elementary and tie transformations, and the two-step
//! closures of the essential basic graphs of the triangle singularities
//! `E12, Z11, Q10, E13, Z12, Q11, E14, Z13, Q12`.
//!
//! The crate is organized bottom-up:
//! - [`graph`]: component types, names, labeled realizations, extended graphs
//!   and structural recognition.
//! - [`transforms`]: exhaustive elementary and tie transformations with
//!   replayable choices.
//! - [`catalog`]: the singularity classes and their two-step catalogs.
//! - [`lattice`]: exact root-lattice utilities used as independent checks.
//! - [`oracle`]: brute-force counterparts of the recognition and enumeration
//!   code.
//! - [`verify`]: the regression checks run by the command-line `verify`.

pub mod catalog;
pub mod graph;
pub mod lattice;
pub mod oracle;
pub mod rational;
pub mod transforms;
pub mod verify;

pub use graph::{parse_name, ComponentType, DynkinGraph};
