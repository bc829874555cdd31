//! Exact McKay and McKay-Slodowy quivers for finite subgroups of SL2(C).
//!
//! The crate enumerates the binary polyhedral groups as explicit matrix
//! groups over cyclotomic fields, computes their character tables, builds
//! the restriction and induction quivers of normal pairs `N < G`, and
//! computes the multiplicities of the node modules in the symmetric powers
//! of the natural two-dimensional module by several independent methods.

pub mod error;
pub mod exactnum;
pub mod groups;
pub mod kostant;
pub mod quiver;
pub mod rootsystem;
pub mod verify;

pub use error::{Error, Result};
