//! Exact computations in stable categories `A/<T>` of finite-dimensional
//! representations of bound quivers over prime fields.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and parallel search live in the `stabcat` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod balance;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod rep;
pub mod stable;
pub mod standard;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Subspace};
pub use quiver::{Arrow, Path, PathAlgebra, Quiver};
pub use rep::{Morphism, Representation};
