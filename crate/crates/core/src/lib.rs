//! Exact computations with simple Lie algebras and their affine extensions:
//! level alcoves, Dynkin indices and conformal embeddings, fusion rings and
//! Verlinde dimensions, center actions, truncated affine characters and
//! branching, theta-characteristic combinatorics over F₂, and the
//! Killing-form linear algebra of the adjoint representation.

pub mod acceptance;
pub mod affinechar;
pub mod center;
pub mod embeddings;
pub mod error;
pub mod fusion;
pub mod liematrix;
pub mod rootdata;
pub mod thetachar;

pub use error::{Error, Result};
pub use rootdata::{CartanType, Family, LeveledWeight, Rational, SimpleLieAlgebra, Weight};
