//! Exact coadjoint-orbit computations for the maximal nilpotent Lie algebras
//! `A_{n-1}^+`, `B_n^+` and `D_n^+`.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] builds positive root systems, their matrix root vectors and
//!   the bracket table derived from matrix commutators.
//! * [`liealg`] holds functionals on the algebra, the coadjoint action of
//!   `exp(g)`, the skew form `(x, y) -> f([x, y])` and exact orbit dimensions.
//! * [`orbits`] computes singular/regular root sets and the defining-equation
//!   charts of elementary orbits `O_alpha(c)`.
//! * [`basic`] is the type-A basic-subset calculus: basic sums, derived sets,
//!   decomposition of functionals and achievable orbit dimensions.
//! * [`oracle`] is the brute-force verification harness.
//!
//! All arithmetic is exact: structure constants are integers and functional
//! values are arbitrary-precision rationals.

#![allow(clippy::needless_range_loop)]

pub mod basic;
pub mod error;
pub mod linalg;
pub mod liealg;
pub mod oracle;
pub mod orbits;
pub mod rational;
pub mod rootsys;
pub mod schema;

pub use basic::{BasicMap, BasicSubset, Chain, DecompositionResult};
pub use error::{Error, Result};
pub use liealg::{Functional, GroupWord, SkewForm};
pub use orbits::{OrbitChart, Polynomial, SignConvention, SingularData, SumSignRule};
pub use rational::Rational;
pub use rootsys::{BracketTable, MatrixRealization, PositiveRoot, RootSystem, RootSystemKind};
