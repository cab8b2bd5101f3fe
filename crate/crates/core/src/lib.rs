//! Exact rational algebra for the cyclic 2-groups `C_{2^n}`.
//!
//! The crate computes with rational Burnside rings, semisimple rational
//! Mackey functors, the `RO(G)`-graded rational stable stems of a point,
//! and Bredon cohomology of equivariant classifying spaces with
//! coefficients in the rational Burnside functor. Each headline result is
//! available through at least two independent routes, and the
//! [`compare`] and [`selftest`] modules cross-check them.
//!
//! All arithmetic is exact (`BigRational`); there is no floating point.

pub mod burnside;
pub mod cli;
pub mod classifying;
pub mod compare;
pub mod error;
pub mod graded;
pub mod mackey;
pub mod rolattice;
pub mod scalar;
pub mod selftest;
pub mod series;
pub mod stems;

pub use error::{Error, Result};
