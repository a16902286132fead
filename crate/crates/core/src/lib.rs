//! Exact enumeration of the minimal z-containing and maximal z-avoiding
//! subsets of a finite point set in R^d.
//!
//! All arithmetic is over arbitrary-precision rationals. The crate is
//! organised bottom-up:
//!
//! - [`geometry`]: scalars, points, determinants, hyperplanes and convex
//!   membership predicates.
//! - [`instance`]: the `(d, S, z)` triple and subset masks.
//! - [`position`]: the two general-position hypotheses with witnesses.
//! - [`family`]: the families C(S), A(S), Smpl(S), F(S), H(S) and all
//!   per-point counts, each by a brute-force oracle and a fast path.
//! - [`construct`]: certificate-producing constructions (ray-shooting
//!   simplex finder, facet certificate, good vertex).
//! - [`verify`], [`generate`], [`io`], [`batch`]: the verification harness
//!   behind the `zerohull` binary.

pub mod batch;
pub mod construct;
pub mod error;
pub mod family;
pub mod generate;
pub mod geometry;
pub mod instance;
pub mod io;
pub mod position;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{Hyperplane, Point, Scalar, Side};
pub use instance::{Instance, Mask};
