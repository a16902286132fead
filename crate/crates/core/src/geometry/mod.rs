//! Exact rational geometry: the predicate layer everything else builds on.

mod hull;
mod hyperplane;
mod lp;
pub mod matrix;
mod predicates;

use std::fmt;
use std::ops::{Index, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use hull::{hull_facets, hull_vertices, Facet};
pub use hyperplane::{hyperplane_through, Hyperplane};
pub use matrix::{affine_rank, det};
pub use predicates::{
    affine_coordinates, in_aff_span, in_hull, in_hull_caratheodory, in_interior,
    in_interior_by_simplex_scan, orientation, simplex_contains_interior,
};

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Sign of an affine functional at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Negative,
    Zero,
    Positive,
}

impl Side {
    pub fn of(v: &Scalar) -> Side {
        if v.is_zero() {
            Side::Zero
        } else if v.is_positive() {
            Side::Positive
        } else {
            Side::Negative
        }
    }

    pub fn of_int(v: &BigInt) -> Side {
        if v.is_zero() {
            Side::Zero
        } else if v.is_positive() {
            Side::Positive
        } else {
            Side::Negative
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Side::Negative => -1,
            Side::Zero => 0,
            Side::Positive => 1,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Negative => Side::Positive,
            Side::Zero => Side::Zero,
            Side::Positive => Side::Negative,
        }
    }
}

/// A point of R^d with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    /// `self + t * (other - self)`
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }
}

impl Index<usize> for Point {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Sub for &Point {
    type Output = Vec<Scalar>;

    fn sub(self, rhs: &Point) -> Vec<Scalar> {
        self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
