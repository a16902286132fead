use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{affine_rank, det, int_det};
use super::{Point, Scalar, Side};
use crate::error::{Error, Result};

/// An affine hyperplane `{p : normal·p + offset = 0}` in canonical form:
/// integer coefficients with overall gcd 1 and the first nonzero normal
/// coefficient positive. Equal point sets compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Hyperplane {
    /// Canonicalizes a rational functional. Returns `None` for a zero normal.
    pub fn from_functional(normal: &[Scalar], offset: &Scalar) -> Option<Hyperplane> {
        if normal.iter().all(Zero::is_zero) {
            return None;
        }
        let scale = normal
            .iter()
            .chain(std::iter::once(offset))
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let to_int = |v: &Scalar| v.numer() * (&scale / v.denom());
        let normal: Vec<BigInt> = normal.iter().map(to_int).collect();
        Some(Hyperplane::canonical(normal, to_int(offset)))
    }

    /// Divides out the content and makes the leading coefficient positive.
    fn canonical(mut normal: Vec<BigInt>, mut offset: BigInt) -> Hyperplane {
        let g = normal
            .iter()
            .fold(offset.abs(), |acc, v| acc.gcd(v));
        let lead_negative = normal
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(Signed::is_negative);
        let g = if lead_negative { -g } else { g };
        for v in &mut normal {
            *v /= &g;
        }
        offset /= &g;
        Hyperplane { normal, offset }
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Option<Hyperplane> {
        let normal: Vec<Scalar> = normal.iter().map(|&v| super::int(v)).collect();
        Hyperplane::from_functional(&normal, &super::int(offset))
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// Value of the functional `normal·p + offset`.
    pub fn eval(&self, p: &Point) -> Scalar {
        debug_assert_eq!(p.dim(), self.dim());
        self.normal
            .iter()
            .zip(p.coords())
            .fold(Scalar::from_integer(self.offset.clone()), |acc, (n, c)| {
                acc + c * n
            })
    }

    pub fn side(&self, p: &Point) -> Side {
        // Scale by the lcm of denominators to stay in integers.
        if p.coords().iter().all(|c| c.denom().is_one()) {
            let v = self
                .normal
                .iter()
                .zip(p.coords())
                .fold(self.offset.clone(), |acc, (n, c)| acc + n * c.numer());
            Side::of_int(&v)
        } else {
            Side::of(&self.eval(p))
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side(p) == Side::Zero
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}*x{i}")?;
            } else if c.is_negative() {
                write!(f, " - {}*x{i}", -c)?;
            } else {
                write!(f, " + {c}*x{i}")?;
            }
            first = false;
        }
        if self.offset.is_negative() {
            write!(f, " - {} = 0", -&self.offset)
        } else {
            write!(f, " + {} = 0", self.offset)
        }
    }
}

/// The hyperplane R(T) spanned by `d` affinely independent points of R^d.
///
/// The normal is the generalized cross product of the difference vectors
/// `t_i - t_0`: coordinate `j` is the signed `(d-1)`-minor with column `j`
/// deleted.
pub fn hyperplane_through(points: &[&Point]) -> Result<Hyperplane> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let dim = first.dim();
    if points.len() != dim {
        return Err(Error::Dimension {
            expected: dim,
            found: points.len(),
        });
    }
    if let Some(rows) = integer_points(points) {
        let diffs: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|r| r.iter().zip(&rows[0]).map(|(a, b)| a - b).collect())
            .collect();
        let normal: Vec<BigInt> = (0..dim)
            .map(|j| {
                let m = int_det(minor(&diffs, j));
                if j % 2 == 0 {
                    m
                } else {
                    -m
                }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            return Err(rank_deficient(points));
        }
        let offset = -normal
            .iter()
            .zip(&rows[0])
            .fold(BigInt::zero(), |acc, (n, c)| acc + n * c);
        return Ok(Hyperplane::canonical(normal, offset));
    }
    let diffs: Vec<Vec<Scalar>> = points[1..].iter().map(|p| *p - first).collect();
    let normal: Vec<Scalar> = (0..dim)
        .map(|j| {
            let m = det(&minor(&diffs, j));
            if j % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect();
    let offset = -normal
        .iter()
        .zip(first.coords())
        .fold(Scalar::zero(), |acc, (n, c)| acc + n * c);
    Hyperplane::from_functional(&normal, &offset).ok_or_else(|| rank_deficient(points))
}

/// Drops column `j`.
fn minor<T: Clone>(rows: &[Vec<T>], j: usize) -> Vec<Vec<T>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != j)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

fn integer_points(points: &[&Point]) -> Option<Vec<Vec<BigInt>>> {
    points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| c.is_integer().then(|| c.numer().clone()))
                .collect()
        })
        .collect()
}

fn rank_deficient(points: &[&Point]) -> Error {
    let dim = points[0].dim();
    Error::RankDeficient {
        expected: dim - 1,
        found: affine_rank(points).unwrap_or(0),
    }
}
