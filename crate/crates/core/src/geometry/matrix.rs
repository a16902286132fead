//! Exact dense linear algebra on small matrices.
//!
//! Rational rows are scaled to integer rows by the lcm of their
//! denominators; determinants then run fraction-free (Bareiss) and ranks
//! use cross-multiplied elimination with content reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Point, Scalar};
use crate::error::{Error, Result};

fn integer_row(row: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let scale = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints = row
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    (ints, scale)
}

/// Narrows every entry to `i64`, if all fit.
fn narrow(m: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    m.iter()
        .map(|r| r.iter().map(|v| v.to_i64().map(i128::from)).collect())
        .collect()
}

/// Bareiss in `i128`; `None` on overflow.
fn bareiss_small(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    let mut negate = false;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if m[k][k] == 0 {
            let i = (k + 1..n).find(|&i| m[i][k] != 0);
            match i {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .checked_mul(m[k][k])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    let d = if n == 0 { 1 } else { m[n - 1][n - 1] };
    Some(if negate { -d } else { d })
}

/// Determinant of an integer matrix.
pub(crate) fn int_det(m: Vec<Vec<BigInt>>) -> BigInt {
    bareiss(m)
}

fn bareiss(m: Vec<Vec<BigInt>>) -> BigInt {
    if let Some(d) = narrow(&m).and_then(bareiss_small) {
        return BigInt::from(d);
    }
    bareiss_big(m)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a square matrix given by rows.
pub fn det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n), "det of non-square matrix");
    let mut scale = BigInt::one();
    let mut ints = Vec::with_capacity(n);
    for row in rows {
        let (r, s) = integer_row(row);
        scale *= s;
        ints.push(r);
    }
    Scalar::new(bareiss(ints), scale)
}

/// Sign of the determinant, skipping the final rational division.
pub fn det_sign(rows: &[Vec<Scalar>]) -> super::Side {
    let ints = rows.iter().map(|r| integer_row(r).0).collect();
    super::Side::of_int(&bareiss(ints))
}

/// Rank of a (possibly rectangular) matrix given by rows.
/// Fraction-free elimination in `i128`; `None` on overflow.
fn rank_small(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..m.len() {
            if m[i][col] == 0 {
                continue;
            }
            let (a, b) = (m[rank][col], m[i][col]);
            let (top, bottom) = m.split_at_mut(i);
            let pivot_row = &top[rank];
            let mut content = 0i128;
            for (x, &p) in bottom[0][col..].iter_mut().zip(&pivot_row[col..]) {
                let v = x.checked_mul(a)?.checked_sub(p.checked_mul(b)?)?;
                content = content.gcd(&v);
                *x = v;
            }
            if content > 1 {
                for v in &mut m[i][col..] {
                    *v /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r).0).collect();
    if let Some(r) = narrow(&m).and_then(rank_small) {
        return r;
    }
    rank_big(m)
}

fn rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let a = m[rank][col].clone();
            let b = m[i][col].clone();
            let (top, bottom) = m.split_at_mut(i);
            let pivot_row = &top[rank];
            let mut content = BigInt::zero();
            for (x, p) in bottom[0][col..].iter_mut().zip(&pivot_row[col..]) {
                let v = &*x * &a - p * &b;
                content = content.gcd(&v);
                *x = v;
            }
            if content > BigInt::one() {
                for v in &mut m[i][col..] {
                    *v /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Affine dimension of the flat spanned by `points`.
pub fn affine_rank(points: &[&Point]) -> Result<usize> {
    let (first, rest) = points.split_first().ok_or(Error::EmptyInput)?;
    let dim = first.dim();
    if let Some(p) = rest.iter().find(|p| p.dim() != dim) {
        return Err(Error::Dimension {
            expected: dim,
            found: p.dim(),
        });
    }
    let diffs: Vec<Vec<Scalar>> = rest.iter().map(|p| *p - first).collect();
    Ok(rank(&diffs))
}

/// Solves `a x = b` for a matrix with full column rank. Returns `None` if
/// the system is inconsistent or the columns are dependent.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&i| !m[i][col].is_zero())?;
        m.swap(row, pivot);
        let p = m[row][col].clone();
        for v in &mut m[row][col..] {
            *v /= &p;
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[row].clone();
                for (x, p) in m[i][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some(m[..cols].iter().map(|r| r[cols].clone()).collect())
}
