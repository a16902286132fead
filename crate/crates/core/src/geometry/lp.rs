//! Exact phase-one simplex for `A x = b, x >= 0` feasibility.

use num_traits::{Signed, Zero};

use super::Scalar;

/// Decides whether `A x = b` has a nonnegative solution. Dense tableau with
/// Bland's rule, so it terminates on degenerate systems.
pub(crate) fn feasible_nonneg(a: &[Vec<Scalar>], b: &[Scalar]) -> bool {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let width = cols + rows + 1;
    let rhs = width - 1;

    let mut tab: Vec<Vec<Scalar>> = Vec::with_capacity(rows);
    for (r, (row, v)) in a.iter().zip(b).enumerate() {
        let flip = v.is_negative();
        let mut t = vec![Scalar::zero(); width];
        for (j, x) in row.iter().enumerate() {
            t[j] = if flip { -x } else { x.clone() };
        }
        t[cols + r] = Scalar::from_integer(1.into());
        t[rhs] = if flip { -v } else { v.clone() };
        tab.push(t);
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Scalar::zero(); width];
    for t in &tab {
        for j in 0..cols {
            cost[j] -= &t[j];
        }
        cost[rhs] -= &t[rhs];
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    while let Some(enter) = (0..cols + rows).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Scalar)> = None;
        for r in 0..rows {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let ratio = &tab[r][rhs] / &tab[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => {
                    ratio < *best || (ratio == *best && basis[r] < basis[*lr])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // Phase one is bounded below by zero.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let pivot = tab[pr][enter].clone();
        for v in &mut tab[pr] {
            *v /= &pivot;
        }
        let pivot_row = tab[pr].clone();
        for (r, t) in tab.iter_mut().enumerate() {
            if r == pr || t[enter].is_zero() {
                continue;
            }
            let f = t[enter].clone();
            for (v, p) in t.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    cost[rhs].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y = 0
        assert!(feasible_nonneg(&m(&[&[1, 1], &[1, -1]]), &[int(1), int(0)]));
        // x + y = -1 has no nonnegative solution
        assert!(!feasible_nonneg(&m(&[&[1, 1]]), &[int(-1)]));
        // x - y = -3 does
        assert!(feasible_nonneg(&m(&[&[1, -1]]), &[int(-3)]));
        // degenerate: zero rhs
        assert!(feasible_nonneg(&m(&[&[1, 2], &[3, 4]]), &[int(0), int(0)]));
    }
}
