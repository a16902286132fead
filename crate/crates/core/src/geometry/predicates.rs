use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::hull::hull_facets;
use super::lp::feasible_nonneg;
use super::matrix::{affine_rank, det_sign, solve};
use super::{Point, Scalar, Side};

/// Orientation of `d + 1` points in R^d: sign of `det[p_i - p_0]`.
pub fn orientation(points: &[&Point]) -> Side {
    let first = points[0];
    let rows: Vec<Vec<Scalar>> = points[1..].iter().map(|p| *p - first).collect();
    det_sign(&rows)
}

/// True iff `simplex` (d + 1 points) is full-dimensional and `z` lies
/// strictly inside it.
///
/// Replacing vertex `i` by `z` and taking the orientation gives the signed
/// side of `z` relative to the facet opposite vertex `i`; `z` is interior
/// iff every such sign equals the simplex orientation.
pub fn simplex_contains_interior(simplex: &[&Point], z: &Point) -> bool {
    let dim = z.dim();
    if simplex.len() != dim + 1 {
        return false;
    }
    let base = orientation(simplex);
    if base == Side::Zero {
        return false;
    }
    let mut probe = simplex.to_vec();
    for i in 0..simplex.len() {
        probe[i] = z;
        let s = orientation(&probe);
        probe[i] = simplex[i];
        if s != base {
            return false;
        }
    }
    true
}

/// Whether `p` lies in the affine span of `points`.
pub fn in_aff_span(points: &[&Point], p: &Point) -> bool {
    if points.is_empty() {
        return false;
    }
    let mut with = points.to_vec();
    with.push(p);
    affine_rank(&with).ok() == affine_rank(points).ok()
}

/// Coordinates of `p` in the affine frame `basis[0]; basis[i] - basis[0]`.
/// `basis` must be affinely independent; `None` if `p` is off its span.
pub fn affine_coordinates(basis: &[&Point], p: &Point) -> Option<Vec<Scalar>> {
    let origin = basis.first()?;
    let dim = origin.dim();
    let dirs: Vec<Vec<Scalar>> = basis[1..].iter().map(|b| *b - origin).collect();
    let a: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| dirs.iter().map(|d| d[r].clone()).collect())
        .collect();
    let rhs = p - origin;
    if dirs.is_empty() {
        return rhs.iter().all(Zero::is_zero).then(Vec::new);
    }
    solve(&a, &rhs)
}

/// `z ∈ conv(points)`, decided by exact feasibility of
/// `Σ λ_i x_i = z, Σ λ_i = 1, λ >= 0`.
pub fn in_hull(points: &[&Point], z: &Point) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = z.dim();
    let mut a: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| points.iter().map(|p| p[r].clone()).collect())
        .collect();
    a.push(vec![Scalar::one(); points.len()]);
    let mut b: Vec<Scalar> = z.coords().to_vec();
    b.push(Scalar::one());
    feasible_nonneg(&a, &b)
}

/// `z ∈ conv(points)` by Carathéodory: some affinely independent subset of
/// at most `d + 1` points has `z` as a convex combination.
pub fn in_hull_caratheodory(points: &[&Point], z: &Point) -> bool {
    let dim = z.dim();
    (1..=(dim + 1).min(points.len())).any(|k| {
        points.iter().combinations(k).any(|subset| {
            let subset: Vec<&Point> = subset.into_iter().copied().collect();
            if affine_rank(&subset).ok() != Some(k - 1) {
                return false;
            }
            match affine_coordinates(&subset, z) {
                Some(lambda) => {
                    let rest: Scalar = lambda.iter().sum();
                    lambda.iter().all(|l| !l.is_negative()) && rest <= Scalar::one()
                }
                None => false,
            }
        })
    })
}

/// `z` in the full-dimensional interior of `conv(points)`: the points span
/// R^d and `z` is strictly inside every facet halfspace of the hull.
pub fn in_interior(points: &[&Point], z: &Point) -> bool {
    if points.is_empty() || affine_rank(points).ok() != Some(z.dim()) {
        return false;
    }
    match hull_facets(points) {
        Ok(facets) => facets.iter().all(|f| f.strictly_inside(z)),
        Err(_) => false,
    }
}

/// Interior test by scanning `(d + 1)`-subsets for a simplex strictly
/// containing `z`. Agrees with [`in_interior`] when `z` is in general
/// position with respect to `points`.
pub fn in_interior_by_simplex_scan(points: &[&Point], z: &Point) -> bool {
    points
        .iter()
        .copied()
        .combinations(z.dim() + 1)
        .any(|t| simplex_contains_interior(&t, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Point> {
        v.iter().map(|c| Point::from_ints(c)).collect()
    }

    fn refs(p: &[Point]) -> Vec<&Point> {
        p.iter().collect()
    }

    #[test]
    fn simplex_interior_examples() {
        let tri = pts(&[&[0, 2], &[-2, -1], &[3, -1]]);
        let z = Point::origin(2);
        assert!(simplex_contains_interior(&refs(&tri), &z));
        assert!(!simplex_contains_interior(&refs(&tri), &tri[0]));
        let flat = pts(&[&[0, 0], &[1, 1], &[2, 2]]);
        assert!(!simplex_contains_interior(&refs(&flat), &Point::from_ints(&[1, 1])));
        // boundary
        let edge_mid = Point::from_ints(&[1, -1]);
        assert!(!simplex_contains_interior(&refs(&tri), &edge_mid));
    }

    #[test]
    fn in_hull_examples() {
        let tri = pts(&[&[0, 2], &[-2, -1], &[3, -1]]);
        assert!(in_hull(&refs(&tri), &tri[1]));
        let seg = pts(&[&[-2], &[5]]);
        assert!(in_hull(&refs(&seg), &Point::origin(1)));
        let x = pts(&[&[-2, -1], &[3, -1], &[1, 0]]);
        assert!(!in_hull(&refs(&x), &Point::origin(2)));
        assert!(!in_hull_caratheodory(&refs(&x), &Point::origin(2)));
        assert!(in_hull(&refs(&x), &Point::from_ints(&[1, 0])));
        assert!(!in_hull(&[], &Point::origin(2)));
    }

    #[test]
    fn in_interior_examples() {
        let tri = pts(&[&[0, 2], &[-2, -1], &[3, -1]]);
        let z = Point::origin(2);
        assert!(in_interior(&refs(&tri), &z));
        assert!(in_interior_by_simplex_scan(&refs(&tri), &z));
        let flat = pts(&[&[-1, -1], &[1, 1]]);
        assert!(!in_interior(&refs(&flat), &z));
        let x = pts(&[&[-2, -1], &[3, -1], &[1, 0]]);
        assert!(!in_interior(&refs(&x), &z));
        // on an edge of the hull: in the hull, not interior
        let sq = pts(&[&[-1, 0], &[1, 0], &[0, 1]]);
        assert!(in_hull(&refs(&sq), &z));
        assert!(!in_interior(&refs(&sq), &z));
    }

    #[test]
    fn interior_without_containing_simplex_in_degenerate_position() {
        // z is the centre of a square: interior, but every triangle has z on
        // its boundary. This is the gap between the two interior tests when
        // z is not in general position.
        let sq = pts(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]]);
        let z = Point::origin(2);
        assert!(in_interior(&refs(&sq), &z));
        assert!(!in_interior_by_simplex_scan(&refs(&sq), &z));
    }

    #[test]
    fn affine_coordinates_examples() {
        let b = pts(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]]);
        let c = affine_coordinates(&refs(&b), &Point::from_ints(&[1, 1, 0])).unwrap();
        let half = Scalar::new(1.into(), 2.into());
        assert_eq!(c, vec![half.clone(), half]);
        assert!(affine_coordinates(&refs(&b), &Point::from_ints(&[1, 1, 1])).is_none());
    }

    use proptest::prelude::*;

    fn cloud(d: usize) -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>)> {
        (
            prop::collection::vec(prop::collection::vec(-4i64..=4, d), 1..=7),
            prop::collection::vec(-3i64..=3, d),
        )
    }

    proptest! {
        #[test]
        fn hull_membership_routes_agree((xs, z) in (1usize..=3).prop_flat_map(cloud)) {
            let points: Vec<Point> = xs.iter().map(|c| Point::from_ints(c)).collect();
            let z = Point::from_ints(&z);
            let r = refs(&points);
            prop_assert_eq!(in_hull(&r, &z), in_hull_caratheodory(&r, &z));
        }

        #[test]
        fn interior_implies_hull((xs, z) in (1usize..=3).prop_flat_map(cloud)) {
            let points: Vec<Point> = xs.iter().map(|c| Point::from_ints(c)).collect();
            let z = Point::from_ints(&z);
            let r = refs(&points);
            if in_interior(&r, &z) {
                prop_assert!(in_hull(&r, &z));
            }
            if in_interior_by_simplex_scan(&r, &z) {
                prop_assert!(in_interior(&r, &z));
            }
        }

        #[test]
        fn simplex_predicate_implies_membership(
            xs in (1usize..=3).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-5i64..=5, d), d + 1)),
        ) {
            let points: Vec<Point> = xs.iter().map(|c| Point::from_ints(c)).collect();
            let z = Point::origin(points[0].dim());
            let r = refs(&points);
            if simplex_contains_interior(&r, &z) {
                prop_assert!(in_interior(&r, &z));
                prop_assert!(in_hull(&r, &z));
            }
        }
    }
}
