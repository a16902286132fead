use std::collections::BTreeMap;

use itertools::Itertools;

use super::hyperplane::{hyperplane_through, Hyperplane};
use super::matrix::{affine_rank, rank};
use super::{Point, Scalar, Side};
use crate::error::{Error, Result};

/// A facet of the convex hull of a full-dimensional point list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Indices (into the input list) of every point lying on the facet
    /// hyperplane. More than `d` when the input is degenerate.
    pub points: Vec<usize>,
    pub hyperplane: Hyperplane,
    /// Side of the hyperplane on which the hull lies.
    pub inward: Side,
}

impl Facet {
    /// Strictly inside the facet's open halfspace.
    pub fn strictly_inside(&self, p: &Point) -> bool {
        self.hyperplane.side(p) == self.inward
    }

    /// Inward-oriented functional value: nonnegative on the hull.
    pub fn inward_value(&self, p: &Point) -> Scalar {
        let v = self.hyperplane.eval(p);
        if self.inward == Side::Negative {
            -v
        } else {
            v
        }
    }
}

/// Facets of `conv(points)` by brute force: every `d`-subset spanning a
/// hyperplane with all points on one closed side, merged by hyperplane.
/// Facets are ordered by their point lists.
pub fn hull_facets(points: &[&Point]) -> Result<Vec<Facet>> {
    let dim = points.first().ok_or(Error::EmptyInput)?.dim();
    let r = affine_rank(points)?;
    if r != dim {
        return Err(Error::RankDeficient {
            expected: dim,
            found: r,
        });
    }
    let mut found: BTreeMap<Hyperplane, Facet> = BTreeMap::new();
    for combo in (0..points.len()).combinations(dim) {
        let subset: Vec<&Point> = combo.iter().map(|&i| points[i]).collect();
        let h = match hyperplane_through(&subset) {
            Ok(h) => h,
            Err(Error::RankDeficient { .. }) => continue,
            Err(e) => return Err(e),
        };
        if found.contains_key(&h) {
            continue;
        }
        let sides: Vec<Side> = points.iter().map(|p| h.side(p)).collect();
        let pos = sides.contains(&Side::Positive);
        let neg = sides.contains(&Side::Negative);
        if pos && neg {
            continue;
        }
        let inward = if pos { Side::Positive } else { Side::Negative };
        let on: Vec<usize> = (0..points.len()).filter(|&i| sides[i] == Side::Zero).collect();
        found.insert(
            h.clone(),
            Facet {
                points: on,
                hyperplane: h,
                inward,
            },
        );
    }
    let mut facets: Vec<Facet> = found.into_values().collect();
    facets.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(facets)
}

/// Indices of the vertices of `conv(points)`: points whose incident facet
/// normals span R^d.
pub fn hull_vertices(points: &[&Point], facets: &[Facet]) -> Vec<usize> {
    let dim = points.first().map_or(0, |p| p.dim());
    (0..points.len())
        .filter(|&i| {
            let normals: Vec<Vec<Scalar>> = facets
                .iter()
                .filter(|f| f.points.contains(&i))
                .map(|f| {
                    f.hyperplane
                        .normal()
                        .iter()
                        .map(|c| Scalar::from_integer(c.clone()))
                        .collect()
                })
                .collect();
            rank(&normals) == dim
        })
        .collect()
}
