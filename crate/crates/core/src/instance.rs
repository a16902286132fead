use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{in_interior, Point};

/// Subset of point indices as a bit mask; bit `i` set means point `i` is in.
pub type Mask = u64;

/// Hard cap on `|S|` imposed by the mask representation.
pub const MAX_POINTS: usize = 64;

pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn indices_of(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub fn full_mask(n: usize) -> Mask {
    if n == 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// A finite point set `S ⊂ R^d` with a query point `z ∉ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    dim: usize,
    points: Vec<Point>,
    z: Point,
}

impl Instance {
    pub fn new(dim: usize, points: Vec<Point>, z: Point) -> Result<Instance> {
        if dim == 0 {
            return Err(Error::InvalidInstance("dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInstance("point set is empty".into()));
        }
        if points.len() > MAX_POINTS {
            return Err(Error::InvalidInstance(format!(
                "{} points exceeds the limit of {MAX_POINTS}",
                points.len()
            )));
        }
        for p in points.iter().chain(std::iter::once(&z)) {
            if p.dim() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        let mut seen = HashSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::InvalidInstance(format!("point {i} is a duplicate")));
            }
        }
        if let Some(i) = points.iter().position(|p| *p == z) {
            return Err(Error::InvalidInstance(format!("z coincides with point {i}")));
        }
        Ok(Instance { dim, points, z })
    }

    pub fn from_ints(points: &[&[i64]], z: &[i64]) -> Result<Instance> {
        Instance::new(
            z.len(),
            points.iter().map(|c| Point::from_ints(c)).collect(),
            Point::from_ints(z),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn z(&self) -> &Point {
        &self.z
    }

    pub fn full_mask(&self) -> Mask {
        full_mask(self.points.len())
    }

    pub fn select(&self, indices: &[usize]) -> Vec<&Point> {
        indices.iter().map(|&i| &self.points[i]).collect()
    }

    pub fn select_mask(&self, mask: Mask) -> Vec<&Point> {
        self.select(&indices_of(mask))
    }

    pub fn check_indices(&self, indices: &[usize]) -> Result<()> {
        match indices.iter().find(|&&i| i >= self.points.len()) {
            Some(i) => Err(Error::InvalidInstance(format!(
                "index {i} out of range for {} points",
                self.points.len()
            ))),
            None => Ok(()),
        }
    }

    /// z is not in the interior of `conv(X)`. Definitional (hull-facet)
    /// predicate; downward closed in `X`.
    pub fn is_avoiding(&self, subset: &[usize]) -> bool {
        !in_interior(&self.select(subset), &self.z)
    }

    pub fn is_containing(&self, subset: &[usize]) -> bool {
        !self.is_avoiding(subset)
    }

    /// The instance on the points selected by `mask`, in index order.
    pub fn restrict(&self, mask: Mask) -> Result<Instance> {
        let points = indices_of(mask)
            .into_iter()
            .map(|i| self.points[i].clone())
            .collect();
        Instance::new(self.dim, points, self.z.clone())
    }
}
