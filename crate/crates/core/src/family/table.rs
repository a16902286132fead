use itertools::Itertools;

use crate::geometry::{affine_rank, hyperplane_through, Point, Side};
use crate::instance::{indices_of, mask_of, Instance, Mask};

/// A hyperplane through z and `d - 1` points of S, recorded as the masks of
/// points strictly on either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub through: Mask,
    pub positive: Mask,
    pub negative: Mask,
}

/// Bitmask form of the interior predicate for subsets of one instance.
///
/// For `X` spanning R^d, z fails to be interior to `conv(X)` exactly when
/// some closed halfspace bounded by a hyperplane through z holds all of X.
/// The normals of such halfspaces form a pointed cone whose extreme rays
/// are cut out by `d - 1` independent constraints, so the hyperplane can be
/// taken through z and `d - 1` points of X. Precomputing every such cut
/// reduces the predicate to mask tests.
#[derive(Clone, Debug)]
pub struct ContainmentTable {
    dim: usize,
    cuts: Vec<Cut>,
    points: Vec<Point>,
}

impl ContainmentTable {
    pub fn new(inst: &Instance) -> ContainmentTable {
        let dim = inst.dim();
        let z = inst.z();
        let mut cuts: Vec<Cut> = Vec::new();
        for y in (0..inst.len()).combinations(dim - 1) {
            let mut through: Vec<&Point> = inst.select(&y);
            through.push(z);
            let Ok(h) = hyperplane_through(&through) else {
                continue;
            };
            let mut positive = 0;
            let mut negative = 0;
            for (i, p) in inst.points().iter().enumerate() {
                match h.side(p) {
                    Side::Positive => positive |= 1 << i,
                    Side::Negative => negative |= 1 << i,
                    Side::Zero => {}
                }
            }
            let duplicate = cuts.iter().any(|c| {
                (c.positive == positive && c.negative == negative)
                    || (c.positive == negative && c.negative == positive)
            });
            if !duplicate {
                cuts.push(Cut {
                    through: mask_of(&y),
                    positive,
                    negative,
                });
            }
        }
        ContainmentTable {
            dim,
            cuts,
            points: inst.points().to_vec(),
        }
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    /// Some cut has all of `mask` on one closed side.
    pub fn is_cut_off(&self, mask: Mask) -> bool {
        self.cuts
            .iter()
            .any(|c| mask & c.positive == 0 || mask & c.negative == 0)
    }

    pub fn is_avoiding(&self, mask: Mask) -> bool {
        if mask.count_ones() as usize <= self.dim || self.is_cut_off(mask) {
            return true;
        }
        let pts: Vec<&Point> = indices_of(mask).into_iter().map(|i| &self.points[i]).collect();
        affine_rank(&pts).expect("nonempty") < self.dim
    }

    pub fn is_containing(&self, mask: Mask) -> bool {
        !self.is_avoiding(mask)
    }
}
