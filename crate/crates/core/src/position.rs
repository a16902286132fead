//! The two general-position hypotheses, with violating witnesses.
//!
//! Witnesses are the first violating subset in (size, lexicographic) order.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::geometry::{affine_rank, in_aff_span};
use crate::instance::{indices_of, Instance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionReport {
    pub set_in_general_position: bool,
    pub z_in_general_position: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_witness: Option<Vec<usize>>,
}

impl PositionReport {
    pub fn analyze(inst: &Instance) -> PositionReport {
        let set_witness = general_position_set_witness(inst);
        let z_witness = general_position_z_witness(inst);
        PositionReport {
            set_in_general_position: set_witness.is_none(),
            z_in_general_position: z_witness.is_none(),
            set_witness,
            z_witness,
        }
    }
}

fn rank_of(inst: &Instance, subset: &[usize]) -> usize {
    affine_rank(&inst.select(subset)).expect("nonempty subset of one dimension")
}

/// First `X ⊆ S` with `|X| ≤ d + 1` that is affinely dependent.
pub fn general_position_set_witness(inst: &Instance) -> Option<Vec<usize>> {
    let max = (inst.dim() + 1).min(inst.len());
    (2..=max).find_map(|k| {
        (0..inst.len())
            .combinations(k)
            .find(|x| rank_of(inst, x) != k - 1)
    })
}

pub fn is_general_position_set(inst: &Instance) -> bool {
    general_position_set_witness(inst).is_none()
}

/// First affinely independent `X ⊆ S` with `|X| ≤ d` whose span contains z.
///
/// Checking independent sets of size at most `d` suffices: if z lies in
/// `R(X)` with `dim R(X) < d`, it lies in the span of an affine basis of X,
/// which has at most `d` points.
pub fn general_position_z_witness(inst: &Instance) -> Option<Vec<usize>> {
    let max = inst.dim().min(inst.len());
    (1..=max).find_map(|k| {
        (0..inst.len()).combinations(k).find(|x| {
            rank_of(inst, x) == k - 1 && in_aff_span(&inst.select(x), inst.z())
        })
    })
}

pub fn is_general_position_z(inst: &Instance) -> bool {
    general_position_z_witness(inst).is_none()
}

/// The general-position-of-z condition checked over every subset of S.
/// Exponential; only for cross-checking the reduced scan on small inputs.
pub fn general_position_z_exhaustive(inst: &Instance) -> Option<Vec<usize>> {
    let n = inst.len();
    assert!(n <= 20, "exhaustive scan is for small instances");
    let mut subsets: Vec<Vec<usize>> = (1u64..1 << n).map(indices_of).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets.into_iter().find(|x| {
        rank_of(inst, x) < inst.dim() && in_aff_span(&inst.select(x), inst.z())
    })
}

/// Checks that `witness` genuinely violates the stated condition.
pub fn is_valid_set_witness(inst: &Instance, witness: &[usize]) -> bool {
    !witness.is_empty()
        && witness.len() <= inst.dim() + 1
        && rank_of(inst, witness) < witness.len() - 1
}

pub fn is_valid_z_witness(inst: &Instance, witness: &[usize]) -> bool {
    !witness.is_empty()
        && rank_of(inst, witness) < inst.dim()
        && in_aff_span(&inst.select(witness), inst.z())
}
