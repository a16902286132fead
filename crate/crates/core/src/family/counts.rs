use serde::{Deserialize, Serialize};

/// Per-point counts for a point `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCounts {
    pub s: usize,
    /// |C_s|
    #[serde(rename = "C_s")]
    pub minimal_containing: usize,
    /// |Smpl_s|
    #[serde(rename = "Smpl_s")]
    pub simplices: usize,
    /// |A_s|: maximal avoiding sets whose restriction to `S \ s` is not
    /// maximal there.
    #[serde(rename = "A_s")]
    pub avoiding_lost: usize,
    /// |A^s|: maximal avoiding sets whose restriction stays maximal.
    #[serde(rename = "A^s")]
    pub avoiding_kept: usize,
    /// |A(S \ s)|, recomputed on the smaller point set.
    #[serde(rename = "A(S-s)")]
    pub avoiding_without: usize,
    /// |H_s|
    #[serde(rename = "H_s")]
    pub hyperplanes: usize,
    /// |F_s|
    #[serde(rename = "F_s")]
    pub facets: usize,
    /// |H^e_s|
    #[serde(rename = "He_s")]
    pub essential: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    #[serde(rename = "C")]
    pub minimal_containing: usize,
    #[serde(rename = "A")]
    pub maximal_avoiding: usize,
    /// |Conv(S)|, the number of distinct hulls of members of C(S).
    #[serde(rename = "Conv")]
    pub hulls: usize,
    #[serde(rename = "Smpl")]
    pub simplices: usize,
    #[serde(rename = "F")]
    pub facets: usize,
    #[serde(rename = "H")]
    pub hyperplanes: usize,
    #[serde(rename = "He")]
    pub essential: usize,
    pub per_point: Vec<PointCounts>,
}

impl CountsReport {
    pub fn point(&self, s: usize) -> &PointCounts {
        &self.per_point[s]
    }
}
