//! The set families of an instance and their counts.
//!
//! Every family has two routes: a brute-force subset scan ([`oracle`]) that
//! follows the definitions literally, and a polynomial candidate generator
//! ([`fast`]) that is only valid when z is in general position.

mod counts;
mod enumerator;
pub mod fast;
pub mod oracle;
mod table;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geometry::Hyperplane;
use crate::instance::{indices_of, mask_of, Mask};

pub use counts::{CountsReport, PointCounts};
pub use enumerator::Enumerator;
pub use fast::{
    classify_essential, facet_family, fast_maximal_avoiding, fast_minimal_containing,
    hyperplane_family, simplex_family,
};
pub use oracle::{oracle_maximal_avoiding, oracle_minimal_containing, SubsetOracle, DEFAULT_ORACLE_CAP};
pub use table::{ContainmentTable, Cut};

/// A family of subsets of S as sorted index lists, deduplicated and in
/// lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetFamily {
    members: Vec<Vec<usize>>,
}

impl SubsetFamily {
    pub fn from_masks<I: IntoIterator<Item = Mask>>(masks: I) -> SubsetFamily {
        let mut members: Vec<Vec<usize>> = masks.into_iter().map(indices_of).collect();
        members.sort();
        members.dedup();
        SubsetFamily { members }
    }

    pub fn from_lists<I: IntoIterator<Item = Vec<usize>>>(lists: I) -> SubsetFamily {
        SubsetFamily::from_masks(lists.into_iter().map(|l| mask_of(&l)))
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn masks(&self) -> impl Iterator<Item = Mask> + '_ {
        self.members.iter().map(|m| mask_of(m))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, subset: &[usize]) -> bool {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        self.members.binary_search(&sorted).is_ok()
    }

    /// Members that include point `s`.
    pub fn count_containing(&self, s: usize) -> usize {
        self.members.iter().filter(|m| m.contains(&s)).count()
    }

    /// No member is a proper subset of another.
    pub fn is_antichain(&self) -> bool {
        let masks: Vec<Mask> = self.masks().collect();
        masks
            .iter()
            .all(|&a| masks.iter().all(|&b| a == b || a & b != a))
    }
}

/// A member of H(S).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneEntry {
    pub hyperplane: Hyperplane,
    /// Indices of every point of S lying on the hyperplane.
    pub incident: Vec<usize>,
    pub essential: bool,
}

/// Deduplicated canonical hyperplanes, ordered by incident point list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HyperplaneFamily {
    members: Vec<HyperplaneEntry>,
}

impl HyperplaneFamily {
    pub(crate) fn from_map(map: BTreeMap<Hyperplane, Vec<usize>>) -> HyperplaneFamily {
        let mut members: Vec<HyperplaneEntry> = map
            .into_iter()
            .map(|(hyperplane, incident)| HyperplaneEntry {
                hyperplane,
                incident,
                essential: false,
            })
            .collect();
        members.sort_by(|a, b| {
            a.incident
                .cmp(&b.incident)
                .then_with(|| a.hyperplane.cmp(&b.hyperplane))
        });
        HyperplaneFamily { members }
    }

    pub fn members(&self) -> &[HyperplaneEntry] {
        &self.members
    }

    pub(crate) fn members_mut(&mut self) -> &mut [HyperplaneEntry] {
        &mut self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn find(&self, h: &Hyperplane) -> Option<&HyperplaneEntry> {
        self.members.iter().find(|e| &e.hyperplane == h)
    }

    pub fn essential_count(&self) -> usize {
        self.members.iter().filter(|e| e.essential).count()
    }

    pub fn count_through(&self, s: usize) -> usize {
        self.members.iter().filter(|e| e.incident.contains(&s)).count()
    }

    pub fn essential_count_through(&self, s: usize) -> usize {
        self.members
            .iter()
            .filter(|e| e.essential && e.incident.contains(&s))
            .count()
    }
}

/// Which enumeration route to use for C(S) and A(S).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Fast path when z is in general position, oracle otherwise.
    Auto { cap: usize },
    Oracle { cap: usize },
    Fast,
}

impl Default for Route {
    fn default() -> Self {
        Route::Auto {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

/// All families of one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Families {
    pub minimal_containing: SubsetFamily,
    pub maximal_avoiding: SubsetFamily,
    pub simplices: SubsetFamily,
    pub facets: SubsetFamily,
    pub hyperplanes: HyperplaneFamily,
}
