//! Brute-force subset scans that follow the definitions literally.

use super::{ContainmentTable, SubsetFamily};
use crate::error::{Error, Result};
use crate::instance::{full_mask, indices_of, Instance, Mask};

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Containment status of every subset of S.
///
/// Containing is upward closed, so a subset with a containing one-point
/// deletion is containing without consulting the predicate.
#[derive(Clone, Debug)]
pub struct SubsetOracle {
    n: usize,
    containing: Vec<bool>,
}

impl SubsetOracle {
    pub fn new(inst: &Instance, cap: usize) -> Result<SubsetOracle> {
        let table = ContainmentTable::new(inst);
        SubsetOracle::with_predicate(inst.len(), cap, |m| table.is_avoiding(m))
    }

    /// Uses the hull-facet definition for every subset. Slow; for tests.
    pub fn definitional(inst: &Instance, cap: usize) -> Result<SubsetOracle> {
        SubsetOracle::with_predicate(inst.len(), cap, |m| inst.is_avoiding(&indices_of(m)))
    }

    pub fn with_predicate<F>(n: usize, cap: usize, is_avoiding: F) -> Result<SubsetOracle>
    where
        F: Fn(Mask) -> bool,
    {
        if n > cap || n >= 32 {
            return Err(Error::OracleCap { n, cap });
        }
        let mut containing = vec![false; 1 << n];
        for mask in 0..(1usize << n) {
            let mut bits = mask;
            let mut inherited = false;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                if containing[mask ^ low] {
                    inherited = true;
                    break;
                }
                bits ^= low;
            }
            containing[mask] = inherited || !is_avoiding(mask as Mask);
        }
        Ok(SubsetOracle { n, containing })
    }

    pub fn is_containing(&self, mask: Mask) -> bool {
        self.containing[mask as usize]
    }

    pub fn is_avoiding(&self, mask: Mask) -> bool {
        !self.is_containing(mask)
    }

    fn submasks(universe: Mask) -> impl Iterator<Item = Mask> {
        let mut next = Some(universe);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & universe) };
            Some(cur)
        })
    }

    /// C restricted to subsets of `universe`: containing sets none of whose
    /// one-point deletions contain.
    pub fn minimal_containing_in(&self, universe: Mask) -> SubsetFamily {
        SubsetFamily::from_masks(Self::submasks(universe).filter(|&m| {
            self.is_containing(m)
                && indices_of(m)
                    .into_iter()
                    .all(|i| self.is_avoiding(m & !(1 << i)))
        }))
    }

    /// A restricted to subsets of `universe`: avoiding sets that become
    /// containing on adding any further point of `universe`.
    pub fn maximal_avoiding_in(&self, universe: Mask) -> SubsetFamily {
        SubsetFamily::from_masks(Self::submasks(universe).filter(|&m| {
            self.is_avoiding(m)
                && indices_of(universe & !m)
                    .into_iter()
                    .all(|i| self.is_containing(m | (1 << i)))
        }))
    }

    pub fn minimal_containing(&self) -> SubsetFamily {
        self.minimal_containing_in(full_mask(self.n))
    }

    pub fn maximal_avoiding(&self) -> SubsetFamily {
        self.maximal_avoiding_in(full_mask(self.n))
    }
}

pub fn oracle_minimal_containing(inst: &Instance, cap: usize) -> Result<SubsetFamily> {
    Ok(SubsetOracle::new(inst, cap)?.minimal_containing())
}

pub fn oracle_maximal_avoiding(inst: &Instance, cap: usize) -> Result<SubsetFamily> {
    Ok(SubsetOracle::new(inst, cap)?.maximal_avoiding())
}
