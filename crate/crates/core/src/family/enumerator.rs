use super::fast::maximal_avoiding_from_cuts;
use super::{
    classify_essential, facet_family, hyperplane_family, simplex_family, ContainmentTable,
    CountsReport, Families, PointCounts, Route, SubsetFamily, SubsetOracle,
};
use crate::error::{Error, Result};
use crate::instance::{indices_of, Instance, Mask};
use crate::position::general_position_z_witness;

/// Computes the families and counts of one instance along a chosen route.
#[derive(Debug)]
pub struct Enumerator<'a> {
    inst: &'a Instance,
    table: ContainmentTable,
    oracle: Option<SubsetOracle>,
}

impl<'a> Enumerator<'a> {
    pub fn new(inst: &'a Instance, route: Route) -> Result<Enumerator<'a>> {
        let table = ContainmentTable::new(inst);
        let witness = general_position_z_witness(inst);
        let cap = match (route, witness) {
            (Route::Fast, Some(witness)) => return Err(Error::NotGeneralPosition { witness }),
            (Route::Fast, None) | (Route::Auto { .. }, None) => None,
            (Route::Auto { cap }, Some(_)) | (Route::Oracle { cap }, _) => Some(cap),
        };
        let oracle = match cap {
            Some(cap) => Some(SubsetOracle::with_predicate(inst.len(), cap, |m| {
                table.is_avoiding(m)
            })?),
            None => None,
        };
        Ok(Enumerator {
            inst,
            table,
            oracle,
        })
    }

    pub fn instance(&self) -> &Instance {
        self.inst
    }

    pub fn uses_fast_path(&self) -> bool {
        self.oracle.is_none()
    }

    pub fn table(&self) -> &ContainmentTable {
        &self.table
    }

    pub fn minimal_containing(&self) -> SubsetFamily {
        match &self.oracle {
            Some(o) => o.minimal_containing(),
            None => simplex_family(self.inst),
        }
    }

    /// A(S') for `S'` the points selected by `universe`.
    pub fn maximal_avoiding_in(&self, universe: Mask) -> SubsetFamily {
        match &self.oracle {
            Some(o) => o.maximal_avoiding_in(universe),
            None => maximal_avoiding_from_cuts(&self.table, universe),
        }
    }

    pub fn maximal_avoiding(&self) -> SubsetFamily {
        self.maximal_avoiding_in(self.inst.full_mask())
    }

    pub fn families(&self) -> Result<Families> {
        let simplices = simplex_family(self.inst);
        let minimal_containing = match &self.oracle {
            Some(o) => o.minimal_containing(),
            None => simplices.clone(),
        };
        let maximal_avoiding = self.maximal_avoiding();
        let facets = facet_family(self.inst, &simplices);
        let mut hyperplanes = hyperplane_family(self.inst, &facets)?;
        classify_essential(self.inst, &mut hyperplanes, &maximal_avoiding);
        Ok(Families {
            minimal_containing,
            maximal_avoiding,
            simplices,
            facets,
            hyperplanes,
        })
    }

    /// `A \ s` is maximal avoiding in `S \ s`, checked directly against
    /// the containment predicate.
    fn survives_deletion(&self, a: Mask, s: usize) -> bool {
        let rest = self.inst.full_mask() & !(1 << s);
        let b = a & !(1 << s);
        self.table.is_avoiding(b)
            && indices_of(rest & !b)
                .into_iter()
                .all(|t| self.table.is_containing(b | (1 << t)))
    }

    pub fn counts(&self, families: &Families) -> CountsReport {
        let n = self.inst.len();
        let per_point = (0..n)
            .map(|s| {
                let upper = families
                    .maximal_avoiding
                    .masks()
                    .filter(|&a| self.survives_deletion(a, s))
                    .count();
                let without = self
                    .maximal_avoiding_in(self.inst.full_mask() & !(1 << s))
                    .len();
                PointCounts {
                    s,
                    minimal_containing: families.minimal_containing.count_containing(s),
                    simplices: families.simplices.count_containing(s),
                    avoiding_lost: families.maximal_avoiding.len() - upper,
                    avoiding_kept: upper,
                    avoiding_without: without,
                    hyperplanes: families.hyperplanes.count_through(s),
                    facets: families.facets.count_containing(s),
                    essential: families.hyperplanes.essential_count_through(s),
                }
            })
            .collect();
        CountsReport {
            minimal_containing: families.minimal_containing.len(),
            maximal_avoiding: families.maximal_avoiding.len(),
            hulls: families.minimal_containing.len(),
            simplices: families.simplices.len(),
            facets: families.facets.len(),
            hyperplanes: families.hyperplanes.len(),
            essential: families.hyperplanes.essential_count(),
            per_point,
        }
    }
}
