//! Evaluates every counting statement on one instance.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::family::{CountsReport, Enumerator, Families, Route};
use crate::instance::Instance;
use crate::position::PositionReport;

/// One counting statement evaluated on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// The statement's hypotheses hold for this instance.
    pub applicable: bool,
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
}

impl Check {
    fn at_most(applicable: bool, lhs: i64, rhs: i64) -> Check {
        Check {
            applicable,
            holds: lhs <= rhs,
            lhs,
            rhs,
        }
    }

    fn equal(applicable: bool, lhs: i64, rhs: i64) -> Check {
        Check {
            applicable,
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }

    pub fn failed(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Each field compares `lhs = |A(S)|` against a bound in `|C(S)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdicts {
    /// `|A| <= 2d|C|` for containing S, no position hypothesis. Posed as a
    /// question; known to fail for some degenerate inputs when `d >= 4`.
    pub bg_question: Check,
    /// `|A| <= d|C| + 1`, z in general position.
    pub main_bound: Check,
    /// `|A| <= (d + 1)|C|`, S containing, z in general position.
    pub weak_bound: Check,
    /// `|A| = d|C| + 1` when S is avoiding or a containing simplex.
    pub simplex_equality: Check,
    /// `|A| = d|C| - d + 1` for containing S with `|S| = d + 2`.
    pub d_plus_two_equality: Check,
    /// `|A| <= d|C| - d` for containing S with `|S| >= d + 3`.
    pub large_bound: Check,
    /// `|A| <= d|C| - |S| + 3` for containing S with `|S| >= d + 2`.
    pub strengthened_bound: Check,
    /// `|A| <= 3|C| + 1` for containing S in the plane.
    pub plane_bound: Check,
}

impl TheoremVerdicts {
    /// Evaluates every statement from raw counts and hypotheses.
    pub fn evaluate(
        dim: usize,
        n: usize,
        containing: bool,
        z_general: bool,
        minimal_containing: usize,
        maximal_avoiding: usize,
    ) -> TheoremVerdicts {
        let d = dim as i64;
        let n = n as i64;
        let c = minimal_containing as i64;
        let a = maximal_avoiding as i64;
        let gp_containing = z_general && containing;
        TheoremVerdicts {
            bg_question: Check::at_most(containing, a, 2 * d * c),
            main_bound: Check::at_most(z_general, a, d * c + 1),
            weak_bound: Check::at_most(gp_containing, a, (d + 1) * c),
            simplex_equality: Check::equal(
                z_general && (!containing || n == d + 1),
                a,
                d * c + 1,
            ),
            d_plus_two_equality: Check::equal(gp_containing && n == d + 2, a, d * c - d + 1),
            large_bound: Check::at_most(gp_containing && n >= d + 3, a, d * c - d),
            strengthened_bound: Check::at_most(gp_containing && n >= d + 2, a, d * c - n + 3),
            plane_bound: Check::at_most(containing && dim == 2, a, 3 * c + 1),
        }
    }

    pub fn all(&self) -> [(&'static str, &Check); 8] {
        [
            ("bg_question", &self.bg_question),
            ("main_bound", &self.main_bound),
            ("weak_bound", &self.weak_bound),
            ("simplex_equality", &self.simplex_equality),
            ("d_plus_two_equality", &self.d_plus_two_equality),
            ("large_bound", &self.large_bound),
            ("strengthened_bound", &self.strengthened_bound),
            ("plane_bound", &self.plane_bound),
        ]
    }

    /// Names of applicable statements that fail.
    pub fn failures(&self) -> Vec<&'static str> {
        self.all()
            .into_iter()
            .filter(|(_, c)| c.failed())
            .map(|(name, _)| name)
            .collect()
    }
}

/// Everything computed for one instance.
#[derive(Clone, Debug)]
pub struct Report {
    pub instance: Instance,
    pub position: PositionReport,
    pub containing: bool,
    pub fast_path: bool,
    pub families: Families,
    pub counts: CountsReport,
    pub verdicts: TheoremVerdicts,
}

impl Report {
    /// Failed applicable statements on an instance where z is in general
    /// position. The bound statements are theorems there, so any entry is a
    /// counterexample to a proved result (or a bug). The open question is
    /// excluded.
    pub fn falsifications(&self) -> Vec<&'static str> {
        if !self.position.z_in_general_position {
            return Vec::new();
        }
        self.verdicts
            .failures()
            .into_iter()
            .filter(|&name| name != "bg_question")
            .collect()
    }
}

pub fn verify(inst: &Instance, route: Route) -> Result<Report> {
    let position = PositionReport::analyze(inst);
    let enumerator = Enumerator::new(inst, route)?;
    let families = enumerator.families()?;
    let counts = enumerator.counts(&families);
    let containing = enumerator.table().is_containing(inst.full_mask());
    let verdicts = TheoremVerdicts::evaluate(
        inst.dim(),
        inst.len(),
        containing,
        position.z_in_general_position,
        counts.minimal_containing,
        counts.maximal_avoiding,
    );
    Ok(Report {
        instance: inst.clone(),
        position,
        containing,
        fast_path: enumerator.uses_fast_path(),
        families,
        counts,
        verdicts,
    })
}
