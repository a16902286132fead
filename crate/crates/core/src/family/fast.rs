//! Polynomial candidate generation, valid when z is in general position.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::{ContainmentTable, HyperplaneFamily, SubsetFamily};
use crate::error::{Error, Result};
use crate::geometry::{affine_rank, hyperplane_through, simplex_contains_interior, Side};
use crate::instance::{indices_of, mask_of, Instance, Mask};
use crate::position::general_position_z_witness;

fn require_general_position(inst: &Instance) -> Result<()> {
    match general_position_z_witness(inst) {
        Some(witness) => Err(Error::NotGeneralPosition { witness }),
        None => Ok(()),
    }
}

/// Smpl(S): the `(d + 1)`-subsets spanning a simplex with z strictly inside.
pub fn simplex_family(inst: &Instance) -> SubsetFamily {
    SubsetFamily::from_lists(
        (0..inst.len())
            .combinations(inst.dim() + 1)
            .filter(|t| simplex_contains_interior(&inst.select(t), inst.z())),
    )
}

/// C(S) as Smpl(S). Minimal containing sets are simplices when z is in
/// general position, so the two families coincide.
pub fn fast_minimal_containing(inst: &Instance) -> Result<SubsetFamily> {
    require_general_position(inst)?;
    Ok(simplex_family(inst))
}

/// A(S) from halfspace cuts through z.
///
/// Every maximal avoiding set of a containing S is `S ∩ K` for a closed
/// halfspace K whose boundary passes through z and `d - 1` of its members,
/// so the cuts in the containment table generate a superset of A(S); the
/// inclusion-maximal candidates are exactly A(S).
pub fn fast_maximal_avoiding(inst: &Instance) -> Result<SubsetFamily> {
    require_general_position(inst)?;
    let table = ContainmentTable::new(inst);
    Ok(maximal_avoiding_from_cuts(&table, inst.full_mask()))
}

pub(crate) fn maximal_avoiding_from_cuts(table: &ContainmentTable, universe: Mask) -> SubsetFamily {
    if table.is_avoiding(universe) {
        return SubsetFamily::from_masks([universe]);
    }
    let mut candidates: BTreeSet<Mask> = BTreeSet::new();
    for cut in table.cuts() {
        if cut.through & !universe != 0 {
            continue;
        }
        for side in [universe & !cut.negative, universe & !cut.positive] {
            if table.is_avoiding(side) {
                candidates.insert(side);
            }
        }
    }
    let candidates: Vec<Mask> = candidates.into_iter().collect();
    SubsetFamily::from_masks(
        candidates
            .iter()
            .copied()
            .filter(|&a| !candidates.iter().any(|&b| b != a && a & b == a)),
    )
}

/// F(S): the `d`-subsets of members of Smpl(S).
pub fn facet_family(inst: &Instance, simplices: &SubsetFamily) -> SubsetFamily {
    let d = inst.dim();
    SubsetFamily::from_lists(
        simplices
            .members()
            .iter()
            .flat_map(|s| s.iter().copied().combinations(d)),
    )
}

/// H(S): the distinct hyperplanes spanned by members of F(S). Essential
/// flags are all false until [`classify_essential`] runs.
pub fn hyperplane_family(inst: &Instance, facets: &SubsetFamily) -> Result<HyperplaneFamily> {
    let mut map = BTreeMap::new();
    for t in facets.members() {
        let h = hyperplane_through(&inst.select(t))?;
        if let Entry::Vacant(slot) = map.entry(h) {
            let incident: Vec<usize> = (0..inst.len())
                .filter(|&i| slot.key().side(inst.point(i)) == Side::Zero)
                .collect();
            slot.insert(incident);
        }
    }
    Ok(HyperplaneFamily::from_map(map))
}

/// Marks each hyperplane essential iff it is a facet hyperplane of some
/// maximal avoiding A that separates A from z: all of A on one closed side,
/// z strictly on the other, and `d` affinely independent points of A on it.
pub fn classify_essential(
    inst: &Instance,
    hyperplanes: &mut HyperplaneFamily,
    maximal_avoiding: &SubsetFamily,
) {
    let d = inst.dim();
    for entry in hyperplanes.members_mut() {
        let h = &entry.hyperplane;
        let z_side = h.side(inst.z());
        if z_side == Side::Zero {
            entry.essential = false;
            continue;
        }
        let z_half: Mask = (0..inst.len())
            .filter(|&i| h.side(inst.point(i)) == z_side)
            .fold(0, |m, i| m | (1 << i));
        let on = mask_of(&entry.incident);
        entry.essential = maximal_avoiding.masks().any(|a| {
            if a & z_half != 0 {
                return false;
            }
            let touching = a & on;
            touching.count_ones() as usize >= d
                && affine_rank(&inst.select(&indices_of(touching))).ok() == Some(d - 1)
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::oracle::{oracle_maximal_avoiding, oracle_minimal_containing};
    use crate::geometry::Hyperplane;

    fn hand() -> Instance {
        Instance::from_ints(&[&[0, 2], &[-2, -1], &[3, -1], &[1, 0]], &[0, 0]).unwrap()
    }

    fn triangle() -> Instance {
        Instance::from_ints(&[&[0, 2], &[-2, -1], &[3, -1]], &[0, 0]).unwrap()
    }

    #[test]
    fn fast_containing_examples() {
        assert_eq!(
            fast_minimal_containing(&triangle()).unwrap().members(),
            &[vec![0, 1, 2]]
        );
        assert_eq!(
            fast_minimal_containing(&hand()).unwrap().members(),
            &[vec![0, 1, 2], vec![0, 1, 3]]
        );
        let avoiding = Instance::from_ints(&[&[1, 1], &[2, 1], &[1, 3]], &[0, 0]).unwrap();
        assert!(fast_minimal_containing(&avoiding).unwrap().is_empty());
    }

    #[test]
    fn fast_avoiding_examples() {
        let seg = Instance::from_ints(&[&[-2], &[5]], &[0]).unwrap();
        assert_eq!(
            fast_maximal_avoiding(&seg).unwrap().members(),
            &[vec![0], vec![1]]
        );
        assert_eq!(
            fast_maximal_avoiding(&hand()).unwrap(),
            oracle_maximal_avoiding(&hand(), 16).unwrap()
        );
        assert_eq!(fast_maximal_avoiding(&triangle()).unwrap().len(), 3);
    }

    #[test]
    fn fast_paths_refuse_degenerate_z() {
        let inst = Instance::from_ints(&[&[1, 1], &[-1, -1], &[2, -3]], &[0, 0]).unwrap();
        assert!(matches!(
            fast_minimal_containing(&inst),
            Err(Error::NotGeneralPosition { .. })
        ));
        assert!(matches!(
            fast_maximal_avoiding(&inst),
            Err(Error::NotGeneralPosition { .. })
        ));
    }

    #[test]
    fn facet_and_hyperplane_counts() {
        let inst = triangle();
        let smpl = simplex_family(&inst);
        let f = facet_family(&inst, &smpl);
        let h = hyperplane_family(&inst, &f).unwrap();
        assert_eq!((smpl.len(), f.len(), h.len()), (1, 3, 3));

        let inst = hand();
        let smpl = simplex_family(&inst);
        let f = facet_family(&inst, &smpl);
        assert_eq!((smpl.len(), f.len()), (2, 5));
        assert!(f.contains(&[0, 1]));
    }

    #[test]
    fn triangle_hyperplanes_all_essential() {
        let inst = triangle();
        let f = facet_family(&inst, &simplex_family(&inst));
        let mut h = hyperplane_family(&inst, &f).unwrap();
        let a = oracle_maximal_avoiding(&inst, 16).unwrap();
        classify_essential(&inst, &mut h, &a);
        assert_eq!(h.essential_count(), 3);
        let bottom = Hyperplane::from_ints(&[0, 1], 1).unwrap();
        assert!(h.find(&bottom).unwrap().essential);
    }

    #[test]
    fn hand_instance_has_non_essential_hyperplane() {
        let inst = hand();
        let f = facet_family(&inst, &simplex_family(&inst));
        let mut h = hyperplane_family(&inst, &f).unwrap();
        let a = oracle_maximal_avoiding(&inst, 16).unwrap();
        classify_essential(&inst, &mut h, &a);
        assert!(h.essential_count() < h.len());
        assert_eq!(
            oracle_minimal_containing(&inst, 16).unwrap(),
            simplex_family(&inst)
        );
    }

    #[test]
    fn avoiding_instance_has_no_hyperplanes() {
        let inst = Instance::from_ints(&[&[1, 1], &[2, 1], &[1, 3]], &[0, 0]).unwrap();
        let f = facet_family(&inst, &simplex_family(&inst));
        let h = hyperplane_family(&inst, &f).unwrap();
        assert!(h.is_empty());
    }
}
