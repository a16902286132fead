//! Certificate-producing constructions.
//!
//! Each construction works in exact arithmetic and re-checks its output
//! with the predicates before returning; a failed re-check is reported as
//! [`Error::Internal`].
//!
//! Recursion into a facet re-expresses the facet's points in an affine
//! frame of the facet (coordinates relative to an affine basis), so every
//! level runs the same full-dimensional routine without projection.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::ContainmentTable;
use crate::geometry::{
    affine_coordinates, affine_rank, hull_facets, hull_vertices, hyperplane_through, in_interior,
    simplex_contains_interior, Facet, Hyperplane, Point, Scalar, Side,
};
use crate::instance::{indices_of, mask_of, Instance};
use crate::position::general_position_z_witness;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexCertificate {
    pub vertices: Vec<usize>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetCertificate {
    /// `d` points of A spanning the facet hyperplane.
    pub facet: Vec<usize>,
    pub s: usize,
    pub hyperplane: Hyperplane,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodVertexCertificate {
    pub u: usize,
    pub simplex: Vec<usize>,
    pub hyperplane: Hyperplane,
}

/// Points tagged with their index in S.
type Tagged = Vec<(usize, Point)>;

/// Greedy affine basis: the first point plus every point that raises the
/// affine rank.
fn affine_basis<'p>(points: &[&'p Point]) -> Vec<&'p Point> {
    let mut basis: Vec<&Point> = Vec::new();
    for &p in points {
        basis.push(p);
        if affine_rank(&basis).expect("nonempty") + 1 != basis.len() {
            basis.pop();
        }
    }
    basis
}

/// Re-expresses `points` and `query` in an affine frame of the points' span.
fn to_frame(points: &[(usize, &Point)], query: &Point) -> Result<(Tagged, Point)> {
    let refs: Vec<&Point> = points.iter().map(|(_, p)| *p).collect();
    let basis = affine_basis(&refs);
    let local = points
        .iter()
        .map(|(i, p)| {
            affine_coordinates(&basis, p)
                .map(|c| (*i, Point::new(c)))
                .ok_or_else(|| Error::Internal("point off its own span".into()))
        })
        .collect::<Result<Tagged>>()?;
    let q = affine_coordinates(&basis, query).ok_or_else(|| {
        Error::Precondition("query point is off the affine span of the face".into())
    })?;
    Ok((local, Point::new(q)))
}

/// Exit of the ray from `from` through `through` out of a polytope given by
/// its facets: the largest `λ` with `from + λ(through - from)` inside.
/// Returns `λ` and every facet attaining it.
fn ray_exit<'f>(facets: &'f [Facet], from: &Point, through: &Point) -> Option<(Scalar, Vec<&'f Facet>)> {
    let mut best: Option<(Scalar, Vec<&Facet>)> = None;
    for f in facets {
        let a = f.inward_value(from);
        let b = f.inward_value(through);
        let slope = &b - &a;
        if !slope.is_negative() {
            continue;
        }
        let lambda = -a / slope;
        match &mut best {
            Some((l, fs)) if *l == lambda => fs.push(f),
            Some((l, _)) if *l < lambda => {}
            _ => best = Some((lambda, vec![f])),
        }
    }
    best
}

/// Entry of the ray from `from` through `through` into a polytope: the
/// smallest `λ >= 0` with the ray point inside, if the ray meets it.
fn ray_entry<'f>(facets: &'f [Facet], from: &Point, through: &Point) -> Option<(Scalar, Vec<&'f Facet>)> {
    let mut lower = Scalar::zero();
    let mut upper: Option<Scalar> = None;
    let mut attaining: Vec<&Facet> = Vec::new();
    for f in facets {
        let a = f.inward_value(from);
        let slope = f.inward_value(through) - &a;
        if slope.is_zero() {
            if a.is_negative() {
                return None;
            }
            continue;
        }
        let bound = -&a / &slope;
        if slope.is_positive() {
            if bound > lower {
                lower = bound;
                attaining = vec![f];
            } else if bound == lower && !attaining.is_empty() {
                attaining.push(f);
            }
        } else if upper.as_ref().is_none_or(|u| bound < *u) {
            upper = Some(bound);
        }
    }
    if upper.is_some_and(|u| u < lower) {
        return None;
    }
    Some((lower, attaining))
}

/// Witness for an exit point landing on a lower-dimensional face: the
/// shared points of the tied facets together with every apex chosen so far.
fn tie_witness(tied: &[&Facet], local: &Tagged, apexes: &[usize]) -> Error {
    let mut shared: Vec<usize> = tied[0].points.clone();
    for f in &tied[1..] {
        shared.retain(|i| f.points.contains(i));
    }
    let mut witness: Vec<usize> = shared.into_iter().map(|i| local[i].0).collect();
    witness.extend_from_slice(apexes);
    witness.sort_unstable();
    witness.dedup();
    Error::NotGeneralPosition { witness }
}

/// Recursive ray shooting in a full-dimensional frame: pick the lowest
/// vertex p, follow the ray from p through q to its exit point t on a facet
/// F, find a simplex of F around t, and add p.
fn simplex_in_frame(points: &Tagged, q: &Point, apexes: &mut Vec<usize>) -> Result<Vec<usize>> {
    let k = q.dim();
    if k == 0 {
        return match points.as_slice() {
            [(i, _)] => Ok(vec![*i]),
            _ => Err(Error::Internal("zero-dimensional face with several points".into())),
        };
    }
    let refs: Vec<&Point> = points.iter().map(|(_, p)| p).collect();
    let facets = hull_facets(&refs)?;
    if !facets.iter().all(|f| f.strictly_inside(q)) {
        let mut witness: Vec<usize> = points.iter().map(|(i, _)| *i).collect();
        witness.extend_from_slice(apexes);
        witness.sort_unstable();
        return Err(Error::Precondition(format!(
            "query point is not interior to the hull of {witness:?}"
        )));
    }
    let vertices = hull_vertices(&refs, &facets);
    let apex = *vertices
        .iter()
        .min_by_key(|&&v| points[v].0)
        .expect("a polytope has vertices");
    let p = &points[apex].1;
    let (lambda, tied) = ray_exit(&facets, p, q)
        .ok_or_else(|| Error::Internal("ray through an interior point never exits".into()))?;
    if tied.len() > 1 {
        apexes.push(points[apex].0);
        return Err(tie_witness(&tied, points, apexes));
    }
    let exit = p.lerp(q, &lambda);
    let face: Vec<(usize, &Point)> = tied[0].points.iter().map(|&i| (points[i].0, &points[i].1)).collect();
    let (local, t) = to_frame(&face, &exit)?;
    apexes.push(points[apex].0);
    let mut simplex = simplex_in_frame(&local, &t, apexes)?;
    apexes.pop();
    simplex.push(points[apex].0);
    simplex.sort_unstable();
    Ok(simplex)
}

fn require_general_position(inst: &Instance) -> Result<()> {
    match general_position_z_witness(inst) {
        Some(witness) => Err(Error::NotGeneralPosition { witness }),
        None => Ok(()),
    }
}

/// A simplex on points of `subset` with z strictly inside, found by
/// recursive ray shooting.
pub fn find_containing_simplex(inst: &Instance, subset: &[usize]) -> Result<SimplexCertificate> {
    inst.check_indices(subset)?;
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if !in_interior(&inst.select(&subset), inst.z()) {
        return Err(Error::Precondition(
            "z is not interior to the hull of the given points".into(),
        ));
    }
    let sub = inst.restrict(mask_of(&subset))?;
    if let Some(w) = general_position_z_witness(&sub) {
        return Err(Error::NotGeneralPosition {
            witness: w.into_iter().map(|i| subset[i]).collect(),
        });
    }
    let tagged: Tagged = subset.iter().map(|&i| (i, inst.point(i).clone())).collect();
    let vertices = simplex_in_frame(&tagged, inst.z(), &mut Vec::new())?;
    if !simplex_contains_interior(&inst.select(&vertices), inst.z()) {
        return Err(Error::Internal(format!(
            "simplex {vertices:?} does not contain z in its interior"
        )));
    }
    Ok(SimplexCertificate {
        vertices,
        verified: true,
    })
}

/// A maximal avoiding set, checked directly against the predicate.
fn is_maximal_avoiding(table: &ContainmentTable, inst: &Instance, a: &[usize]) -> bool {
    let m = mask_of(a);
    table.is_avoiding(m)
        && indices_of(inst.full_mask() & !m)
            .into_iter()
            .all(|t| table.is_containing(m | (1 << t)))
}

/// For a maximal avoiding A and a point s outside it: `d` points T of A on
/// a facet of `conv(A)` such that `T ∪ {s}` is a simplex around z and
/// `R(T)` separates A from z.
///
/// The ray from s through z first meets `conv(A)` at a point t beyond z,
/// in the relative interior of a facet F; T is a simplex of F around t.
pub fn facet_certificate(inst: &Instance, a: &[usize], s: usize) -> Result<FacetCertificate> {
    FacetCertifier::new(inst)?.certify(a, s)
}

/// [`facet_certificate`] with the per-instance checks done once, for
/// certifying many (A, s) pairs of the same instance.
pub struct FacetCertifier<'a> {
    inst: &'a Instance,
    table: ContainmentTable,
}

impl<'a> FacetCertifier<'a> {
    /// Fails unless z is in general position and S is z-containing.
    pub fn new(inst: &'a Instance) -> Result<FacetCertifier<'a>> {
        require_general_position(inst)?;
        let table = ContainmentTable::new(inst);
        if table.is_avoiding(inst.full_mask()) {
            return Err(Error::Precondition("S is not z-containing".into()));
        }
        Ok(FacetCertifier { inst, table })
    }

    pub fn certify(&self, a: &[usize], s: usize) -> Result<FacetCertificate> {
        certify_facet(self.inst, &self.table, a, s)
    }
}

fn certify_facet(inst: &Instance, table: &ContainmentTable, a: &[usize], s: usize) -> Result<FacetCertificate> {
    inst.check_indices(a)?;
    inst.check_indices(&[s])?;
    let mut a = a.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.contains(&s) {
        return Err(Error::Precondition(format!("s = {s} belongs to A")));
    }
    if !is_maximal_avoiding(table, inst, &a) {
        return Err(Error::Precondition(format!("{a:?} is not maximal avoiding")));
    }
    let d = inst.dim();
    let z = inst.z();
    let sp = inst.point(s);
    let a_points = inst.select(&a);
    let rank = affine_rank(&a_points)?;

    let (exit, face): (Point, Vec<usize>) = if rank == d {
        let facets = hull_facets(&a_points)?;
        let (lambda, tied) = ray_entry(&facets, sp, z)
            .ok_or_else(|| Error::Internal("ray from s misses conv(A)".into()))?;
        if tied.len() != 1 {
            let local: Tagged = a.iter().map(|&i| (i, inst.point(i).clone())).collect();
            if tied.is_empty() {
                return Err(Error::Internal("ray starts inside conv(A)".into()));
            }
            return Err(tie_witness(&tied, &local, &[s]));
        }
        if lambda <= Scalar::from_integer(1.into()) {
            return Err(Error::Internal("conv(A) meets the segment from s to z".into()));
        }
        (
            sp.lerp(z, &lambda),
            tied[0].points.iter().map(|&i| a[i]).collect(),
        )
    } else if rank + 1 == d {
        let basis = affine_basis(&a_points);
        let h = hyperplane_through(&basis)?;
        let hs = h.eval(sp);
        let hz = h.eval(z);
        if hs == hz {
            return Err(Error::NotGeneralPosition {
                witness: a.iter().copied().chain([s]).collect(),
            });
        }
        let lambda = &hs / (&hs - &hz);
        if lambda <= Scalar::from_integer(1.into()) {
            return Err(Error::Internal("R(A) meets the segment from s to z".into()));
        }
        (sp.lerp(z, &lambda), a.clone())
    } else {
        return Err(Error::Precondition(format!(
            "A spans only dimension {rank}; A ∪ s cannot contain z"
        )));
    };

    let face_points: Vec<(usize, &Point)> = face.iter().map(|&i| (i, inst.point(i))).collect();
    let (local, t) = to_frame(&face_points, &exit)?;
    let facet = simplex_in_frame(&local, &t, &mut vec![s])?;
    let hyperplane = hyperplane_through(&inst.select(&facet))?;

    let mut simplex = facet.clone();
    simplex.push(s);
    let z_side = hyperplane.side(z);
    let separated = z_side != Side::Zero
        && a.iter().all(|&i| hyperplane.side(inst.point(i)) != z_side);
    if facet.len() != d
        || !facet.iter().all(|i| a.contains(i))
        || !simplex_contains_interior(&inst.select(&simplex), z)
        || !separated
    {
        return Err(Error::Internal(format!(
            "facet certificate {facet:?} for s = {s} failed re-verification"
        )));
    }
    Ok(FacetCertificate {
        facet,
        s,
        hyperplane,
    })
}

fn facet_vertices(f: &Facet, vertices: &[usize]) -> Vec<usize> {
    f.points.iter().copied().filter(|i| vertices.contains(i)).collect()
}

/// A point u whose removal keeps S containing, lying on a hyperplane that is
/// simultaneously a facet hyperplane of `conv(S)` and of a simplex Δ on hull
/// vertices with z strictly inside.
pub fn good_vertex(inst: &Instance) -> Result<GoodVertexCertificate> {
    let d = inst.dim();
    if inst.len() < d + 2 {
        return Err(Error::Precondition(format!(
            "need at least d + 2 = {} points, got {}",
            d + 2,
            inst.len()
        )));
    }
    require_general_position(inst)?;
    let all: Vec<&Point> = inst.points().iter().collect();
    if !in_interior(&all, inst.z()) {
        return Err(Error::Precondition("S is not z-containing".into()));
    }
    let facets = hull_facets(&all)?;
    let vertices = hull_vertices(&all, &facets);
    let z = inst.z();

    let (u, simplex, hyperplane) = if vertices.len() == d + 1 {
        let v = (0..inst.len())
            .find(|i| !vertices.contains(i))
            .expect("|S| > d + 1");
        let vp = inst.point(v);
        if facets.iter().all(|f| f.strictly_inside(vp)) {
            // v interior: some facet F has z inside conv(F ∪ v); the vertex
            // opposite F is u, and H is a hull facet through u.
            let facet = facets
                .iter()
                .map(|f| facet_vertices(f, &vertices))
                .find(|fv| {
                    let mut t = inst.select(fv);
                    t.push(vp);
                    simplex_contains_interior(&t, z)
                })
                .ok_or_else(|| Error::Internal("no facet cone around z".into()))?;
            let u = *vertices
                .iter()
                .find(|i| !facet.contains(i))
                .expect("simplex has a vertex off each facet");
            let h = facets
                .iter()
                .find(|f| f.points.contains(&u))
                .expect("every vertex lies on a facet");
            (u, vertices.clone(), h.hyperplane.clone())
        } else {
            let h = facets
                .iter()
                .find(|f| f.points.contains(&v))
                .ok_or_else(|| Error::Internal("boundary point on no facet".into()))?;
            (v, vertices.clone(), h.hyperplane.clone())
        }
    } else {
        let inner = find_containing_simplex(inst, &vertices)?.vertices;
        let hull_planes: Vec<&Hyperplane> = facets.iter().map(|f| &f.hyperplane).collect();
        // First facet F_z of Δ_z (lexicographically) whose hyperplane is not
        // a hull facet hyperplane; v is the vertex it omits.
        let (fz, v) = inner
            .iter()
            .rev()
            .map(|&omit| {
                let face: Vec<usize> = inner.iter().copied().filter(|&i| i != omit).collect();
                (face, omit)
            })
            .find(|(face, _)| {
                hyperplane_through(&inst.select(face))
                    .map(|h| !hull_planes.contains(&&h))
                    .unwrap_or(false)
            })
            .ok_or_else(|| Error::Internal("simplex on hull vertices equals the hull".into()))?;
        let vp = inst.point(v);
        let (lambda, tied) = ray_exit(&facets, vp, z)
            .ok_or_else(|| Error::Internal("ray from v never exits conv(S)".into()))?;
        if tied.len() > 1 {
            let local: Tagged = inst.points().iter().cloned().enumerate().collect();
            return Err(tie_witness(&tied, &local, &[v]));
        }
        let exit = vp.lerp(z, &lambda);
        let face = facet_vertices(tied[0], &vertices);
        let face_points: Vec<(usize, &Point)> = face.iter().map(|&i| (i, inst.point(i))).collect();
        let (local, t) = to_frame(&face_points, &exit)?;
        let mut simplex = simplex_in_frame(&local, &t, &mut vec![v])?;
        simplex.push(v);
        simplex.sort_unstable();
        let u = face
            .iter()
            .copied()
            .find(|i| !fz.contains(i))
            .ok_or_else(|| Error::Internal("facet F has no vertex outside F_z".into()))?;
        (u, simplex, tied[0].hyperplane.clone())
    };

    let cert = GoodVertexCertificate {
        u,
        simplex,
        hyperplane,
    };
    verify_good_vertex(inst, &cert)?;
    Ok(cert)
}

/// Re-checks every invariant of a good-vertex certificate.
pub fn verify_good_vertex(inst: &Instance, cert: &GoodVertexCertificate) -> Result<()> {
    let d = inst.dim();
    let z = inst.z();
    let h = &cert.hyperplane;
    let fail = |what: &str| Err(Error::Internal(format!("good vertex {}: {what}", cert.u)));

    if cert.simplex.len() != d + 1 || !simplex_contains_interior(&inst.select(&cert.simplex), z) {
        return fail("Δ does not contain z in its interior");
    }
    let on_delta: Vec<usize> = cert
        .simplex
        .iter()
        .copied()
        .filter(|&i| h.contains(inst.point(i)))
        .collect();
    if on_delta.len() != d {
        return fail("H is not a facet hyperplane of Δ");
    }
    let sides: Vec<Side> = inst.points().iter().map(|p| h.side(p)).collect();
    let one_sided = !(sides.contains(&Side::Positive) && sides.contains(&Side::Negative));
    let on_hull: Vec<usize> = (0..inst.len()).filter(|&i| sides[i] == Side::Zero).collect();
    if !one_sided || affine_rank(&inst.select(&on_hull))? != d - 1 {
        return fail("H is not a facet hyperplane of conv(S)");
    }
    if sides[cert.u] != Side::Zero {
        return fail("u is not on H");
    }
    let rest: Vec<usize> = (0..inst.len()).filter(|&i| i != cert.u).collect();
    if !in_interior(&inst.select(&rest), z) {
        return fail("S \\ u is not z-containing");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{fast_minimal_containing, Enumerator, Route};

    fn hand() -> Instance {
        Instance::from_ints(&[&[0, 2], &[-2, -1], &[3, -1], &[1, 0]], &[0, 0]).unwrap()
    }

    fn triangle() -> Instance {
        Instance::from_ints(&[&[0, 2], &[-2, -1], &[3, -1]], &[0, 0]).unwrap()
    }

    #[test]
    fn simplex_in_one_dimension() {
        let inst = Instance::from_ints(&[&[-2], &[5]], &[0]).unwrap();
        let c = find_containing_simplex(&inst, &[0, 1]).unwrap();
        assert_eq!(c.vertices, vec![0, 1]);
    }

    #[test]
    fn simplex_of_a_triangle_is_itself() {
        let c = find_containing_simplex(&triangle(), &[0, 1, 2]).unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2]);
        assert!(c.verified);
    }

    #[test]
    fn simplex_from_four_points() {
        let inst = hand();
        let c = find_containing_simplex(&inst, &[0, 1, 2, 3]).unwrap();
        assert!(fast_minimal_containing(&inst).unwrap().contains(&c.vertices));
        let quad = Instance::from_ints(&[&[0, 3], &[-2, -1], &[3, -1], &[2, 2]], &[0, 0]).unwrap();
        let c = find_containing_simplex(&quad, &[0, 1, 2, 3]).unwrap();
        assert!(simplex_contains_interior(&quad.select(&c.vertices), quad.z()));
    }

    #[test]
    fn simplex_rejects_non_interior_z() {
        let inst = Instance::from_ints(&[&[1, 1], &[2, 1], &[1, 3]], &[0, 0]).unwrap();
        assert!(matches!(
            find_containing_simplex(&inst, &[0, 1, 2]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn simplex_reports_degenerate_z() {
        let sq = Instance::from_ints(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]], &[0, 0]).unwrap();
        match find_containing_simplex(&sq, &[0, 1, 2, 3]) {
            Err(Error::NotGeneralPosition { witness }) => {
                assert!(crate::position::is_valid_z_witness(&sq, &witness));
            }
            other => panic!("expected general-position failure, got {other:?}"),
        }
    }

    #[test]
    fn facet_certificate_on_triangle() {
        let c = facet_certificate(&triangle(), &[1, 2], 0).unwrap();
        assert_eq!(c.facet, vec![1, 2]);
        assert_eq!(c.hyperplane, Hyperplane::from_ints(&[0, 1], 1).unwrap());
    }

    #[test]
    fn facet_certificate_on_four_points() {
        let inst = hand();
        let c = facet_certificate(&inst, &[0, 1], 2).unwrap();
        assert_eq!(c.facet, vec![0, 1]);
        let expected = hyperplane_through(&inst.select(&[0, 1])).unwrap();
        assert_eq!(c.hyperplane, expected);
        let c = facet_certificate(&inst, &[1, 2, 3], 0).unwrap();
        assert!(c.facet.iter().all(|i| [1, 2, 3].contains(i)));
    }

    #[test]
    fn facet_certificate_in_one_dimension() {
        let inst = Instance::from_ints(&[&[-2], &[5]], &[0]).unwrap();
        let c = facet_certificate(&inst, &[0], 1).unwrap();
        assert_eq!(c.facet, vec![0]);
        assert_eq!(c.hyperplane, Hyperplane::from_ints(&[1], 2).unwrap());
    }

    #[test]
    fn facet_certificate_rejects_bad_input() {
        let inst = hand();
        assert!(facet_certificate(&inst, &[0, 1], 1).is_err());
        assert!(facet_certificate(&inst, &[0], 2).is_err());
    }

    #[test]
    fn facet_certificate_hyperplane_is_essential() {
        let inst = hand();
        let e = Enumerator::new(&inst, Route::Fast).unwrap();
        let fam = e.families().unwrap();
        for a in fam.maximal_avoiding.members() {
            for s in (0..inst.len()).filter(|s| !a.contains(s)) {
                let c = facet_certificate(&inst, a, s).unwrap();
                let entry = fam.hyperplanes.find(&c.hyperplane).expect("in H(S)");
                assert!(entry.essential);
            }
        }
    }

    #[test]
    fn good_vertex_on_simplex_with_interior_point() {
        let inst = hand();
        let c = good_vertex(&inst).unwrap();
        verify_good_vertex(&inst, &c).unwrap();
        assert_eq!(c.simplex, vec![0, 1, 2]);
    }

    #[test]
    fn good_vertex_on_non_simplex_hull() {
        let inst = Instance::from_ints(
            &[&[0, 3], &[-3, -1], &[3, -2], &[4, 2], &[-2, 2]],
            &[0, 0],
        )
        .unwrap();
        let c = good_vertex(&inst).unwrap();
        verify_good_vertex(&inst, &c).unwrap();
    }

    #[test]
    fn good_vertex_with_boundary_point() {
        // Point 3 sits on the hull edge between 1 and 2.
        let inst = Instance::from_ints(&[&[0, 3], &[-3, -1], &[3, -1], &[1, -1]], &[0, 0]).unwrap();
        let c = good_vertex(&inst).unwrap();
        assert_eq!(c.u, 3);
    }

    #[test]
    fn good_vertex_gives_strict_count_gap() {
        let inst = hand();
        let c = good_vertex(&inst).unwrap();
        let e = Enumerator::new(&inst, Route::Fast).unwrap();
        let counts = e.counts(&e.families().unwrap());
        let p = counts.point(c.u);
        assert!(inst.dim() * p.minimal_containing > p.avoiding_lost);
    }
}
