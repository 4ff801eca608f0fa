//! Brute-force reference implementations. They are slow on purpose and take
//! routes that do not share code paths with the main algorithms beyond facet
//! enumeration of sub-polytopes.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::polytope::for_each_combination;
use crate::sample;
use crate::{Error, FaceDescriptor, LinearFunctional, Point, Polytope, Rational, Result};

pub const MAX_VERTICES: usize = 16;
pub const MAX_DIM: usize = 4;
/// Faces with more facets than this use only single facets and pairs as
/// candidate directions instead of every subset.
const FULL_SUBSET_FACETS: usize = 10;

fn guard(poly: &Polytope) -> Result<()> {
    if poly.num_vertices() > MAX_VERTICES {
        return Err(Error::SizeGuard("too many vertices"));
    }
    if poly.intrinsic_dim() > MAX_DIM {
        return Err(Error::SizeGuard("dimension too large"));
    }
    Ok(())
}

fn argmin(poly: &Polytope, candidates: &[usize], l: &LinearFunctional) -> Vec<usize> {
    let values: Vec<Rational> = candidates.iter().map(|&i| l.eval(poly.vertex(i))).collect();
    let min = values.iter().min().cloned().unwrap_or_else(Rational::zero);
    candidates.iter().zip(&values).filter(|(_, v)| **v == min).map(|(&i, _)| i).collect()
}

/// All nonempty faces by recursive exposure: every argmin set of a linear
/// functional over a known face is again a face. Candidate functionals are
/// sums of outward facet normals of the face viewed as a polytope.
pub fn oracle_faces(poly: &Polytope) -> Result<Vec<FaceDescriptor>> {
    guard(poly)?;
    let full = poly.full_face();
    let mut found = BTreeSet::from([full.clone()]);
    let mut queue = VecDeque::from([full]);
    while let Some(g) = queue.pop_front() {
        let sub = poly.sub_polytope(&g)?;
        // inward normals: minimising -a lands on the facet a·x = c
        let normals: Vec<LinearFunctional> = sub.facets().iter().map(|f| -&f.functional).collect();
        let mut visit = |subset: &[usize]| {
            let mut sum = LinearFunctional::new(alloc::vec![Rational::zero(); poly.ambient_dim()]);
            for &k in subset {
                sum = LinearFunctional::new(
                    sum.coeffs().iter().zip(normals[k].coeffs()).map(|(a, b)| a + b).collect(),
                );
            }
            let face = FaceDescriptor::new(argmin(poly, g.indices(), &sum));
            if found.insert(face.clone()) {
                queue.push_back(face);
            }
        };
        let max_size = if normals.len() <= FULL_SUBSET_FACETS { normals.len() } else { 2 };
        for k in 1..=max_size {
            for_each_combination(normals.len(), k, &mut visit);
        }
    }
    let mut faces: Vec<FaceDescriptor> = found.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(faces)
}

/// Vertices whose value tuple `(l_1(v), …, l_m(v))` is lexicographically least.
pub fn oracle_lex_argmin(poly: &Polytope, levels: &[LinearFunctional]) -> FaceDescriptor {
    let tuples: Vec<Vec<Rational>> = poly
        .vertices()
        .iter()
        .map(|v| levels.iter().map(|l| l.eval(v)).collect())
        .collect();
    let min = tuples.iter().min().expect("polytopes are nonempty");
    FaceDescriptor::new((0..tuples.len()).filter(|&i| &tuples[i] == min).collect())
}

/// Randomised search for `u, v ∈ P` and `α ∈ (0, 1)` with
/// `αu + (1-α)v ∈ conv(S)` but `u` or `v` outside `conv(S)`.
///
/// Sound: a returned pair always violates the face property. Incomplete:
/// `None` proves nothing. Half the trials aim through a random point of
/// `conv(S)` so that thin candidate sets are actually hit.
pub fn oracle_refute_face(poly: &Polytope, s: &FaceDescriptor, trials: usize, seed: u64) -> Result<Option<(Point, Point)>> {
    let face = poly.sub_polytope(s)?;
    let all: Vec<&Point> = poly.vertices().iter().collect();
    let inner: Vec<&Point> = poly.face_points(s);
    // conv(S) lies in the face F cut out by the facets tight on all of S, and
    // a segment of P meeting F lies in F; trials whose endpoint weights leave
    // F cannot succeed and are dropped before any rational arithmetic
    let tight: Vec<usize> = (0..poly.facets().len())
        .filter(|&k| s.indices().iter().all(|i| poly.facets()[k].tight_vertices.contains(i)))
        .collect();
    let hull_face = poly.vertices_on(&tight);
    let inside = |raw: &[i64]| raw.iter().enumerate().all(|(i, &w)| w == 0 || hull_face.contains(i));
    let one = Rational::from_integer(1.into());
    let mut rng = sample::rng(seed);
    for trial in 0..trials {
        let raw_u = sample::convex_weights(&mut rng, all.len());
        let (u, v) = if trial % 2 == 0 {
            let raw_v = sample::convex_weights(&mut rng, all.len());
            let alpha = sample::open_unit(&mut rng);
            if !inside(&raw_u) || !inside(&raw_v) {
                continue;
            }
            let (u, v) = (sample::weighted(&all, &raw_u), sample::weighted(&all, &raw_v));
            let mid = &u.scale(&alpha) + &v.scale(&(&one - &alpha));
            if !face.contains(&mid) {
                continue;
            }
            (u, v)
        } else {
            // v = p + β(p - u) so that p = (βu + v) / (1 + β) is the point
            // of conv(S) on the segment; β is capped by a ratio test so that
            // v stays in P
            let p = sample::strictly_convex_combination(&mut rng, &inner);
            if !inside(&raw_u) {
                continue;
            }
            let u = sample::weighted(&all, &raw_u);
            let dir = &p - &u;
            let cap = poly
                .facets()
                .iter()
                .filter_map(|f| {
                    let rate = f.functional.eval(&dir);
                    rate.is_positive().then(|| f.slack(&p) / rate)
                })
                .min();
            let beta = match cap {
                Some(c) if c.is_zero() => continue,
                Some(c) => c * sample::open_unit(&mut rng),
                None => sample::rational(&mut rng, 1, 2, 8),
            };
            (u, &p + &dir.scale(&beta))
        };
        if !face.contains(&u) || !face.contains(&v) {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn face_counts() {
        assert_eq!(oracle_faces(&fixtures::unit_square()).unwrap().len(), 9);
        assert_eq!(oracle_faces(&fixtures::simplex(3)).unwrap().len(), 15);
        assert_eq!(oracle_faces(&fixtures::cube(3)).unwrap().len(), 27);
        assert_eq!(oracle_faces(&fixtures::cross_polytope(3)).unwrap().len(), 27);
    }

    #[test]
    fn lex_argmin_examples() {
        let sq = fixtures::unit_square();
        let l = |c: &[i64]| LinearFunctional::from_ints(c);
        assert_eq!(oracle_lex_argmin(&sq, &[l(&[0, 1]), l(&[1, 0])]), FaceDescriptor::new(alloc::vec![0]));
        assert_eq!(oracle_lex_argmin(&sq, &[l(&[0, 1])]), FaceDescriptor::new(alloc::vec![0, 1]));
        assert_eq!(oracle_lex_argmin(&sq, &[l(&[1, 1])]), FaceDescriptor::new(alloc::vec![0]));
    }

    #[test]
    fn refuter_examples() {
        let sq = fixtures::unit_square();
        let diag = FaceDescriptor::new(alloc::vec![0, 2]);
        let (u, v) = oracle_refute_face(&sq, &diag, 10_000, sample::DEFAULT_SEED).unwrap().expect("diagonal refuted");
        assert!(sq.contains(&u) && sq.contains(&v));
        assert!(oracle_refute_face(&sq, &FaceDescriptor::new(alloc::vec![0]), 10_000, sample::DEFAULT_SEED)
            .unwrap()
            .is_none());
        assert!(oracle_refute_face(&sq, &sq.full_face(), 2_000, sample::DEFAULT_SEED).unwrap().is_none());
    }

    #[test]
    fn size_guard() {
        let pts: Vec<Point> = (0..17).map(|i: i64| Point::from_ints(&[i, i * i])).collect();
        let big = Polytope::new(pts).unwrap();
        assert_eq!(big.num_vertices(), 17);
        assert!(matches!(oracle_faces(&big), Err(Error::SizeGuard(_))));
    }
}
