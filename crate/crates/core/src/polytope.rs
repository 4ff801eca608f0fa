//! Polytopes given by their vertices.
//!
//! Facets are found by brute force over affinely independent vertex subsets
//! and are computed relative to the affine hull, so lower-dimensional
//! polytopes behave exactly like full-dimensional ones in their own hull.
//! A facet's normal always lies in the direction space of the hull, which
//! makes the normalised `(a, c)` pair unique per facet.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact::{affine_hull, null_space, primitive_integer};
use crate::{AffineFunctional, AffineManifold, Error, LinearFunctional, Point, Rational, Result};

/// `functional · x ≤ offset` holds on the polytope, with equality exactly on
/// `tight_vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub functional: LinearFunctional,
    pub offset: Rational,
    pub tight_vertices: Vec<usize>,
}

impl Facet {
    /// `offset - functional · x`, nonnegative on the polytope.
    pub fn slack(&self, x: &Point) -> Rational {
        &self.offset - self.functional.eval(x)
    }

    pub fn slack_functional(&self) -> AffineFunctional {
        AffineFunctional::new(-&self.functional, self.offset.clone())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceDescriptor {
    vertex_indices: Vec<usize>,
}

impl FaceDescriptor {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { vertex_indices: indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    pub fn len(&self) -> usize {
        self.vertex_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.vertex_indices.binary_search(&index).is_ok()
    }

    pub fn is_subset(&self, other: &FaceDescriptor) -> bool {
        self.vertex_indices.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &FaceDescriptor) -> FaceDescriptor {
        FaceDescriptor {
            vertex_indices: self.vertex_indices.iter().copied().filter(|&i| other.contains(i)).collect(),
        }
    }
}

impl From<Vec<usize>> for FaceDescriptor {
    fn from(v: Vec<usize>) -> Self {
        Self::new(v)
    }
}

#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    hull: AffineManifold,
    facets: Vec<Facet>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    /// Convex hull of `points`. Duplicates and points that are not extreme
    /// are dropped; see [`Polytope::with_report`] to learn which.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        Self::with_report(points).map(|(p, _)| p)
    }

    /// Like [`Polytope::new`], also returning the removed input points in
    /// input order.
    pub fn with_report(points: Vec<Point>) -> Result<(Self, Vec<Point>)> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let ambient_dim = first.dim();
        for p in &points {
            if p.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: p.dim() });
            }
        }
        let mut seen = BTreeSet::new();
        let mut removed = Vec::new();
        let mut distinct = Vec::new();
        for p in points {
            if seen.insert(p.clone()) {
                distinct.push(p);
            } else {
                removed.push(p);
            }
        }
        let hull = affine_hull(&distinct)?;
        let facets = enumerate_facets(&distinct, &hull);

        // a point is a vertex iff the facets tight at it meet the point set
        // in that point alone
        let mut keep = vec![true; distinct.len()];
        if hull.dim() > 0 {
            for (i, flag) in keep.iter_mut().enumerate() {
                let tight: Vec<&Facet> = facets.iter().filter(|f| f.tight_vertices.contains(&i)).collect();
                let alone = (0..distinct.len())
                    .filter(|&j| tight.iter().all(|f| f.tight_vertices.contains(&j)))
                    .count()
                    == 1;
                *flag = alone;
            }
        }
        let mut vertices = Vec::new();
        for (p, k) in distinct.into_iter().zip(keep) {
            if k {
                vertices.push(p);
            } else {
                removed.push(p);
            }
        }
        let facets = if removed.is_empty() { facets } else { enumerate_facets(&vertices, &hull) };
        Ok((Self { ambient_dim, vertices, hull, facets }, removed))
    }

    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        Self::new(points.iter().map(|c| Point::from_ints(c)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn affine_hull(&self) -> &AffineManifold {
        &self.hull
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.hull.dim()
    }

    /// Facets relative to the affine hull, sorted by `(functional, offset)`.
    /// A single point has no facets and yields an empty slice.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn full_face(&self) -> FaceDescriptor {
        FaceDescriptor { vertex_indices: (0..self.vertices.len()).collect() }
    }

    pub fn contains(&self, x: &Point) -> bool {
        x.dim() == self.ambient_dim
            && self.hull.contains(x)
            && self.facets.iter().all(|f| f.functional.eval(x) <= f.offset)
    }

    /// Indices of the facets whose inequality is tight at `x`.
    pub fn tight_facets(&self, x: &Point) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.functional.eval(x) == f.offset)
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices lying on every facet in `facet_indices`.
    pub fn vertices_on(&self, facet_indices: &[usize]) -> FaceDescriptor {
        let idx = (0..self.vertices.len())
            .filter(|v| facet_indices.iter().all(|&f| self.facets[f].tight_vertices.binary_search(v).is_ok()))
            .collect();
        FaceDescriptor { vertex_indices: idx }
    }

    pub fn smallest_face_containing(&self, x: &Point) -> Result<FaceDescriptor> {
        if !self.contains(x) {
            return Err(Error::NotAMember);
        }
        Ok(self.vertices_on(&self.tight_facets(x)))
    }

    /// All nonempty faces, ordered by size and then by indices.
    ///
    /// The face set of a polytope is the set of nonempty intersections of
    /// facet families; it is generated here by closing `{P}` under
    /// intersection with single facets.
    pub fn all_faces(&self) -> Vec<FaceDescriptor> {
        let full = self.full_face();
        let mut found = BTreeSet::new();
        found.insert(full.clone());
        let mut queue = VecDeque::from([full]);
        while let Some(face) = queue.pop_front() {
            for facet in &self.facets {
                let next = FaceDescriptor {
                    vertex_indices: face
                        .indices()
                        .iter()
                        .copied()
                        .filter(|i| facet.tight_vertices.binary_search(i).is_ok())
                        .collect(),
                };
                if !next.is_empty() && found.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut faces: Vec<FaceDescriptor> = found.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }

    pub(crate) fn check_descriptor(&self, s: &FaceDescriptor) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptyFace);
        }
        let len = self.vertices.len();
        match s.indices().iter().find(|&&i| i >= len) {
            Some(&index) => Err(Error::IndexOutOfRange { index, len }),
            None => Ok(()),
        }
    }

    pub fn face_points(&self, s: &FaceDescriptor) -> Vec<&Point> {
        s.indices().iter().map(|&i| &self.vertices[i]).collect()
    }

    pub fn barycenter(&self, s: &FaceDescriptor) -> Point {
        Point::barycenter(&self.face_points(s))
    }

    /// Whether `conv(s)` is a face: the smallest face containing the
    /// barycenter of `s` must be `s` itself.
    pub fn is_face(&self, s: &FaceDescriptor) -> Result<bool> {
        self.check_descriptor(s)?;
        let b = self.barycenter(s);
        Ok(&self.smallest_face_containing(&b)? == s)
    }

    /// `conv(s)` as a polytope of its own, vertex order following `s`.
    pub fn sub_polytope(&self, s: &FaceDescriptor) -> Result<Polytope> {
        self.check_descriptor(s)?;
        Polytope::new(self.face_points(s).into_iter().cloned().collect())
    }
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn enumerate_facets(points: &[Point], hull: &AffineManifold) -> Vec<Facet> {
    let d = hull.dim();
    if d == 0 {
        return Vec::new();
    }
    let dirs = hull.directions();
    // gram[i][k] = dirs[k] · points[i]; a normal a = Σ λ_k dirs[k] evaluates
    // to Σ λ_k gram[i][k] at point i
    let gram: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| dirs.iter().map(|dk| dk.dot(p)).collect())
        .collect();
    let mut found: BTreeMap<(Vec<Rational>, Rational), Vec<usize>> = BTreeMap::new();
    for_each_combination(points.len(), d, |subset| {
        let s0 = subset[0];
        let rows: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&j| (0..d).map(|k| &gram[j][k] - &gram[s0][k]).collect())
            .collect();
        let kernel = null_space(&rows, d);
        if kernel.len() != 1 {
            return;
        }
        let lambda = &kernel[0];
        let value = |i: usize| -> Rational {
            lambda.iter().zip(&gram[i]).fold(Rational::zero(), |acc, (l, g)| acc + l * g)
        };
        let c = value(s0);
        let values: Vec<Rational> = (0..points.len()).map(value).collect();
        let sign = if values.iter().all(|v| v <= &c) {
            Rational::from_integer(1.into())
        } else if values.iter().all(|v| v >= &c) {
            Rational::from_integer((-1).into())
        } else {
            return;
        };
        let mut normal = vec![Rational::zero(); points[0].dim()];
        for (l, dk) in lambda.iter().zip(dirs) {
            for (n, x) in normal.iter_mut().zip(dk.coords()) {
                *n += l * x * &sign;
            }
        }
        normal.push(c * &sign);
        let mut key = primitive_integer(&normal);
        let offset = key.pop().unwrap();
        let tight: Vec<usize> = (0..points.len())
            .filter(|&i| values[i] == values[s0])
            .collect();
        found.entry((key, offset)).or_insert(tight);
    });
    found
        .into_iter()
        .map(|((a, c), tight_vertices)| Facet {
            functional: LinearFunctional::new(a),
            offset: c,
            tight_vertices,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};
    use crate::fixtures;

    fn p(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    fn facet_pairs(poly: &Polytope) -> Vec<(Vec<i64>, i64)> {
        let to_i = |r: &Rational| -> i64 { i64::try_from(r.to_integer()).unwrap() };
        poly.facets()
            .iter()
            .map(|f| (f.functional.coeffs().iter().map(to_i).collect(), to_i(&f.offset)))
            .collect()
    }

    #[test]
    fn square_facets() {
        let sq = fixtures::unit_square();
        assert_eq!(
            facet_pairs(&sq),
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![0, 1], 1), (vec![1, 0], 1)]
        );
        for f in sq.facets() {
            assert_eq!(f.tight_vertices.len(), 2);
        }
    }

    #[test]
    fn segment_facets_are_its_endpoints() {
        let seg = Polytope::from_ints(&[&[0, 0], &[2, 0]]).unwrap();
        assert_eq!(seg.intrinsic_dim(), 1);
        assert_eq!(facet_pairs(&seg), vec![(vec![-1, 0], 0), (vec![1, 0], 2)]);
        assert!(seg.contains(&p(&[1, 0])));
        assert!(!seg.contains(&p(&[1, 1])));
        assert!(!seg.contains(&p(&[3, 0])));
    }

    #[test]
    fn simplex_has_four_facets() {
        let s = fixtures::simplex(3);
        assert_eq!(s.facets().len(), 4);
        assert!(s.facets().iter().all(|f| f.tight_vertices.len() == 3));
    }

    #[test]
    fn single_point_has_no_facets() {
        let pt = Polytope::from_ints(&[&[1, 2]]).unwrap();
        assert!(pt.facets().is_empty());
        assert!(pt.contains(&p(&[1, 2])));
        assert!(!pt.contains(&p(&[1, 3])));
        assert_eq!(pt.all_faces(), vec![FaceDescriptor::new(vec![0])]);
    }

    #[test]
    fn constructor_drops_duplicates_and_interior_points() {
        let (sq, removed) = Polytope::with_report(vec![
            p(&[0, 0]),
            p(&[1, 0]),
            Point::new(vec![frac(1, 2), rat(0)]),
            p(&[1, 1]),
            p(&[0, 0]),
            Point::new(vec![frac(1, 3), frac(1, 3)]),
            p(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(sq.vertices(), &[p(&[0, 0]), p(&[1, 0]), p(&[1, 1]), p(&[0, 1])]);
        assert_eq!(removed.len(), 3);
        assert_eq!(sq.facets().len(), 4);
    }

    #[test]
    fn collinear_input_in_space() {
        let seg = Polytope::from_ints(&[&[0, 0, 0], &[1, 1, 1], &[3, 3, 3], &[2, 2, 2]]).unwrap();
        assert_eq!(seg.vertices(), &[p(&[0, 0, 0]), p(&[3, 3, 3])]);
        assert_eq!(seg.all_faces().len(), 3);
    }

    #[test]
    fn membership_examples() {
        let sq = fixtures::unit_square();
        assert!(sq.contains(&Point::new(vec![frac(1, 2), frac(1, 2)])));
        assert!(!sq.contains(&p(&[2, 0])));
        assert_eq!(sq.smallest_face_containing(&p(&[2, 0])), Err(Error::NotAMember));
    }

    #[test]
    fn smallest_face_examples() {
        let sq = fixtures::unit_square();
        let half = frac(1, 2);
        assert_eq!(
            sq.smallest_face_containing(&Point::new(vec![half.clone(), rat(0)])).unwrap(),
            FaceDescriptor::new(vec![0, 1])
        );
        assert_eq!(
            sq.smallest_face_containing(&Point::new(vec![half.clone(), half])).unwrap(),
            sq.full_face()
        );
        assert_eq!(sq.smallest_face_containing(&p(&[0, 0])).unwrap(), FaceDescriptor::new(vec![0]));
    }

    #[test]
    fn is_face_examples() {
        let sq = fixtures::unit_square();
        assert!(sq.is_face(&FaceDescriptor::new(vec![0])).unwrap());
        assert!(!sq.is_face(&FaceDescriptor::new(vec![0, 2])).unwrap());
        assert!(!sq.is_face(&FaceDescriptor::new(vec![0, 1, 2])).unwrap());
        assert_eq!(sq.is_face(&FaceDescriptor::default()), Err(Error::EmptyFace));
        assert_eq!(
            sq.is_face(&FaceDescriptor::new(vec![4])),
            Err(Error::IndexOutOfRange { index: 4, len: 4 })
        );
    }

    #[test]
    fn face_counts() {
        assert_eq!(fixtures::unit_square().all_faces().len(), 9);
        assert_eq!(fixtures::simplex(3).all_faces().len(), 15);
        assert_eq!(fixtures::cube(3).all_faces().len(), 27);
        assert_eq!(fixtures::cross_polytope(3).all_faces().len(), 27);
        assert_eq!(fixtures::cube(4).all_faces().len(), 81);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut empty = 0;
        for_each_combination(3, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
