//! Convex hulls of finitely many rational disks in the plane.
//!
//! The boundary of such a body consists of circular arcs and straight edges
//! on outer bitangent lines. The endpoint of an edge on a disk of positive
//! radius is a face that no linear functional exposes: the only supporting
//! line there contains the whole edge. It is still lexicographically
//! exposed, by a rank-2 cortege.
//!
//! Bodies whose hull edges lie on lines with irrational coefficients are
//! rejected with [`Error::UnsupportedConfiguration`].

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::quad::{sqrt_rational, QuadScalar};
use crate::step_affine::Cortege;
use crate::{sample, AffineFunctional, Error, LinearFunctional, Point, Polytope, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Disk {
    pub center: Point,
    pub radius: Rational,
}

impl Disk {
    pub fn contains(&self, p: &Point) -> bool {
        let d = p - &self.center;
        d.dot(&d) <= &self.radius * &self.radius
    }
}

/// Which side of the line from disk `i` to disk `j` the edge runs along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// An outer bitangent of disks `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub i: usize,
    pub j: usize,
    pub side: Side,
}

/// Which end of an edge: on disk `i` (`First`) or on disk `j` (`Second`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DiskFace {
    Whole,
    Edge(EdgeRef),
    /// The point of disk `disk` minimising `direction`.
    ArcPoint { disk: usize, direction: LinearFunctional },
    /// A zero-radius disk that is a corner of the hull.
    Vertex(usize),
    TangencyPoint { edge: EdgeRef, end: End },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub reference: EdgeRef,
    /// Unit inward normal: the body lies in `normal · x ≥ level`.
    pub normal: Point,
    pub level: Rational,
    pub ends: [Point; 2],
}

impl Edge {
    pub fn end_point(&self, end: End) -> &Point {
        match end {
            End::First => &self.ends[0],
            End::Second => &self.ends[1],
        }
    }

    fn end_disk(&self, end: End) -> usize {
        match end {
            End::First => self.reference.i,
            End::Second => self.reference.j,
        }
    }
}

/// Open range of inward normal directions, counterclockwise from `from` to
/// `to`, in which `disk` alone supports the body. `None` bounds mean the
/// full circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcFamily {
    pub disk: usize,
    pub from: Option<Point>,
    pub to: Option<Point>,
}

/// Symbolic face list. `Whole` is implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceList {
    pub edges: Vec<Edge>,
    pub tangency_points: Vec<(EdgeRef, End, Point)>,
    pub vertices: Vec<(usize, Point)>,
    pub arcs: Vec<ArcFamily>,
}

impl FaceList {
    /// Every listed face except the arc families, `Whole` first.
    pub fn point_and_edge_faces(&self) -> Vec<DiskFace> {
        let mut out = vec![DiskFace::Whole];
        out.extend(self.edges.iter().map(|e| DiskFace::Edge(e.reference)));
        out.extend(self.vertices.iter().map(|(k, _)| DiskFace::Vertex(*k)));
        out.extend(
            self.tangency_points
                .iter()
                .map(|(edge, end, _)| DiskFace::TangencyPoint { edge: *edge, end: *end }),
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskBody {
    disks: Vec<Disk>,
}

fn cross(a: &Point, b: &Point) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn rot90(a: &Point) -> Point {
    Point::new(vec![-a[1].clone(), a[0].clone()])
}

/// Counterclockwise angular order starting at the positive x axis.
fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |p: &Point| -> u8 {
        if p[1].is_positive() || (p[1].is_zero() && p[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| Rational::zero().cmp(&cross(a, b)))
}

fn functional_of(p: &Point) -> LinearFunctional {
    LinearFunctional::new(p.coords().to_vec())
}

impl DiskBody {
    pub fn new(disks: Vec<Disk>) -> Result<Self> {
        if disks.is_empty() {
            return Err(Error::EmptyInput);
        }
        for d in &disks {
            if d.center.dim() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: d.center.dim() });
            }
            if d.radius.is_negative() {
                return Err(Error::BadRational(alloc::format!("negative radius {}", d.radius)));
            }
        }
        Ok(Self { disks })
    }

    pub fn from_ints(disks: &[((i64, i64), i64)]) -> Result<Self> {
        Self::new(
            disks
                .iter()
                .map(|&((x, y), r)| Disk {
                    center: Point::from_ints(&[x, y]),
                    radius: Rational::from_integer(r.into()),
                })
                .collect(),
        )
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    fn support_value(&self, k: usize, l: &LinearFunctional, norm_sq: &Rational) -> QuadScalar {
        let d = &self.disks[k];
        QuadScalar::new(l.eval(&d.center), -d.radius.clone(), norm_sq.clone())
    }

    /// Minimum of `l` over the body and the face where it is attained.
    pub fn support_min(&self, l: &LinearFunctional) -> Result<(QuadScalar, DiskFace)> {
        if l.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: l.dim() });
        }
        if l.is_zero() {
            return Err(Error::ZeroFunctional);
        }
        let norm_sq = l.as_point().dot(&l.as_point());
        let values: Vec<QuadScalar> = (0..self.disks.len()).map(|k| self.support_value(k, l, &norm_sq)).collect();
        let mut min = values[0].clone();
        for v in &values[1..] {
            if v < &min {
                min = v.clone();
            }
        }
        let attaining: Vec<usize> = (0..values.len()).filter(|&k| values[k] == min).collect();
        // disks attaining the same minimum may touch at one point (a disk
        // sitting inside another); keep those whose contact point differs
        let face = match attaining.as_slice() {
            [k] => self.point_face(*k, l),
            [i, j] => {
                let normal_dir = l.as_point();
                let edge = self
                    .hull_edges()?
                    .into_iter()
                    .find(|e| {
                        e.reference.i == *i
                            && e.reference.j == *j
                            && cross(&e.normal, &normal_dir).is_zero()
                            && e.normal.dot(&normal_dir).is_positive()
                    })
                    .ok_or(Error::UnsupportedConfiguration)?;
                DiskFace::Edge(edge.reference)
            }
            _ => return Err(Error::UnsupportedConfiguration),
        };
        Ok((min, face))
    }

    fn point_face(&self, k: usize, l: &LinearFunctional) -> DiskFace {
        if self.disks[k].radius.is_zero() {
            DiskFace::Vertex(k)
        } else {
            DiskFace::ArcPoint { disk: k, direction: l.clone() }
        }
    }

    /// The point of disk `k` minimising `l`, coordinates in `ℚ(√(l·l))`.
    pub fn arc_point(&self, k: usize, l: &LinearFunctional) -> [QuadScalar; 2] {
        let d = &self.disks[k];
        let norm_sq = l.as_point().dot(&l.as_point());
        let coord = |c: usize| {
            QuadScalar::new(d.center[c].clone(), -(&d.radius * &l.coeffs()[c]) / &norm_sq, norm_sq.clone())
        };
        [coord(0), coord(1)]
    }

    /// Outer bitangent edges on the hull boundary, sorted counterclockwise by
    /// inward normal.
    pub fn hull_edges(&self) -> Result<Vec<Edge>> {
        let mut edges = Vec::new();
        let n = self.disks.len();
        for i in 0..n {
            for j in i + 1..n {
                let (di, dj) = (&self.disks[i], &self.disks[j]);
                let delta = &dj.center - &di.center;
                let d2 = delta.dot(&delta);
                let dr = &dj.radius - &di.radius;
                let disc = &d2 - &dr * &dr;
                if !disc.is_positive() {
                    continue;
                }
                let perp = rot90(&delta);
                for (sigma, side) in [(1i64, Side::Right), (-1, Side::Left)] {
                    let sigma = Rational::from_integer(sigma.into());
                    // unit normal n = (dr·Δ + σ·√disc·Δ⊥) / |Δ|², exact in ℚ(√disc)
                    let normal: Vec<QuadScalar> = (0..2)
                        .map(|c| QuadScalar::new(&dr * &delta[c] / &d2, &sigma * &perp[c] / &d2, disc.clone()))
                        .collect();
                    let support = |k: usize| -> QuadScalar {
                        let d = &self.disks[k];
                        let dot = &normal[0].mul_rational(&d.center[0]) + &normal[1].mul_rational(&d.center[1]);
                        &dot - &QuadScalar::rational(d.radius.clone())
                    };
                    let level = support(i);
                    let mut on_hull = true;
                    for k in (0..n).filter(|&k| k != i && k != j) {
                        match support(k).partial_cmp(&level) {
                            Some(Ordering::Greater) => {}
                            Some(Ordering::Less) => {
                                on_hull = false;
                                break;
                            }
                            _ => return Err(Error::UnsupportedConfiguration),
                        }
                    }
                    if !on_hull {
                        continue;
                    }
                    let root = sqrt_rational(&disc).ok_or(Error::UnsupportedConfiguration)?;
                    let nvec = Point::new(
                        (0..2).map(|c| (&dr * &delta[c] + &sigma * &root * &perp[c]) / &d2).collect(),
                    );
                    let level = level.to_rational().expect("rational radicand collapses");
                    let ends = [
                        &di.center - &nvec.scale(&di.radius),
                        &dj.center - &nvec.scale(&dj.radius),
                    ];
                    edges.push(Edge { reference: EdgeRef { i, j, side }, normal: nvec, level, ends });
                }
            }
        }
        edges.sort_by(|a, b| angle_cmp(&a.normal, &b.normal));
        Ok(edges)
    }

    pub fn faces(&self) -> Result<FaceList> {
        let edges = self.hull_edges()?;
        let mut tangency_points = Vec::new();
        let mut vertices: Vec<(usize, Point)> = Vec::new();
        for e in &edges {
            for end in [End::First, End::Second] {
                let k = e.end_disk(end);
                let p = e.end_point(end).clone();
                if self.disks[k].radius.is_zero() {
                    if !vertices.iter().any(|(v, _)| *v == k) {
                        vertices.push((k, p));
                    }
                } else {
                    tangency_points.push((e.reference, end, p));
                }
            }
        }
        vertices.sort_by_key(|(k, _)| *k);
        let mut arcs = Vec::new();
        if edges.is_empty() {
            let probe = LinearFunctional::from_ints(&[1, 0]);
            if let (_, DiskFace::ArcPoint { disk, .. }) = self.support_min(&probe)? {
                arcs.push(ArcFamily { disk, from: None, to: None });
            }
        } else {
            for (k, e) in edges.iter().enumerate() {
                let next = &edges[(k + 1) % edges.len()].normal;
                let here = &e.normal;
                let c = cross(here, next);
                let between = if c.is_positive() {
                    here + next
                } else if c.is_negative() {
                    -&(here + next)
                } else {
                    rot90(here)
                };
                if let (_, DiskFace::ArcPoint { disk, .. }) = self.support_min(&functional_of(&between))? {
                    arcs.push(ArcFamily { disk, from: Some(here.clone()), to: Some(next.clone()) });
                }
            }
        }
        Ok(FaceList { edges, tangency_points, vertices, arcs })
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
        }
        if self.disks.iter().any(|d| d.contains(p)) {
            return Ok(true);
        }
        let corners: Vec<Point> = self.hull_edges()?.into_iter().flat_map(|e| e.ends).collect();
        if corners.is_empty() {
            return Ok(false);
        }
        Ok(Polytope::new(corners)?.contains(p))
    }

    fn edge(&self, r: &EdgeRef) -> Result<Edge> {
        self.hull_edges()?.into_iter().find(|e| &e.reference == r).ok_or(Error::UnknownFace)
    }

    /// Errors unless `face` is one of this body's faces.
    fn check_face(&self, face: &DiskFace) -> Result<()> {
        match face {
            DiskFace::Whole => Ok(()),
            DiskFace::Edge(r) => self.edge(r).map(|_| ()),
            DiskFace::TangencyPoint { edge, end } => {
                let e = self.edge(edge)?;
                if self.disks[e.end_disk(*end)].radius.is_zero() {
                    Err(Error::UnknownFace)
                } else {
                    Ok(())
                }
            }
            DiskFace::Vertex(k) => {
                if self.faces()?.vertices.iter().any(|(v, _)| v == k) {
                    Ok(())
                } else {
                    Err(Error::UnknownFace)
                }
            }
            DiskFace::ArcPoint { disk, direction } => match self.support_min(direction)? {
                (_, DiskFace::ArcPoint { disk: d, .. }) if d == *disk => Ok(()),
                _ => Err(Error::UnknownFace),
            },
        }
    }

    pub fn is_exposed(&self, face: &DiskFace) -> Result<bool> {
        self.check_face(face)?;
        match face {
            DiskFace::Whole => Err(Error::WholeBodyNotProper),
            DiskFace::TangencyPoint { .. } => Ok(false),
            DiskFace::Edge(_) | DiskFace::ArcPoint { .. } | DiskFace::Vertex(_) => Ok(true),
        }
    }

    /// A cortege whose step-affine function is nonnegative on the body and
    /// vanishes on it exactly along `face`. Rank 2 for tangency points, rank
    /// 1 otherwise.
    pub fn certify(&self, face: &DiskFace) -> Result<Cortege> {
        self.check_face(face)?;
        let slack = |l: LinearFunctional, at: &Point| {
            let offset = -l.eval(at);
            AffineFunctional::new(l, offset).normalized()
        };
        let levels = match face {
            DiskFace::Whole => return Err(Error::WholeBodyNotProper),
            DiskFace::Edge(r) => {
                let e = self.edge(r)?;
                vec![slack(functional_of(&e.normal), &e.ends[0])]
            }
            DiskFace::TangencyPoint { edge, end } => {
                let e = self.edge(edge)?;
                let here = e.end_point(*end);
                let other = match end {
                    End::First => &e.ends[1],
                    End::Second => &e.ends[0],
                };
                vec![slack(functional_of(&e.normal), here), slack(functional_of(&(other - here)), here)]
            }
            DiskFace::Vertex(k) => {
                let edges = self.hull_edges()?;
                let normals: Vec<&Point> = edges
                    .iter()
                    .filter(|e| e.reference.i == *k || e.reference.j == *k)
                    .map(|e| &e.normal)
                    .collect();
                let [a, b] = normals.as_slice() else {
                    return Err(Error::UnsupportedConfiguration);
                };
                let dir = *a + *b;
                vec![slack(functional_of(&dir), &self.disks[*k].center)]
            }
            DiskFace::ArcPoint { disk, direction } => {
                let norm_sq = direction.as_point().dot(&direction.as_point());
                let norm = sqrt_rational(&norm_sq).ok_or(Error::IrrationalSupport)?;
                let d = &self.disks[*disk];
                let value = direction.eval(&d.center) - &d.radius * norm;
                vec![AffineFunctional::new(direction.clone(), -value).normalized()]
            }
        };
        Cortege::new(levels)
    }

    /// Rational points of the body: circle points, disk interiors, hull
    /// polygon and edge points, plus every edge end.
    pub fn sample_points<R: Rng>(&self, rng: &mut R, count: usize) -> Result<Vec<Point>> {
        let edges = self.hull_edges()?;
        let corners: Vec<Point> = edges.iter().flat_map(|e| e.ends.iter().cloned()).collect();
        let mut out: Vec<Point> = corners.clone();
        let corner_refs: Vec<&Point> = corners.iter().collect();
        let one = Rational::one();
        while out.len() < count {
            let kind = rng.gen_range(0..4);
            let k = rng.gen_range(0..self.disks.len());
            let d = &self.disks[k];
            let p = match kind {
                0 => {
                    // (1 - t², 2t) / (1 + t²) lies on the unit circle
                    let t = sample::rational(rng, -3, 3, 7);
                    let den = &one + &t * &t;
                    let dir = Point::new(vec![(&one - &t * &t) / &den, (&t + &t) / &den]);
                    &d.center + &dir.scale(&d.radius)
                }
                1 => {
                    let off = sample::point(rng, 2, -1, 1, 9).scale(&d.radius);
                    let p = &d.center + &off;
                    if !d.contains(&p) {
                        continue;
                    }
                    p
                }
                2 if !corner_refs.is_empty() => sample::convex_combination(rng, &corner_refs),
                3 if !edges.is_empty() => {
                    let e = &edges[rng.gen_range(0..edges.len())];
                    let t = sample::rational(rng, 0, 1, 11);
                    &e.ends[0] + &(&e.ends[1] - &e.ends[0]).scale(&t)
                }
                _ => continue,
            };
            out.push(p);
        }
        out.truncate(count.max(corners.len()));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};
    use crate::fixtures;
    use crate::step_affine::StepAffineFunction;

    fn pt(x: Rational, y: Rational) -> Point {
        Point::new(vec![x, y])
    }

    #[test]
    fn support_examples() {
        let cone = fixtures::cone_body();
        let (v, f) = cone.support_min(&LinearFunctional::from_ints(&[1, 0])).unwrap();
        assert_eq!(v, QuadScalar::rational(rat(-3)));
        assert_eq!(f, DiskFace::ArcPoint { disk: 0, direction: LinearFunctional::from_ints(&[1, 0]) });
        let [x, y] = cone.arc_point(0, &LinearFunctional::from_ints(&[1, 0]));
        assert_eq!((x.to_rational(), y.to_rational()), (Some(rat(-3)), Some(rat(0))));

        let (v, f) = cone.support_min(&LinearFunctional::from_ints(&[-1, 0])).unwrap();
        assert_eq!(v, QuadScalar::rational(rat(-5)));
        assert_eq!(f, DiskFace::Vertex(1));

        let (v, f) = cone.support_min(&LinearFunctional::from_ints(&[3, 4])).unwrap();
        assert_eq!(v, QuadScalar::rational(rat(-15)));
        assert!(matches!(f, DiskFace::ArcPoint { disk: 0, .. }));

        assert_eq!(cone.support_min(&LinearFunctional::from_ints(&[0, 0])), Err(Error::ZeroFunctional));
    }

    #[test]
    fn irrational_support_values_compare_exactly() {
        let cone = fixtures::cone_body();
        // l = (-1, 1): disk gives -3√2, apex gives -5; -3√2 ≈ -4.24 > -5
        let (v, f) = cone.support_min(&LinearFunctional::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f, DiskFace::Vertex(1));
        assert_eq!(v, QuadScalar::rational(rat(-5)));
        // l = (-1, 2): -3√5 ≈ -6.7 < -5
        let (v, f) = cone.support_min(&LinearFunctional::from_ints(&[-1, 2])).unwrap();
        assert!(matches!(f, DiskFace::ArcPoint { disk: 0, .. }));
        assert!(!v.is_rational());
    }

    #[test]
    fn contains_examples() {
        let cone = fixtures::cone_body();
        assert!(cone.contains(&Point::from_ints(&[0, 0])).unwrap());
        assert!(cone.contains(&Point::from_ints(&[5, 0])).unwrap());
        assert!(!cone.contains(&Point::from_ints(&[6, 0])).unwrap());
        assert!(cone.contains(&pt(rat(4), frac(1, 2))).unwrap());
        assert!(!cone.contains(&pt(rat(4), rat(1))).unwrap());
    }

    #[test]
    fn cone_faces() {
        let faces = fixtures::cone_body().faces().unwrap();
        assert_eq!(faces.edges.len(), 2);
        let tangency: Vec<&Point> = faces.tangency_points.iter().map(|(_, _, p)| p).collect();
        assert!(tangency.contains(&&pt(frac(9, 5), frac(12, 5))));
        assert!(tangency.contains(&&pt(frac(9, 5), frac(-12, 5))));
        assert_eq!(tangency.len(), 2);
        assert_eq!(faces.vertices, vec![(1, Point::from_ints(&[5, 0]))]);
        assert_eq!(faces.arcs.len(), 1);
        assert_eq!(faces.arcs[0].disk, 0);
    }

    #[test]
    fn stadium_faces() {
        let faces = fixtures::stadium_body().faces().unwrap();
        assert_eq!(faces.edges.len(), 2);
        let levels: Vec<(Point, Rational)> = faces.edges.iter().map(|e| (e.normal.clone(), e.level.clone())).collect();
        assert!(levels.contains(&(Point::from_ints(&[0, 1]), rat(-1))));
        assert!(levels.contains(&(Point::from_ints(&[0, -1]), rat(-1))));
        let mut tangency: Vec<Point> = faces.tangency_points.iter().map(|(_, _, p)| p.clone()).collect();
        tangency.sort();
        assert_eq!(
            tangency,
            vec![
                Point::from_ints(&[0, -1]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[4, -1]),
                Point::from_ints(&[4, 1])
            ]
        );
        assert!(faces.vertices.is_empty());
        assert_eq!(faces.arcs.len(), 2);
    }

    #[test]
    fn single_disk_has_no_edges() {
        let body = DiskBody::from_ints(&[((1, 1), 2)]).unwrap();
        let faces = body.faces().unwrap();
        assert!(faces.edges.is_empty() && faces.tangency_points.is_empty());
        assert_eq!(faces.arcs, vec![ArcFamily { disk: 0, from: None, to: None }]);
    }

    #[test]
    fn irrational_bitangent_rejected() {
        // |Δ|² - Δr² = 4 + 4 - 1 = 7 is not a square
        let body = DiskBody::from_ints(&[((0, 0), 1), ((2, 2), 2)]).unwrap();
        assert_eq!(body.faces(), Err(Error::UnsupportedConfiguration));
    }

    fn tangency_face(body: &DiskBody, at: &Point) -> DiskFace {
        let faces = body.faces().unwrap();
        let (edge, end, _) = faces.tangency_points.iter().find(|(_, _, p)| p == at).unwrap();
        DiskFace::TangencyPoint { edge: *edge, end: *end }
    }

    #[test]
    fn certify_examples() {
        let cone = fixtures::cone_body();
        let t = tangency_face(&cone, &pt(frac(9, 5), frac(12, 5)));
        assert!(!cone.is_exposed(&t).unwrap());
        let c = cone.certify(&t).unwrap();
        assert_eq!(
            c.functionals(),
            &[AffineFunctional::from_ints(&[-3, -4], 15), AffineFunctional::from_ints(&[4, -3], 0)]
        );
        let u = StepAffineFunction::new(c);
        assert_eq!(u.eval(&Point::from_ints(&[5, 0])), rat(20));

        let apex = DiskFace::Vertex(1);
        assert!(cone.is_exposed(&apex).unwrap());
        assert_eq!(cone.certify(&apex).unwrap().functionals(), &[AffineFunctional::from_ints(&[-1, 0], 5)]);

        let stadium = fixtures::stadium_body();
        let t = tangency_face(&stadium, &Point::from_ints(&[0, 1]));
        assert_eq!(
            stadium.certify(&t).unwrap().functionals(),
            &[AffineFunctional::from_ints(&[0, -1], 1), AffineFunctional::from_ints(&[1, 0], 0)]
        );
        let top = stadium
            .faces()
            .unwrap()
            .edges
            .iter()
            .find(|e| e.normal == Point::from_ints(&[0, -1]))
            .unwrap()
            .reference;
        assert!(stadium.is_exposed(&DiskFace::Edge(top)).unwrap());
        assert_eq!(
            stadium.support_min(&LinearFunctional::from_ints(&[0, -1])).unwrap().1,
            DiskFace::Edge(top)
        );

        assert_eq!(cone.certify(&DiskFace::Whole), Err(Error::WholeBodyNotProper));
        assert_eq!(cone.is_exposed(&DiskFace::Whole), Err(Error::WholeBodyNotProper));
        assert_eq!(cone.certify(&DiskFace::Vertex(0)), Err(Error::UnknownFace));
    }

    #[test]
    fn arc_point_certificates() {
        let cone = fixtures::cone_body();
        let face = DiskFace::ArcPoint { disk: 0, direction: LinearFunctional::from_ints(&[3, 4]) };
        assert_eq!(cone.certify(&face).unwrap().functionals(), &[AffineFunctional::from_ints(&[3, 4], 15)]);
        let skew = DiskFace::ArcPoint { disk: 0, direction: LinearFunctional::from_ints(&[1, 1]) };
        assert!(cone.is_exposed(&skew).unwrap());
        assert_eq!(cone.certify(&skew), Err(Error::IrrationalSupport));
    }

    #[test]
    fn samples_lie_in_body() {
        let mut rng = sample::rng(7);
        for body in [fixtures::cone_body(), fixtures::stadium_body()] {
            for p in body.sample_points(&mut rng, 200).unwrap() {
                assert!(body.contains(&p).unwrap(), "{p}");
            }
        }
    }
}
