//! Sampled invariant checks shared by the test suites and the acceptance
//! run. Each check returns the number of violations it saw.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::certify::FaceCertificate;
use crate::disk::{DiskBody, DiskFace};
use crate::lex::LexPreorder;
use crate::sample;
use crate::step_affine::Cortege;
use crate::{AffineFunctional, FaceDescriptor, LinearFunctional, Point, Polytope, Rational, Region, Result, StepAffineFunction};

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// A point of `P` outside `conv(F)`, by rejection from convex combinations of
/// the vertices. `None` if none turned up.
pub fn sample_outside<R: Rng>(rng: &mut R, poly: &Polytope, face: &Polytope) -> Option<Point> {
    let all: Vec<&Point> = poly.vertices().iter().collect();
    (0..200).find_map(|_| {
        let y = sample::convex_combination(rng, &all);
        (!face.contains(&y)).then_some(y)
    })
}

/// For `y, z ∈ P ∖ F`, the midpoint is in `P` and not in `conv(F)`.
pub fn complement_convexity<R: Rng>(rng: &mut R, poly: &Polytope, s: &FaceDescriptor, pairs: usize) -> Result<usize> {
    let face = poly.sub_polytope(s)?;
    let mut bad = 0;
    for _ in 0..pairs {
        let (Some(y), Some(z)) = (sample_outside(rng, poly, &face), sample_outside(rng, poly, &face)) else {
            bad += 1;
            continue;
        };
        let mid = (&y + &z).scale(&half());
        if !poly.contains(&mid) || face.contains(&mid) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// For `x ∈ conv(F)`, `y ∈ P ∖ F` and `τ ∈ {1/2, 1, 3}`, the point
/// `x − τ(y − x)` is outside `P`.
pub fn open_halfline_exclusion<R: Rng>(rng: &mut R, poly: &Polytope, s: &FaceDescriptor, samples: usize) -> Result<usize> {
    let face = poly.sub_polytope(s)?;
    let fverts: Vec<&Point> = face.vertices().iter().collect();
    let taus = [half(), Rational::one(), Rational::from_integer(3.into())];
    let mut bad = 0;
    for _ in 0..samples {
        let x = sample::convex_combination(rng, &fverts);
        let Some(y) = sample_outside(rng, poly, &face) else {
            bad += 1;
            continue;
        };
        let dir = &y - &x;
        bad += taus.iter().filter(|t| poly.contains(&(&x - &dir.scale(t)))).count();
    }
    Ok(bad)
}

/// Vertices of `P` on `aff(F)` belong to `F`, and sampled points of
/// `aff(F) ∩ P` lie in `conv(F)`. Sampling gives up after `50 × samples`
/// affine combinations.
pub fn affine_hull_intersection<R: Rng>(rng: &mut R, poly: &Polytope, s: &FaceDescriptor, samples: usize) -> Result<usize> {
    let face = poly.sub_polytope(s)?;
    let hull = face.affine_hull();
    let mut bad = poly
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, v)| hull.contains(v) && !s.contains(*i))
        .count();
    let fverts: Vec<&Point> = face.vertices().iter().collect();
    let mut accepted = 0;
    for _ in 0..50 * samples {
        if accepted == samples {
            break;
        }
        let x = sample::affine_combination(rng, &fverts);
        if !poly.contains(&x) {
            continue;
        }
        accepted += 1;
        if !face.contains(&x) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Random validated cortege of the given rank on `ℝ^dim`.
pub fn random_cortege<R: Rng>(rng: &mut R, dim: usize, rank: usize) -> Cortege {
    loop {
        let fs: Vec<AffineFunctional> = (0..rank)
            .map(|_| AffineFunctional::new(sample::functional(rng, dim, 3), sample::rational(rng, -3, 3, 2)))
            .collect();
        if let Ok(c) = Cortege::new(fs) {
            return c;
        }
    }
}

/// Random validated preorder of rank between 1 and `max_rank` on `ℝ^dim`.
pub fn random_preorder<R: Rng>(rng: &mut R, dim: usize, max_rank: usize) -> LexPreorder {
    loop {
        let rank = rng.gen_range(1..=max_rank.min(dim));
        let levels: Vec<LinearFunctional> = (0..rank).map(|_| sample::functional(rng, dim, 2)).collect();
        if let Ok(r) = LexPreorder::new(levels) {
            return r;
        }
    }
}

/// Violation counts for the step-affine algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StepAffineViolations {
    pub evaluator_agreement: usize,
    pub trichotomy: usize,
    pub homogeneity: usize,
    pub midpoint_nonnegative: usize,
    pub midpoint_negative: usize,
}

impl StepAffineViolations {
    pub fn total(&self) -> usize {
        self.evaluator_agreement + self.trichotomy + self.homogeneity + self.midpoint_nonnegative + self.midpoint_negative
    }

    pub fn add(&mut self, other: &Self) {
        self.evaluator_agreement += other.evaluator_agreement;
        self.trichotomy += other.trichotomy;
        self.homogeneity += other.homogeneity;
        self.midpoint_nonnegative += other.midpoint_nonnegative;
        self.midpoint_negative += other.midpoint_negative;
    }
}

/// Samples points around the zero set of `u` (so that every level gets to
/// decide some of them) and checks the algebraic identities.
pub fn step_affine_algebra<R: Rng>(rng: &mut R, cortege: &Cortege, samples: usize) -> Result<StepAffineViolations> {
    let u = StepAffineFunction::new(cortege.clone());
    let (_, anchor) = u.decompose_regular()?;
    let zero = u.zero_set().expect("validated corteges are regular");
    let dim = cortege.dim();
    let mut v = StepAffineViolations::default();
    let draw = |rng: &mut R| -> Point {
        // half the points sit on the zero sets of leading levels
        let t: Vec<Rational> = (0..zero.dim()).map(|_| sample::rational(rng, -2, 2, 3)).collect();
        let on_zero = zero.at(&t);
        match rng.gen_range(0..3) {
            0 => sample::point(rng, dim, -3, 3, 4),
            1 => on_zero,
            _ => {
                let k = rng.gen_range(0..dim);
                let mut c = on_zero.into_coords();
                c[k] += sample::rational(rng, -1, 1, 5);
                Point::new(c)
            }
        }
    };
    for _ in 0..samples {
        let x = draw(rng);
        let y = draw(rng);
        let ux = u.eval(&x);
        if u.eval_by_least_nonvanishing(&x) != ux {
            v.evaluator_agreement += 1;
        }
        let region = u.classify(&x)?;
        let hits = [ux.is_negative(), ux.is_zero(), ux.is_positive()].iter().filter(|b| **b).count();
        let expected = if ux.is_positive() {
            Region::PositiveSide
        } else if ux.is_negative() {
            Region::NegativeSide
        } else {
            Region::ZeroManifold
        };
        if hits != 1 || region != expected || (region == Region::ZeroManifold) != zero.contains(&x) {
            v.trichotomy += 1;
        }
        let t = sample::rational(rng, 0, 4, 7);
        let t = if t.is_zero() { Rational::one() } else { t };
        let moved = &anchor + &(&x - &anchor).scale(&t);
        if u.eval(&moved) != &t * &ux {
            v.homogeneity += 1;
        }
        let uy = u.eval(&y);
        let um = u.eval(&(&x + &y).scale(&half()));
        if !ux.is_negative() && !uy.is_negative() && um.is_negative() {
            v.midpoint_nonnegative += 1;
        }
        if ux.is_negative() && uy.is_negative() && !um.is_negative() {
            v.midpoint_negative += 1;
        }
    }
    Ok(v)
}

/// `chain[i] ⊆ chain[i-1]`, and `chain[i]` is exactly the set of vertices of
/// `chain[i-1]` minimising the linear part of level `i`.
pub fn chain_is_nested(poly: &Polytope, cert: &FaceCertificate) -> bool {
    let levels = cert.cortege.functionals();
    if cert.chain.len() != levels.len() + 1 {
        return false;
    }
    cert.chain.windows(2).zip(levels).all(|(w, f)| {
        let (outer, inner) = (&w[0], &w[1]);
        if !inner.is_subset(outer) {
            return false;
        }
        let values: Vec<(usize, Rational)> = outer.indices().iter().map(|&i| (i, f.linear.eval(poly.vertex(i)))).collect();
        let Some(min) = values.iter().map(|(_, v)| v).min() else {
            return false;
        };
        let argmin: Vec<usize> = values.iter().filter(|(_, v)| v == min).map(|(i, _)| *i).collect();
        argmin == inner.indices()
    })
}

/// Outcome of the tangency-point check on sampled body points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyCheck {
    pub exposed: bool,
    pub rank: usize,
    pub negative_samples: usize,
    /// Samples where the certificate vanishes, other than the face point.
    pub stray_zeros: usize,
    pub vanishes_at_face: bool,
}

impl TangencyCheck {
    pub fn passed(&self) -> bool {
        !self.exposed && self.rank == 2 && self.negative_samples == 0 && self.stray_zeros == 0 && self.vanishes_at_face
    }
}

pub fn tangency_check<R: Rng>(rng: &mut R, body: &DiskBody, face: &DiskFace, point: &Point, samples: usize) -> Result<TangencyCheck> {
    let cortege = body.certify(face)?;
    let u = StepAffineFunction::new(cortege.clone());
    let mut negative_samples = 0;
    let mut stray_zeros = 0;
    for x in body.sample_points(rng, samples)? {
        let v = u.eval(&x);
        if v.is_negative() {
            negative_samples += 1;
        }
        if v.is_zero() && &x != point {
            stray_zeros += 1;
        }
    }
    Ok(TangencyCheck {
        exposed: body.is_exposed(face)?,
        rank: cortege.rank(),
        negative_samples,
        stray_zeros,
        vanishes_at_face: u.eval(point).is_zero(),
    })
}
