//! Step-affine certificates for proper faces of polytopes.
//!
//! A certificate is a cortege `f_1, …, f_m` together with the chain
//! `F_0 = P ⊇ F_1 ⊇ … ⊇ F_m = F`, where each `f_i` is nonnegative on
//! `F_{i-1}` and vanishes there exactly on `F_i`. The step-affine function of
//! the cortege is then nonnegative on `P` with zero set `F`.
//!
//! [`certify`] produces rank-1 certificates (every polytope face is exposed);
//! [`chain_certificate`] walks the tight facets one at a time and produces a
//! genuine chain, usually of higher rank.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::lex::LexPreorder;
use crate::step_affine::{validate_cortege, Cortege, CortegeDefect, Region, StepAffineFunction};
use crate::{AffineFunctional, Error, FaceDescriptor, LinearFunctional, Point, Polytope, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceCertificate {
    pub cortege: Cortege,
    pub chain: Vec<FaceDescriptor>,
}

impl FaceCertificate {
    pub fn rank(&self) -> usize {
        self.cortege.rank()
    }

    pub fn function(&self) -> StepAffineFunction {
        StepAffineFunction::new(self.cortege.clone())
    }

    pub fn face(&self) -> &FaceDescriptor {
        self.chain.last().expect("chain holds at least F_0")
    }
}

/// `w, z ∈ P` with `interior` on the open segment `(w, z)`, `interior ∈ conv(S)`
/// and `w ∉ conv(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NotAFaceWitness {
    pub w: Point,
    pub z: Point,
    pub interior: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CertifyResult {
    Certificate(FaceCertificate),
    NotAFace(NotAFaceWitness),
}

fn check_proper(poly: &Polytope, s: &FaceDescriptor) -> Result<()> {
    poly.check_descriptor(s)?;
    if s.len() == poly.num_vertices() {
        return Err(Error::ImproperFace);
    }
    Ok(())
}

/// Rank-1 certificate from the sum of the slacks of the facets tight at the
/// barycenter of `s`, or a witness pair when `conv(s)` is not a face.
pub fn certify(poly: &Polytope, s: &FaceDescriptor) -> Result<CertifyResult> {
    check_proper(poly, s)?;
    let b = poly.barycenter(s);
    let tight = poly.tight_facets(&b);
    let g = poly.vertices_on(&tight);
    if &g != s {
        return Ok(CertifyResult::NotAFace(witness(poly, s, &b, &g)));
    }
    let dim = poly.ambient_dim();
    let mut coeffs = vec![Rational::zero(); dim];
    let mut offset = Rational::zero();
    for &t in &tight {
        let facet = &poly.facets()[t];
        for (c, a) in coeffs.iter_mut().zip(facet.functional.coeffs()) {
            *c -= a;
        }
        offset += &facet.offset;
    }
    let u = AffineFunctional::new(LinearFunctional::new(coeffs), offset);
    let cortege = validate_cortege(vec![u])?;
    Ok(CertifyResult::Certificate(FaceCertificate { cortege, chain: vec![poly.full_face(), s.clone()] }))
}

fn witness(poly: &Polytope, s: &FaceDescriptor, b: &Point, g: &FaceDescriptor) -> NotAFaceWitness {
    let wi = g
        .indices()
        .iter()
        .copied()
        .find(|&i| !s.contains(i))
        .expect("smallest face strictly contains s");
    let w = poly.vertex(wi).clone();
    let dir = b - &w;
    // ratio test along b + t·dir; facets tight on g are constant on the line
    let bound = poly
        .facets()
        .iter()
        .filter_map(|f| {
            let rate = f.functional.eval(&dir);
            rate.is_positive().then(|| f.slack(b) / rate)
        })
        .min();
    let one = Rational::one();
    let t = match bound {
        Some(t) if t <= one => t / Rational::from_integer(2.into()),
        _ => one,
    };
    let z = b + &dir.scale(&t);
    NotAFaceWitness { w, z, interior: b.clone() }
}

/// Chain certificate following the facets tight at the barycenter of `s` in
/// ascending `(functional, offset)` order, skipping facets that do not cut
/// the current face.
pub fn chain_certificate(poly: &Polytope, s: &FaceDescriptor) -> Result<FaceCertificate> {
    check_proper(poly, s)?;
    let b = poly.barycenter(s);
    let tight = poly.tight_facets(&b);
    if &poly.vertices_on(&tight) != s {
        return Err(Error::NotAFace);
    }
    let mut current = poly.full_face();
    let mut chain = vec![current.clone()];
    let mut levels = Vec::new();
    for &t in &tight {
        if &current == s {
            break;
        }
        let facet = &poly.facets()[t];
        let next = FaceDescriptor::new(
            current
                .indices()
                .iter()
                .copied()
                .filter(|i| facet.tight_vertices.binary_search(i).is_ok())
                .collect(),
        );
        if next == current {
            continue;
        }
        levels.push(facet.slack_functional());
        chain.push(next.clone());
        current = next;
    }
    debug_assert_eq!(&current, s);
    let cortege = validate_cortege(levels)?;
    Ok(FaceCertificate { cortege, chain })
}

/// Why a certificate was rejected. `condition()` groups reasons into the four
/// acceptance conditions: (1) valid cortege, (2) chainwise sign pattern,
/// (3) chain starts at the whole polytope, (4) chain ends at the face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    InvalidCortege { level: usize, defect: CortegeDefect },
    EmptyCortege,
    DimensionMismatch,
    ChainStart,
    ChainEnd,
    /// The chain must have exactly one more element than the cortege.
    ChainLength { levels: usize, chain: usize },
    IndexOutOfRange { index: usize },
    NotNested { level: usize },
    Negative { level: usize, vertex: usize },
    VanishesOffChain { level: usize, vertex: usize },
    NonzeroOnChain { level: usize, vertex: usize },
}

impl RejectReason {
    pub fn condition(&self) -> u8 {
        match self {
            Self::InvalidCortege { .. } | Self::EmptyCortege | Self::DimensionMismatch => 1,
            Self::ChainStart => 3,
            Self::ChainEnd => 4,
            Self::ChainLength { .. } | Self::IndexOutOfRange { .. } | Self::NotNested { .. } => 2,
            Self::Negative { .. } | Self::VanishesOffChain { .. } | Self::NonzeroOnChain { .. } => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

pub fn verify_certificate(poly: &Polytope, s: &FaceDescriptor, cert: &FaceCertificate) -> Verdict {
    verify_parts(poly, s, cert.cortege.functionals(), &cert.chain)
}

/// Verification on raw parts, so that certificates read from outside can be
/// checked without first being trusted as a cortege. Structural conditions
/// (1, 3, 4) are checked before the chainwise sign pattern (2).
pub fn verify_parts(
    poly: &Polytope,
    s: &FaceDescriptor,
    functionals: &[AffineFunctional],
    chain: &[FaceDescriptor],
) -> Verdict {
    use RejectReason::*;
    let reject = |r| Verdict::Reject(r);
    if functionals.iter().any(|f| f.dim() != poly.ambient_dim()) {
        return reject(DimensionMismatch);
    }
    match validate_cortege(functionals.to_vec()) {
        Ok(_) => {}
        Err(Error::InvalidCortege { index, defect }) => return reject(InvalidCortege { level: index, defect }),
        Err(_) => return reject(EmptyCortege),
    }
    if chain.first() != Some(&poly.full_face()) {
        return reject(ChainStart);
    }
    if chain.last() != Some(s) {
        return reject(ChainEnd);
    }
    if chain.len() != functionals.len() + 1 {
        return reject(ChainLength { levels: functionals.len(), chain: chain.len() });
    }
    let n = poly.num_vertices();
    for face in chain {
        if let Some(&index) = face.indices().iter().find(|&&i| i >= n) {
            return reject(IndexOutOfRange { index });
        }
    }
    for (i, f) in functionals.iter().enumerate() {
        let level = i + 1;
        let (outer, inner) = (&chain[i], &chain[i + 1]);
        if !inner.is_subset(outer) {
            return reject(NotNested { level });
        }
        let values: Vec<(usize, Rational)> = outer.indices().iter().map(|&v| (v, f.eval(poly.vertex(v)))).collect();
        if let Some((v, _)) = values.iter().find(|(_, value)| value.is_negative()) {
            return reject(Negative { level, vertex: *v });
        }
        for (v, value) in values {
            match (value.is_zero(), inner.contains(v)) {
                (true, false) => return reject(VanishesOffChain { level, vertex: v }),
                (false, true) => return reject(NonzeroOnChain { level, vertex: v }),
                _ => {}
            }
        }
    }
    Verdict::Accept
}

/// Outcome of running the four equivalent characterisations of a face.
///
/// * `a`: `conv(S)` is a face (combinatorial test).
/// * `b`: the certificate's zero manifold and positive side split the
///   vertices and a few interior points of `P` exactly along `S`.
/// * `c`: the preorder induced by the certificate has `Min(P | ⪯) = S`.
/// * `d`: a certificate exists and verifies.
///
/// `b` and `c` are `None` when there is no certificate to derive them from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivalenceReport {
    pub a: bool,
    pub b: Option<bool>,
    pub c: Option<bool>,
    pub d: bool,
    /// Exact validity of the non-face witness, when one was produced.
    pub witness_valid: Option<bool>,
    pub rank: Option<usize>,
}

impl EquivalenceReport {
    pub fn consistent(&self) -> bool {
        if self.a {
            self.b == Some(true) && self.c == Some(true) && self.d
        } else {
            !self.d && self.b.is_none() && self.c.is_none() && self.witness_valid == Some(true)
        }
    }
}

pub fn equivalence_report(poly: &Polytope, s: &FaceDescriptor) -> Result<EquivalenceReport> {
    check_proper(poly, s)?;
    let a = poly.is_face(s)?;
    match certify(poly, s)? {
        CertifyResult::NotAFace(wit) => Ok(EquivalenceReport {
            a,
            b: None,
            c: None,
            d: false,
            witness_valid: Some(witness_is_valid(poly, s, &wit)?),
            rank: None,
        }),
        CertifyResult::Certificate(cert) => {
            let d = verify_certificate(poly, s, &cert).is_accept();
            let u = cert.function();
            let b = semispace_leg(poly, s, &u)?;
            let (w, _) = u.decompose_regular()?;
            let order = LexPreorder::new(w.cortege().linear_parts())?;
            let c = &order.min_set(poly)? == s;
            Ok(EquivalenceReport { a, b: Some(b), c: Some(c), d, witness_valid: None, rank: Some(cert.rank()) })
        }
    }
}

fn semispace_leg(poly: &Polytope, s: &FaceDescriptor, u: &StepAffineFunction) -> Result<bool> {
    let Some(m) = u.zero_set() else {
        return Ok(false);
    };
    let expect = |x: &Point, inside: bool| -> Result<bool> {
        let region = u.classify(x)?;
        let want = if inside { Region::ZeroManifold } else { Region::PositiveSide };
        Ok(region == want && m.contains(x) == inside)
    };
    for (i, v) in poly.vertices().iter().enumerate() {
        if !expect(v, s.contains(i))? {
            return Ok(false);
        }
    }
    let b = poly.barycenter(s);
    if !expect(&b, true)? || !expect(&poly.barycenter(&poly.full_face()), false)? {
        return Ok(false);
    }
    let half = Rational::new(1.into(), 2.into());
    for (i, v) in poly.vertices().iter().enumerate() {
        if s.contains(i) {
            continue;
        }
        let mid = (&b + v).scale(&half);
        if !expect(&mid, false)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact check of the witness properties.
pub fn witness_is_valid(poly: &Polytope, s: &FaceDescriptor, wit: &NotAFaceWitness) -> Result<bool> {
    let face = poly.sub_polytope(s)?;
    let on_segment = {
        // interior = (1-α) w + α z with 0 < α < 1; solve α on one coordinate
        let d = &wit.z - &wit.w;
        let k = (0..d.dim()).find(|&k| !d[k].is_zero());
        match k {
            None => false,
            Some(k) => {
                let alpha = (&wit.interior[k] - &wit.w[k]) / &d[k];
                alpha.is_positive() && alpha < Rational::one() && &wit.w + &d.scale(&alpha) == wit.interior
            }
        }
    };
    Ok(poly.contains(&wit.w)
        && poly.contains(&wit.z)
        && !face.contains(&wit.w)
        && face.contains(&wit.interior)
        && on_segment)
}
