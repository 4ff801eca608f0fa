//! JSON documents read and written by the CLI.
//!
//! Rationals travel as strings `"p"` or `"p/q"` in lowest terms. Documents
//! are emitted through [`to_canonical_string`], which sorts object keys, so
//! equal values always produce identical bytes.

use facelex_core::certify::{EquivalenceReport, FaceCertificate, NotAFaceWitness, RejectReason};
use facelex_core::disk::{ArcFamily, Disk, DiskBody, DiskFace, Edge, EdgeRef, End, Side};
use facelex_core::exact::parse_rational;
use facelex_core::lex::LexPreorder;
use facelex_core::polytope::Facet;
use facelex_core::step_affine::Cortege;
use facelex_core::{AffineFunctional, FaceDescriptor, LinearFunctional, Point, Polytope, Rational};
use serde::{Deserialize, Serialize};

use crate::error::FormatError;

pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn rationals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(rational_str).collect()
}

fn parse_all(xs: &[String]) -> Result<Vec<Rational>, FormatError> {
    xs.iter().map(|s| parse_rational(s).map_err(FormatError::from)).collect()
}

/// Serialises through `serde_json::Value`, whose maps are ordered, and ends
/// the document with a newline.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents are plain data");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialise");
    s.push('\n');
    s
}

pub fn point_json(p: &Point) -> Vec<String> {
    rationals(p.coords())
}

pub fn parse_point(coords: &[String]) -> Result<Point, FormatError> {
    Ok(Point::new(parse_all(coords)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &Polytope) -> Self {
        Self { ambient_dim: p.ambient_dim(), vertices: p.vertices().iter().map(point_json).collect() }
    }

    /// Builds the polytope and also returns the input points that were
    /// dropped as duplicates or non-extreme.
    pub fn to_polytope(&self) -> Result<(Polytope, Vec<Point>), FormatError> {
        let mut pts = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if v.len() != self.ambient_dim {
                return Err(FormatError::Dimension { expected: self.ambient_dim, found: v.len() });
            }
            pts.push(parse_point(v)?);
        }
        Ok(Polytope::with_report(pts)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceJson {
    pub vertex_indices: Vec<usize>,
}

impl From<&FaceDescriptor> for FaceJson {
    fn from(f: &FaceDescriptor) -> Self {
        Self { vertex_indices: f.indices().to_vec() }
    }
}

impl From<&FaceJson> for FaceDescriptor {
    fn from(f: &FaceJson) -> Self {
        FaceDescriptor::new(f.vertex_indices.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalJson {
    pub coeffs: Vec<String>,
    pub offset: String,
}

impl From<&AffineFunctional> for FunctionalJson {
    fn from(f: &AffineFunctional) -> Self {
        Self { coeffs: rationals(f.linear.coeffs()), offset: rational_str(&f.offset) }
    }
}

impl FunctionalJson {
    pub fn to_functional(&self) -> Result<AffineFunctional, FormatError> {
        Ok(AffineFunctional::new(LinearFunctional::new(parse_all(&self.coeffs)?), parse_rational(&self.offset)?))
    }
}

/// Order of `functionals` is the cortege order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CortegeJson {
    pub functionals: Vec<FunctionalJson>,
}

impl From<&Cortege> for CortegeJson {
    fn from(c: &Cortege) -> Self {
        Self::from_functionals(c.functionals())
    }
}

impl CortegeJson {
    pub fn from_functionals(fs: &[AffineFunctional]) -> Self {
        Self { functionals: fs.iter().map(FunctionalJson::from).collect() }
    }

    /// Parsed but not validated.
    pub fn to_functionals(&self) -> Result<Vec<AffineFunctional>, FormatError> {
        self.functionals.iter().map(FunctionalJson::to_functional).collect()
    }

    pub fn to_cortege(&self) -> Result<Cortege, FormatError> {
        Ok(Cortege::new(self.to_functionals()?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreorderJson {
    pub levels: Vec<Vec<String>>,
}

impl From<&LexPreorder> for PreorderJson {
    fn from(r: &LexPreorder) -> Self {
        Self { levels: r.levels().iter().map(|l| rationals(l.coeffs())).collect() }
    }
}

impl PreorderJson {
    pub fn to_preorder(&self) -> Result<LexPreorder, FormatError> {
        let levels = self
            .levels
            .iter()
            .map(|l| parse_all(l).map(LinearFunctional::new))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LexPreorder::new(levels)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub cortege: CortegeJson,
    pub chain: Vec<Vec<usize>>,
}

impl From<&FaceCertificate> for CertificateJson {
    fn from(c: &FaceCertificate) -> Self {
        Self {
            cortege: CortegeJson::from(&c.cortege),
            chain: c.chain.iter().map(|f| f.indices().to_vec()).collect(),
        }
    }
}

impl CertificateJson {
    pub fn chain(&self) -> Vec<FaceDescriptor> {
        self.chain.iter().map(|f| FaceDescriptor::new(f.clone())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub w: Vec<String>,
    pub z: Vec<String>,
    pub interior: Vec<String>,
}

impl From<&NotAFaceWitness> for WitnessJson {
    fn from(w: &NotAFaceWitness) -> Self {
        Self { w: point_json(&w.w), z: point_json(&w.z), interior: point_json(&w.interior) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub functional: Vec<String>,
    pub offset: String,
    pub tight_vertices: Vec<usize>,
}

impl From<&Facet> for FacetJson {
    fn from(f: &Facet) -> Self {
        Self {
            functional: rationals(f.functional.coeffs()),
            offset: rational_str(&f.offset),
            tight_vertices: f.tight_vertices.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub a: bool,
    pub b: Option<bool>,
    pub c: Option<bool>,
    pub d: bool,
    pub consistent: bool,
    pub rank: Option<usize>,
    pub witness_valid: Option<bool>,
}

impl From<&EquivalenceReport> for ReportJson {
    fn from(r: &EquivalenceReport) -> Self {
        Self {
            a: r.a,
            b: r.b,
            c: r.c,
            d: r.d,
            consistent: r.consistent(),
            rank: r.rank,
            witness_valid: r.witness_valid,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectJson {
    pub condition: u8,
    pub reason: String,
}

impl From<&RejectReason> for RejectJson {
    fn from(r: &RejectReason) -> Self {
        Self { condition: r.condition(), reason: format!("{r:?}") }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskJson {
    pub center: Vec<String>,
    pub radius: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskBodyJson {
    pub disks: Vec<DiskJson>,
}

impl From<&DiskBody> for DiskBodyJson {
    fn from(b: &DiskBody) -> Self {
        Self {
            disks: b
                .disks()
                .iter()
                .map(|d| DiskJson { center: point_json(&d.center), radius: rational_str(&d.radius) })
                .collect(),
        }
    }
}

impl DiskBodyJson {
    pub fn to_body(&self) -> Result<DiskBody, FormatError> {
        let disks = self
            .disks
            .iter()
            .map(|d| Ok(Disk { center: parse_point(&d.center)?, radius: parse_rational(&d.radius)? }))
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(DiskBody::new(disks)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideJson {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndJson {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub disks: [usize; 2],
    pub side: SideJson,
}

impl From<&EdgeRef> for EdgeJson {
    fn from(e: &EdgeRef) -> Self {
        let side = match e.side {
            Side::Left => SideJson::Left,
            Side::Right => SideJson::Right,
        };
        Self { disks: [e.i, e.j], side }
    }
}

impl From<&EdgeJson> for EdgeRef {
    fn from(e: &EdgeJson) -> Self {
        let side = match e.side {
            SideJson::Left => Side::Left,
            SideJson::Right => Side::Right,
        };
        EdgeRef { i: e.disks[0], j: e.disks[1], side }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DiskFaceJson {
    Whole,
    Edge { edge: EdgeJson },
    ArcPoint { disk: usize, direction: Vec<String> },
    Vertex { disk: usize },
    TangencyPoint { edge: EdgeJson, end: EndJson },
}

impl From<&DiskFace> for DiskFaceJson {
    fn from(f: &DiskFace) -> Self {
        match f {
            DiskFace::Whole => Self::Whole,
            DiskFace::Edge(e) => Self::Edge { edge: e.into() },
            DiskFace::ArcPoint { disk, direction } => {
                Self::ArcPoint { disk: *disk, direction: rationals(direction.coeffs()) }
            }
            DiskFace::Vertex(k) => Self::Vertex { disk: *k },
            DiskFace::TangencyPoint { edge, end } => Self::TangencyPoint {
                edge: edge.into(),
                end: match end {
                    End::First => EndJson::First,
                    End::Second => EndJson::Second,
                },
            },
        }
    }
}

impl DiskFaceJson {
    pub fn to_face(&self) -> Result<DiskFace, FormatError> {
        Ok(match self {
            Self::Whole => DiskFace::Whole,
            Self::Edge { edge } => DiskFace::Edge(edge.into()),
            Self::ArcPoint { disk, direction } => {
                DiskFace::ArcPoint { disk: *disk, direction: LinearFunctional::new(parse_all(direction)?) }
            }
            Self::Vertex { disk } => DiskFace::Vertex(*disk),
            Self::TangencyPoint { edge, end } => DiskFace::TangencyPoint {
                edge: edge.into(),
                end: match end {
                    EndJson::First => End::First,
                    EndJson::Second => End::Second,
                },
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDetailJson {
    pub edge: EdgeJson,
    pub normal: Vec<String>,
    pub level: String,
    pub ends: [Vec<String>; 2],
}

impl From<&Edge> for EdgeDetailJson {
    fn from(e: &Edge) -> Self {
        Self {
            edge: (&e.reference).into(),
            normal: point_json(&e.normal),
            level: rational_str(&e.level),
            ends: [point_json(&e.ends[0]), point_json(&e.ends[1])],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcFamilyJson {
    pub kind: String,
    pub disk: usize,
    pub from: Option<Vec<String>>,
    pub to: Option<Vec<String>>,
}

impl From<&ArcFamily> for ArcFamilyJson {
    fn from(a: &ArcFamily) -> Self {
        Self {
            kind: "arc_family".into(),
            disk: a.disk,
            from: a.from.as_ref().map(point_json),
            to: a.to.as_ref().map(point_json),
        }
    }
}
