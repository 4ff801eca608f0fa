//! Argument parsing and subcommand execution.
//!
//! Exit codes: 0 success or accept, 1 expected negative (not a face,
//! rejected certificate), 2 usage or format error, 3 cross-check failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use facelex_core::certify::{
    certify, chain_certificate, equivalence_report, verify_parts, witness_is_valid, CertifyResult, FaceCertificate,
    Verdict,
};
use facelex_core::disk::{DiskBody, DiskFace};
use facelex_core::oracle::{oracle_faces, oracle_lex_argmin, oracle_refute_face};
use facelex_core::sample::{self, DEFAULT_SEED};
use facelex_core::step_affine::Cortege;
use facelex_core::{Error as CoreError, FaceDescriptor, Point, Polytope, Region, StepAffineFunction};
use num_traits::{Signed, Zero};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::error::FormatError;
use crate::format::*;

/// Trials used by the randomized refuter under `--cross-check`.
pub const REFUTE_TRIALS: usize = 2000;
/// Body samples used by `diskhull-certify --cross-check`.
pub const DISK_SAMPLES: usize = 500;

#[derive(Debug, Parser)]
#[command(name = "facelex", version, about = "Exact face certificates for polytopes and disk hulls")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Also run the brute-force oracle path; exit 3 on disagreement.
    #[arg(long, global = true)]
    pub cross_check: bool,
    /// Write the output document here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facets and every nonempty face of a polytope.
    Faces {
        #[arg(long)]
        input: PathBuf,
    },
    /// Rank-1 certificate for a face, or a witness that it is not one.
    Certify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex indices, inline JSON, or a JSON file.
        #[arg(long)]
        face: String,
    },
    /// Chain certificate built one tight facet at a time.
    Chain {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        face: String,
    },
    /// Check a certificate document against a polytope and a face.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        face: String,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Lexicographic minimisers of a preorder over a polytope.
    Lexmin {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        preorder: PathBuf,
    },
    /// Value of the step-affine function of a cortege at a point.
    Eval {
        #[arg(long)]
        cortege: PathBuf,
        /// Comma-separated rationals, e.g. `1/2,-3`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Sign region of a point under a cortege.
    Classify {
        #[arg(long)]
        cortege: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The four face characterizations side by side.
    Equivalence {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        face: String,
    },
    /// Certificate for a face of a disk hull.
    DiskhullCertify {
        #[arg(long)]
        input: PathBuf,
        /// Inline JSON or a JSON file holding a disk face.
        #[arg(long)]
        face: String,
    },
    /// Symbolic face list of a disk hull.
    DiskhullFaces {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Format(FormatError),
    CrossCheck(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Format(e.into())
    }
}

type Run = Result<(u8, Value), Failure>;

pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli.command, cli.cross_check) {
        Ok((code, doc)) => {
            let text = to_canonical_string(&doc);
            match &cli.out {
                None => Outcome { code, stdout: text, stderr: String::new() },
                Some(path) => match fs::write(path, text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
            }
        }
        Err(Failure::Format(e)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(Failure::CrossCheck(msg)) => {
            Outcome { code: 3, stdout: String::new(), stderr: format!("cross-check failed: {msg}\n") }
        }
    }
}

fn read_text(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    Ok(serde_json::from_str(&read_text(path)?)?)
}

/// Inline JSON when the argument starts with `{`, a file path otherwise.
fn json_arg<T: DeserializeOwned>(arg: &str) -> Result<T, FormatError> {
    if arg.trim_start().starts_with('{') {
        Ok(serde_json::from_str(arg)?)
    } else {
        read_json(Path::new(arg))
    }
}

pub fn parse_face_arg(arg: &str) -> Result<FaceDescriptor, FormatError> {
    let plain = !arg.is_empty() && arg.chars().all(|c| c.is_ascii_digit() || c == ',' || c == ' ');
    if plain {
        let indices = arg
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| FormatError::Argument(format!("bad vertex index {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(FaceDescriptor::new(indices));
    }
    let doc: FaceJson = json_arg(arg)?;
    Ok((&doc).into())
}

pub fn parse_point_arg(arg: &str) -> Result<Point, FormatError> {
    let coords: Vec<String> = arg.split(',').map(|t| t.trim().to_string()).collect();
    parse_point(&coords)
}

fn load_polytope(path: &Path) -> Result<(Polytope, Vec<Point>), FormatError> {
    read_json::<PolytopeJson>(path)?.to_polytope()
}

fn load_cortege(path: &Path) -> Result<Cortege, FormatError> {
    read_json::<CortegeJson>(path)?.to_cortege()
}

fn check_dim(expected: usize, p: &Point) -> Result<(), FormatError> {
    if p.dim() != expected {
        return Err(CoreError::DimensionMismatch { expected, found: p.dim() }.into());
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents are plain data")
}

fn not_a_face_doc(poly: &Polytope, s: &FaceDescriptor) -> Result<Value, Failure> {
    match certify(poly, s)? {
        CertifyResult::NotAFace(w) => Ok(json!({ "result": "not_a_face", "witness": to_value(&WitnessJson::from(&w)) })),
        CertifyResult::Certificate(_) => Err(Failure::CrossCheck("certify and chain disagree on face status".into())),
    }
}

fn oracle_is_face(poly: &Polytope, s: &FaceDescriptor) -> Result<bool, Failure> {
    Ok(oracle_faces(poly)?.contains(s))
}

fn cross_check_certificate(poly: &Polytope, s: &FaceDescriptor, cert: &FaceCertificate) -> Result<(), Failure> {
    if let Verdict::Reject(r) = facelex_core::certify::verify_certificate(poly, s, cert) {
        return Err(Failure::CrossCheck(format!("certificate rejected: {r:?}")));
    }
    if !oracle_is_face(poly, s)? {
        return Err(Failure::CrossCheck("oracle does not list the certified face".into()));
    }
    if oracle_refute_face(poly, s, REFUTE_TRIALS, DEFAULT_SEED)?.is_some() {
        return Err(Failure::CrossCheck("refuter found a segment leaving the certified face".into()));
    }
    Ok(())
}

fn run(cmd: &Command, cross: bool) -> Run {
    match cmd {
        Command::Faces { input } => faces(input, cross),
        Command::Certify { input, face } => {
            let (poly, _) = load_polytope(input)?;
            let s = parse_face_arg(face)?;
            match certify(&poly, &s)? {
                CertifyResult::Certificate(cert) => {
                    if cross {
                        cross_check_certificate(&poly, &s, &cert)?;
                    }
                    Ok((0, to_value(&CertificateJson::from(&cert))))
                }
                CertifyResult::NotAFace(w) => {
                    if cross && (!witness_is_valid(&poly, &s, &w)? || oracle_is_face(&poly, &s)?) {
                        return Err(Failure::CrossCheck("non-face witness is not confirmed".into()));
                    }
                    Ok((1, json!({ "result": "not_a_face", "witness": to_value(&WitnessJson::from(&w)) })))
                }
            }
        }
        Command::Chain { input, face } => {
            let (poly, _) = load_polytope(input)?;
            let s = parse_face_arg(face)?;
            match chain_certificate(&poly, &s) {
                Ok(cert) => {
                    if cross {
                        cross_check_certificate(&poly, &s, &cert)?;
                    }
                    Ok((0, to_value(&CertificateJson::from(&cert))))
                }
                Err(CoreError::NotAFace) => {
                    if cross && oracle_is_face(&poly, &s)? {
                        return Err(Failure::CrossCheck("oracle lists a face the chain builder refused".into()));
                    }
                    Ok((1, not_a_face_doc(&poly, &s)?))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { input, face, certificate } => {
            let (poly, _) = load_polytope(input)?;
            let s = parse_face_arg(face)?;
            let doc: CertificateJson = read_json(certificate)?;
            let levels = doc.cortege.to_functionals()?;
            match verify_parts(&poly, &s, &levels, &doc.chain()) {
                Verdict::Accept => {
                    if cross && !oracle_is_face(&poly, &s)? {
                        return Err(Failure::CrossCheck("accepted certificate for a set the oracle rejects".into()));
                    }
                    Ok((0, json!({ "verdict": "accept" })))
                }
                Verdict::Reject(r) => {
                    let rj = RejectJson::from(&r);
                    Ok((1, json!({ "verdict": "reject", "condition": rj.condition, "reason": rj.reason })))
                }
            }
        }
        Command::Lexmin { input, preorder } => {
            let (poly, _) = load_polytope(input)?;
            let order = read_json::<PreorderJson>(preorder)?.to_preorder()?;
            if order.dim() != poly.ambient_dim() {
                return Err(CoreError::DimensionMismatch { expected: poly.ambient_dim(), found: order.dim() }.into());
            }
            let min = order.min_set(&poly)?;
            if cross && oracle_lex_argmin(&poly, order.levels()) != min {
                return Err(Failure::CrossCheck("tuple-minimum oracle disagrees".into()));
            }
            Ok((0, to_value(&FaceJson::from(&min))))
        }
        Command::Eval { cortege, point } => {
            let c = load_cortege(cortege)?;
            let x = parse_point_arg(point)?;
            check_dim(c.dim(), &x)?;
            let u = StepAffineFunction::new(c);
            let value = u.eval(&x);
            if cross && u.eval_by_least_nonvanishing(&x) != value {
                return Err(Failure::CrossCheck("least-nonvanishing evaluation disagrees".into()));
            }
            Ok((0, json!({ "level": u.deciding_level(&x) + 1, "value": rational_str(&value) })))
        }
        Command::Classify { cortege, point } => {
            let c = load_cortege(cortege)?;
            let x = parse_point_arg(point)?;
            check_dim(c.dim(), &x)?;
            let u = StepAffineFunction::new(c);
            let region = u.classify(&x)?;
            if cross {
                let on_zero_set = u.zero_set().is_some_and(|m| m.contains(&x));
                let v = u.eval_by_least_nonvanishing(&x);
                let agrees = match region {
                    Region::ZeroManifold => v.is_zero() && on_zero_set,
                    Region::PositiveSide => v.is_positive() && !on_zero_set,
                    Region::NegativeSide => v.is_negative() && !on_zero_set,
                };
                if !agrees {
                    return Err(Failure::CrossCheck("region disagrees with the zero set".into()));
                }
            }
            let name = match region {
                Region::NegativeSide => "negative_side",
                Region::ZeroManifold => "zero_manifold",
                Region::PositiveSide => "positive_side",
            };
            Ok((0, json!({ "region": name })))
        }
        Command::Equivalence { input, face } => {
            let (poly, _) = load_polytope(input)?;
            let s = parse_face_arg(face)?;
            let report = equivalence_report(&poly, &s)?;
            if cross && oracle_is_face(&poly, &s)? != report.a {
                return Err(Failure::CrossCheck("oracle disagrees with leg a".into()));
            }
            let code = match (report.consistent(), report.a) {
                (false, _) => {
                    return Err(Failure::CrossCheck(format!(
                        "legs disagree: {}",
                        to_canonical_string(&ReportJson::from(&report)).trim_end()
                    )))
                }
                (true, true) => 0,
                (true, false) => 1,
            };
            Ok((code, to_value(&ReportJson::from(&report))))
        }
        Command::DiskhullFaces { input } => {
            let body = read_json::<DiskBodyJson>(input)?.to_body()?;
            let list = body.faces()?;
            Ok((
                0,
                json!({
                    "arcs": list.arcs.iter().map(|a| to_value(&ArcFamilyJson::from(a))).collect::<Vec<_>>(),
                    "edges": list.edges.iter().map(|e| to_value(&EdgeDetailJson::from(e))).collect::<Vec<_>>(),
                    "tangency_points": list.tangency_points.iter().map(|(edge, end, p)| json!({
                        "face": to_value(&DiskFaceJson::from(&DiskFace::TangencyPoint { edge: *edge, end: *end })),
                        "point": point_json(p),
                    })).collect::<Vec<_>>(),
                    "vertices": list.vertices.iter().map(|(k, p)| json!({
                        "face": to_value(&DiskFaceJson::from(&DiskFace::Vertex(*k))),
                        "point": point_json(p),
                    })).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::DiskhullCertify { input, face } => {
            let body = read_json::<DiskBodyJson>(input)?.to_body()?;
            let f = json_arg::<DiskFaceJson>(face)?.to_face()?;
            let cortege = body.certify(&f)?;
            let exposed = body.is_exposed(&f)?;
            if cross {
                cross_check_disk(&body, &f, &cortege)?;
            }
            Ok((
                0,
                json!({
                    "cortege": to_value(&CortegeJson::from(&cortege)),
                    "exposed": exposed,
                    "rank": cortege.rank(),
                }),
            ))
        }
    }
}

fn faces(input: &Path, cross: bool) -> Run {
    let (poly, removed) = load_polytope(input)?;
    let all = poly.all_faces();
    if cross {
        let mut a = all.clone();
        let mut b = oracle_faces(&poly)?;
        a.sort();
        b.sort();
        if a != b {
            return Err(Failure::CrossCheck(format!("{} faces, oracle finds {}", a.len(), b.len())));
        }
    }
    Ok((
        0,
        json!({
            "faces": all.iter().map(|f| to_value(&FaceJson::from(f))).collect::<Vec<_>>(),
            "facets": poly.facets().iter().map(|f| to_value(&FacetJson::from(f))).collect::<Vec<_>>(),
            "removed": removed.iter().map(point_json).collect::<Vec<_>>(),
            "vertices": poly.vertices().iter().map(point_json).collect::<Vec<_>>(),
        }),
    ))
}

/// The certificate is nonnegative on sampled body points, and for point
/// faces it vanishes exactly at the face point among the samples.
fn cross_check_disk(body: &DiskBody, face: &DiskFace, cortege: &Cortege) -> Result<(), Failure> {
    let u = StepAffineFunction::new(cortege.clone());
    let face_point = match face {
        DiskFace::TangencyPoint { edge, end } => body
            .faces()?
            .tangency_points
            .iter()
            .find(|(e, n, _)| e == edge && n == end)
            .map(|(_, _, p)| p.clone()),
        DiskFace::Vertex(k) => Some(body.disks()[*k].center.clone()),
        _ => None,
    };
    let mut rng = sample::rng(DEFAULT_SEED);
    let mut points = body.sample_points(&mut rng, DISK_SAMPLES)?;
    if let Some(p) = &face_point {
        points.push(p.clone());
    }
    for x in &points {
        let v = u.eval(x);
        if v.is_negative() {
            return Err(Failure::CrossCheck(format!("certificate is negative at {x}")));
        }
        if let Some(p) = &face_point {
            if v.is_zero() != (x == p) {
                return Err(Failure::CrossCheck(format!("zero set differs from the face at {x}")));
            }
        }
    }
    Ok(())
}
