//! Named test bodies shared by the test suites and the CLI.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::disk::DiskBody;
use crate::exact::rat;
use crate::sample;
use crate::{Point, Polytope};

/// `(0,0), (1,0), (1,1), (0,1)`, in that order.
pub fn unit_square() -> Polytope {
    Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).expect("fixture")
}

/// `0, e_1, …, e_d`.
pub fn simplex(d: usize) -> Polytope {
    let mut pts = Vec::with_capacity(d + 1);
    pts.push(Point::origin(d));
    for k in 0..d {
        let mut c = Vec::from_iter((0..d).map(|_| rat(0)));
        c[k] = rat(1);
        pts.push(Point::new(c));
    }
    Polytope::new(pts).expect("fixture")
}

/// `{0,1}^d`, vertex `i` carrying the binary digits of `i` (coordinate 0 is
/// the lowest bit).
pub fn cube(d: usize) -> Polytope {
    Polytope::new((0..1usize << d).map(|i| binary_point(i, d)).collect()).expect("fixture")
}

/// `±e_1, …, ±e_d`.
pub fn cross_polytope(d: usize) -> Polytope {
    let mut pts = Vec::with_capacity(2 * d);
    for k in 0..d {
        for s in [1, -1] {
            let mut c = Vec::from_iter((0..d).map(|_| rat(0)));
            c[k] = rat(s);
            pts.push(Point::new(c));
        }
    }
    Polytope::new(pts).expect("fixture")
}

fn binary_point(i: usize, d: usize) -> Point {
    Point::new((0..d).map(|k| rat(((i >> k) & 1) as i64)).collect())
}

/// Hull of a seeded random subset of `{0,1}^d`, `d ∈ {3, 4}`, with at most
/// ten points. Every point of the cube is extreme, so all chosen points are
/// vertices.
pub fn random_01_polytope(seed: u64) -> Polytope {
    let mut rng = sample::rng(seed);
    let d = rng.gen_range(3..=4usize);
    let count = rng.gen_range(d + 1..=10usize.min(1 << d));
    let mut all: Vec<usize> = (0..1usize << d).collect();
    all.shuffle(&mut rng);
    let mut chosen = all[..count].to_vec();
    chosen.sort_unstable();
    Polytope::new(chosen.into_iter().map(|i| binary_point(i, d)).collect()).expect("fixture")
}

/// The fixture suite used by the acceptance criteria, with names.
pub fn polytope_suite() -> Vec<(String, Polytope)> {
    let mut out = Vec::from([
        (String::from("simplex2"), simplex(2)),
        (String::from("simplex3"), simplex(3)),
        (String::from("simplex4"), simplex(4)),
        (String::from("square"), unit_square()),
        (String::from("cube3"), cube(3)),
        (String::from("cube4"), cube(4)),
        (String::from("octahedron"), cross_polytope(3)),
    ]);
    for k in 0..5u64 {
        out.push((format!("random01_{k}"), random_01_polytope(sample::DEFAULT_SEED + k)));
    }
    out
}

/// Disk of radius 3 at the origin and the apex point `(5, 0)`.
pub fn cone_body() -> DiskBody {
    DiskBody::from_ints(&[((0, 0), 3), ((5, 0), 0)]).expect("fixture")
}

/// Unit disks at `(0, 0)` and `(4, 0)`.
pub fn stadium_body() -> DiskBody {
    DiskBody::from_ints(&[((0, 0), 1), ((4, 0), 1)]).expect("fixture")
}
