use facelex_core::disk::{DiskBody, DiskFace, Edge};
use facelex_core::fixtures::{cone_body, stadium_body};
use facelex_core::invariants::tangency_check;
use facelex_core::quad::QuadScalar;
use facelex_core::sample::{self, DEFAULT_SEED};
use facelex_core::{Point, Rational, StepAffineFunction};
use num_traits::{Signed, Zero};
use rand::Rng;

fn bodies() -> [(&'static str, DiskBody); 4] {
    [
        ("cone", cone_body()),
        ("stadium", stadium_body()),
        ("double_cone", DiskBody::from_ints(&[((0, 0), 3), ((5, 0), 0), ((-5, 0), 0)]).unwrap()),
        // side lengths 3, 4, 5 keep every bitangent rational
        ("rounded_triangle", DiskBody::from_ints(&[((0, 0), 1), ((4, 0), 1), ((4, 3), 1)]).unwrap()),
    ]
}

fn on_edge(e: &Edge, x: &Point) -> bool {
    if e.normal.dot(x) != e.level {
        return false;
    }
    let d = &e.ends[1] - &e.ends[0];
    let t = d.dot(&(x - &e.ends[0]));
    !t.is_negative() && t <= d.dot(&d)
}

#[test]
fn tangency_points_are_lexicographically_exposed_only() {
    let mut rng = sample::rng(DEFAULT_SEED);
    for (name, body) in bodies() {
        let list = body.faces().unwrap();
        assert!(!list.tangency_points.is_empty(), "{name}");
        for (edge, end, point) in &list.tangency_points {
            let face = DiskFace::TangencyPoint { edge: *edge, end: *end };
            let check = tangency_check(&mut rng, &body, &face, point, 500).unwrap();
            assert!(check.passed(), "{name}: {face:?} {check:?}");
        }
    }
}

#[test]
fn support_minimum_is_attained_and_minimal() {
    let mut rng = sample::rng(DEFAULT_SEED + 1);
    for (name, body) in bodies() {
        let samples = body.sample_points(&mut rng, 300).unwrap();
        let edges = body.hull_edges().unwrap();
        for _ in 0..200 {
            let l = sample::functional(&mut rng, 2, 6);
            let (value, face) = body.support_min(&l).unwrap();
            for x in &samples {
                assert!(QuadScalar::from(l.eval(x)) >= value, "{name}: {l:?} at {x}");
            }
            match &face {
                DiskFace::Edge(r) => {
                    let e = edges.iter().find(|e| e.reference == *r).unwrap();
                    for p in &e.ends {
                        assert!(QuadScalar::from(l.eval(p)) == value);
                    }
                }
                DiskFace::Vertex(k) => assert!(QuadScalar::from(l.eval(&body.disks()[*k].center)) == value),
                DiskFace::ArcPoint { disk, direction } => {
                    let [x, y] = body.arc_point(*disk, direction);
                    let c = l.coeffs();
                    assert!(&x.mul_rational(&c[0]) + &y.mul_rational(&c[1]) == value, "{name}: {l:?}");
                }
                other => panic!("{name}: support face {other:?}"),
            }
        }
    }
}

#[test]
fn certificates_vanish_exactly_on_their_faces() {
    let mut rng = sample::rng(DEFAULT_SEED + 2);
    for (name, body) in bodies() {
        let list = body.faces().unwrap();
        let mut samples = body.sample_points(&mut rng, 500).unwrap();
        samples.extend(list.vertices.iter().map(|(_, p)| p.clone()));
        for e in &list.edges {
            let u = StepAffineFunction::new(body.certify(&DiskFace::Edge(e.reference)).unwrap());
            assert!(body.is_exposed(&DiskFace::Edge(e.reference)).unwrap());
            for x in &samples {
                let v = u.eval(x);
                assert!(!v.is_negative(), "{name}");
                assert_eq!(v.is_zero(), on_edge(e, x), "{name}: {x}");
            }
        }
        for (k, p) in &list.vertices {
            let u = StepAffineFunction::new(body.certify(&DiskFace::Vertex(*k)).unwrap());
            for x in &samples {
                let v = u.eval(x);
                assert!(!v.is_negative(), "{name}");
                assert_eq!(v.is_zero(), x == p, "{name}: {x}");
            }
        }
    }
}

#[test]
fn segments_through_a_face_stay_in_it() {
    let mut rng = sample::rng(DEFAULT_SEED + 3);
    for (name, body) in bodies() {
        let list = body.faces().unwrap();
        for e in &list.edges {
            let along = &e.ends[1] - &e.ends[0];
            let mut nonvacuous = 0;
            for trial in 0..200 {
                let t = sample::rational(&mut rng, 0, 1, 9);
                let m = &e.ends[0] + &along.scale(&t);
                let w = if trial % 2 == 0 { along.clone() } else { sample::point(&mut rng, 2, -2, 2, 3) };
                let s = sample::rational(&mut rng, 1, 1, 1) / Rational::from_integer(rng.gen_range(2..20).into());
                let (u, v) = (&m + &w.scale(&s), &m - &w.scale(&s));
                if body.contains(&u).unwrap() && body.contains(&v).unwrap() {
                    nonvacuous += 1;
                    assert!(on_edge(e, &u) && on_edge(e, &v), "{name}: {m} +- {w}");
                }
            }
            assert!(nonvacuous > 0, "{name}");
        }
        for (edge, end, p) in &list.tangency_points {
            for _ in 0..200 {
                let w = sample::point(&mut rng, 2, -2, 2, 3);
                if w.is_zero() {
                    continue;
                }
                let s = Rational::new(1.into(), rng.gen_range(2..50).into());
                let (u, v) = (p + &w.scale(&s), p - &w.scale(&s));
                assert!(
                    !(body.contains(&u).unwrap() && body.contains(&v).unwrap()),
                    "{name}: {edge:?} {end:?} is not extreme"
                );
            }
        }
    }
}
