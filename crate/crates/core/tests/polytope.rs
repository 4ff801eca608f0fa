use facelex_core::fixtures::{self, polytope_suite};
use facelex_core::invariants::{affine_hull_intersection, complement_convexity, open_halfline_exclusion};
use facelex_core::oracle::oracle_faces;
use facelex_core::sample::{self, DEFAULT_SEED};
use facelex_core::{FaceDescriptor, Point, Polytope};
use proptest::prelude::*;

fn proper_faces(p: &Polytope) -> Vec<FaceDescriptor> {
    p.all_faces().into_iter().filter(|f| f.len() < p.num_vertices()).collect()
}

#[test]
fn face_counts() {
    for (p, want) in [
        (fixtures::unit_square(), 9),
        (fixtures::simplex(3), 15),
        (fixtures::cube(3), 27),
        (fixtures::cross_polytope(3), 27),
    ] {
        assert_eq!(p.all_faces().len(), want);
        assert_eq!(oracle_faces(&p).unwrap().len(), want);
    }
}

#[test]
fn oracle_equivalence() {
    for (name, p) in polytope_suite() {
        let mut a = p.all_faces();
        let mut b = oracle_faces(&p).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn lattice_closure_and_transitivity() {
    for (name, p) in polytope_suite() {
        let faces = p.all_faces();
        for f in &faces {
            for g in &faces {
                let meet = f.intersection(g);
                assert!(meet.is_empty() || faces.contains(&meet), "{name}: {f:?} ∩ {g:?}");
            }
            let sub = p.sub_polytope(f).unwrap();
            for g in sub.all_faces() {
                let lifted = FaceDescriptor::new(g.indices().iter().map(|&k| f.indices()[k]).collect());
                assert!(p.is_face(&lifted).unwrap(), "{name}: {lifted:?} inside {f:?}");
            }
        }
    }
}

#[test]
fn complement_of_a_face_is_convex() {
    let mut rng = sample::rng(DEFAULT_SEED);
    for (name, p) in polytope_suite() {
        for f in proper_faces(&p) {
            assert_eq!(complement_convexity(&mut rng, &p, &f, 200).unwrap(), 0, "{name}: {f:?}");
        }
    }
}

#[test]
fn open_halflines_leave_the_body() {
    let mut rng = sample::rng(DEFAULT_SEED + 1);
    for (name, p) in polytope_suite() {
        for f in proper_faces(&p) {
            assert_eq!(open_halfline_exclusion(&mut rng, &p, &f, 50).unwrap(), 0, "{name}: {f:?}");
        }
    }
}

#[test]
fn affine_hull_meets_body_in_the_face() {
    let mut rng = sample::rng(DEFAULT_SEED + 2);
    for (name, p) in polytope_suite() {
        for f in proper_faces(&p) {
            assert_eq!(affine_hull_intersection(&mut rng, &p, &f, 100).unwrap(), 0, "{name}: {f:?}");
        }
    }
}

#[test]
fn lower_dimensional_polytope_in_space() {
    // a square tilted into the plane x + y + z = 1
    let p = Polytope::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]).unwrap();
    assert_eq!(p.intrinsic_dim(), 2);
    assert_eq!(p.all_faces().len(), 9);
    assert!(!p.is_face(&FaceDescriptor::new(vec![0, 1])).unwrap());
}

fn point_cloud() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..4).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-3i64..=3, d), d + 1..9))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_facets_and_faces_are_consistent(cloud in point_cloud()) {
        let pts: Vec<Point> = cloud.iter().map(|c| Point::from_ints(c)).collect();
        let Ok((p, removed)) = Polytope::with_report(pts.clone()) else { return Ok(()) };
        for x in pts.iter().chain(removed.iter()) {
            prop_assert!(p.contains(x));
        }
        for f in p.facets() {
            prop_assert!(p.vertices().iter().all(|v| f.slack(v) >= num_traits::Zero::zero()));
        }
        for face in p.all_faces() {
            prop_assert!(p.is_face(&face).unwrap());
            prop_assert_eq!(p.smallest_face_containing(&p.barycenter(&face)).unwrap(), face);
        }
    }
}
