use facelex_core::invariants::{random_cortege, step_affine_algebra, StepAffineViolations};
use facelex_core::sample::{self, DEFAULT_SEED};
use facelex_core::step_affine::Cortege;
use facelex_core::{Point, Rational, StepAffineFunction};
use num_traits::{One, Zero};
use rand::Rng;

#[test]
fn algebra_over_random_corteges() {
    let mut rng = sample::rng(DEFAULT_SEED);
    let mut total = StepAffineViolations::default();
    for _ in 0..20 {
        let dim = rng.gen_range(2..=4);
        let rank = rng.gen_range(1..=dim);
        let c = random_cortege(&mut rng, dim, rank);
        total.add(&step_affine_algebra(&mut rng, &c, 1000).unwrap());
    }
    assert_eq!(total, StepAffineViolations::default());
}

#[test]
fn step_linear_zero_set_is_a_subspace() {
    let mut rng = sample::rng(DEFAULT_SEED + 7);
    for _ in 0..20 {
        let dim = rng.gen_range(2..=4);
        let rank = rng.gen_range(1..=dim);
        let c = random_cortege(&mut rng, dim, rank);
        let u = StepAffineFunction::new(Cortege::linear(c.linear_parts()).unwrap());
        assert!(u.is_step_linear());
        let z = u.zero_set().unwrap();
        assert!(z.base().is_zero());
        for d in z.directions() {
            let t = sample::rational(&mut rng, -3, 3, 2);
            assert!(u.eval(&d.scale(&t)).is_zero());
        }
        for _ in 0..50 {
            let x = sample::point(&mut rng, dim, -3, 3, 4);
            let t = sample::rational(&mut rng, 1, 5, 3);
            assert_eq!(u.eval(&x.scale(&t)), &t * u.eval(&x));
        }
        assert!(u.eval(&Point::origin(dim)).is_zero());
        assert_eq!(u.eval(&Point::origin(dim)), Rational::zero());
        let _ = Rational::one();
    }
}
