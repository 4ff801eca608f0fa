//! Seeded rational samplers. All randomness in the crate flows through an
//! explicitly seeded [`ChaCha8Rng`].

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::{LinearFunctional, Point, Rational};

/// Seed used by the oracles and the acceptance fixtures unless told otherwise.
pub const DEFAULT_SEED: u64 = 0x5EED_FACE;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `{k / den | lo·den ≤ k ≤ hi·den}`.
pub fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    let k = rng.gen_range(lo * den..=hi * den);
    Rational::new(BigInt::from(k), BigInt::from(den))
}

pub fn point<R: Rng>(rng: &mut R, dim: usize, lo: i64, hi: i64, den: i64) -> Point {
    Point::new((0..dim).map(|_| rational(rng, lo, hi, den)).collect())
}

/// Random `t` with `0 < t < 1`.
pub fn open_unit<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.gen_range(2..=16i64);
    Rational::new(BigInt::from(rng.gen_range(1..den)), BigInt::from(den))
}

/// Integer weights for [`convex_combination`]: nonnegative, at least one
/// positive, sometimes supported on a random subset only.
pub fn convex_weights<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    let mut raw: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=6)).collect();
    if rng.gen_bool(0.3) {
        let keep = rng.gen_range(1..=n);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for &i in &order[keep..] {
            raw[i] = 0;
        }
    }
    if raw.iter().all(|&w| w == 0) {
        raw[rng.gen_range(0..n)] = 1;
    }
    raw
}

/// `Σ raw_i p_i / Σ raw_i`, accumulated over a common denominator so that
/// only one reduction happens per coordinate.
pub fn weighted(points: &[&Point], raw: &[i64]) -> Point {
    let total: i64 = raw.iter().sum();
    let used: Vec<(&Point, i64)> = points.iter().zip(raw).filter(|(_, &w)| w != 0).map(|(p, &w)| (*p, w)).collect();
    let dim = points[0].dim();
    Point::new(
        (0..dim)
            .map(|k| {
                let den = used.iter().fold(BigInt::one(), |acc, (p, _)| acc.lcm(p[k].denom()));
                let num: BigInt = used.iter().map(|(p, w)| p[k].numer() * (&den / p[k].denom()) * BigInt::from(*w)).sum();
                Rational::new(num, den * BigInt::from(total))
            })
            .collect(),
    )
}

/// Random convex combination of `points` with weights from
/// [`convex_weights`].
pub fn convex_combination<R: Rng>(rng: &mut R, points: &[&Point]) -> Point {
    let raw = convex_weights(rng, points.len());
    weighted(points, &raw)
}

/// Random convex combination with every weight strictly positive.
pub fn strictly_convex_combination<R: Rng>(rng: &mut R, points: &[&Point]) -> Point {
    let raw: Vec<i64> = (0..points.len()).map(|_| rng.gen_range(1..=6)).collect();
    weighted(points, &raw)
}

/// Affine combination (weights sum to one, may be negative).
pub fn affine_combination<R: Rng>(rng: &mut R, points: &[&Point]) -> Point {
    let n = points.len();
    let mut weights: Vec<Rational> = (0..n).map(|_| rational(rng, -1, 2, 4)).collect();
    let rest: Rational = weights[1..].iter().sum();
    weights[0] = Rational::from_integer(1.into()) - rest;
    Point::combination(points, &weights)
}

/// Random nonzero functional with small integer coefficients.
pub fn functional<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> LinearFunctional {
    loop {
        let coeffs: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        if coeffs.iter().any(|&c| c != 0) {
            return LinearFunctional::from_ints(&coeffs);
        }
    }
}
