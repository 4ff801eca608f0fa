//! Numbers `a + b·√s` with rational `a, b` and a nonnegative rational
//! radicand `s`. Support values of disks in a rational direction `l` live in
//! `ℚ(√(l·l))`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::Rational;

/// Exact square root of a nonnegative rational, when it is rational.
pub fn sqrt_rational(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

#[derive(Clone, Debug)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    s: Rational,
}

impl QuadScalar {
    /// Panics on a negative radicand. Perfect-square radicands and zero
    /// coefficients collapse to the rational case.
    pub fn new(a: Rational, b: Rational, s: Rational) -> Self {
        assert!(!s.is_negative(), "negative radicand");
        if b.is_zero() || s.is_zero() {
            return Self::rational(a);
        }
        if let Some(r) = sqrt_rational(&s) {
            return Self::rational(a + b * r);
        }
        Self { a, b, s }
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero(), s: Rational::zero() }
    }

    pub fn parts(&self) -> (&Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.s)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        let zero = Rational::zero();
        let sa = self.a.cmp(&zero);
        let sb = self.b.cmp(&zero);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: the larger magnitude wins
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * &self.s;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn radicand_with(&self, other: &Self) -> Option<Rational> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Some(Rational::zero()),
            (false, true) => Some(self.s.clone()),
            (true, false) => Some(other.s.clone()),
            (false, false) => (self.s == other.s).then(|| self.s.clone()),
        }
    }

    /// `None` when both carry different irrational radicands.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let s = self.radicand_with(other)?;
        Some(Self::new(&self.a - &other.a, &self.b - &other.b, s))
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let s = self.radicand_with(other)?;
        Some(Self::new(&self.a + &other.a, &self.b + &other.b, s))
    }

    pub fn mul_rational(&self, t: &Rational) -> Self {
        Self::new(&self.a * t, &self.b * t, self.s.clone())
    }
}

impl PartialEq for QuadScalar {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).map(|d| d.signum())
    }
}

impl From<Rational> for QuadScalar {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    /// Panics on mismatched radicands.
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        self.checked_add(rhs).expect("radicand mismatch")
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    /// Panics on mismatched radicands.
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        self.checked_sub(rhs).expect("radicand mismatch")
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar { a: -&self.a, b: -&self.b, s: self.s.clone() }
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.s)
        }
    }
}
