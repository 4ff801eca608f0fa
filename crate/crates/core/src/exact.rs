//! Exact scalars, points, functionals and affine manifolds.
//!
//! Direction spaces are always kept in reduced row echelon form, so two
//! manifolds with the same direction space carry identical direction lists.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with an optional leading minus sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.into());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let int = |t: &str, signed: bool| -> Result<BigInt> {
        let digits = match t.strip_prefix('-') {
            Some(rest) if signed => rest,
            _ => t,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::parse_bytes(t.as_bytes(), 10).ok_or_else(bad)
    };
    let n = int(num, true)?;
    let d = match den {
        Some(d) => int(d, false)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Scales a rational vector by a positive factor so that every entry is an
/// integer and the entries are coprime. The zero vector is returned as is.
pub(crate) fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn scale(&self, t: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * t).collect())
    }

    pub fn dot(&self, other: &Point) -> Rational {
        dot(&self.coords, &other.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `Σ weights[k] · points[k]`. No normalisation of the weights.
    pub fn combination(points: &[&Point], weights: &[Rational]) -> Point {
        let dim = points.first().map_or(0, |p| p.dim());
        let mut out = vec![Rational::zero(); dim];
        for (p, w) in points.iter().zip(weights) {
            for (o, c) in out.iter_mut().zip(&p.coords) {
                *o += c * w;
            }
        }
        Point::new(out)
    }

    /// Uniform average; the canonical relative-interior point of a vertex set.
    pub fn barycenter(points: &[&Point]) -> Point {
        assert!(!points.is_empty(), "barycenter of an empty set");
        let w = Rational::new(BigInt::one(), BigInt::from(points.len()));
        Point::combination(points, &vec![w; points.len()])
    }
}

impl Index<usize> for Point {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFunctional {
    coeffs: Vec<Rational>,
}

impl LinearFunctional {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &Point) -> Rational {
        debug_assert_eq!(self.dim(), x.dim());
        dot(&self.coeffs, x.coords())
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * t).collect())
    }

    /// Coprime integer coefficients, same orientation.
    pub fn normalized(&self) -> Self {
        Self::new(primitive_integer(&self.coeffs))
    }

    pub fn as_point(&self) -> Point {
        Point::new(self.coeffs.clone())
    }
}

impl Neg for &LinearFunctional {
    type Output = LinearFunctional;
    fn neg(self) -> LinearFunctional {
        LinearFunctional::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `x ↦ linear(x) + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineFunctional {
    pub linear: LinearFunctional,
    pub offset: Rational,
}

impl AffineFunctional {
    pub fn new(linear: LinearFunctional, offset: Rational) -> Self {
        Self { linear, offset }
    }

    pub fn from_ints(coeffs: &[i64], offset: i64) -> Self {
        Self::new(LinearFunctional::from_ints(coeffs), rat(offset))
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn eval(&self, x: &Point) -> Rational {
        self.linear.eval(x) + &self.offset
    }

    pub fn is_constant(&self) -> bool {
        self.linear.is_zero()
    }

    /// Coprime integers across coefficients and offset, positive rescaling only.
    pub fn normalized(&self) -> Self {
        let mut all = self.linear.coeffs.clone();
        all.push(self.offset.clone());
        let mut all = primitive_integer(&all);
        let offset = all.pop().unwrap_or_else(Rational::zero);
        Self::new(LinearFunctional::new(all), offset)
    }
}

impl fmt::Display for AffineFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.linear.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}x{k}")?;
            } else {
                write!(f, "{sign}{mag}*x{k}")?;
            }
            first = false;
        }
        if first {
            write!(f, "{}", self.offset)
        } else if self.offset.is_zero() {
            Ok(())
        } else if self.offset.is_negative() {
            write!(f, "{}", self.offset)
        } else {
            write!(f, "+{}", self.offset)
        }
    }
}

/// Row-reduces `rows` in place to reduced row echelon form, pivoting only in
/// the first `pivot_cols` columns. Zero rows are dropped. Returns the pivot
/// column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<Rational>>, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    // rows below the rank are zero in the pivot columns; keep them only if an
    // augmented column is nonzero (the caller detects inconsistency)
    let rank = pivots.len();
    let tail: Vec<Vec<Rational>> = rows
        .drain(rank..)
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    rows.extend(tail);
    pivots
}

pub(crate) fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{x | rows · x = 0}`, itself in reduced row echelon form.
pub(crate) fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    rref(&mut basis, cols);
    basis
}

pub fn linear_independent(funcs: &[LinearFunctional]) -> Result<bool> {
    let Some(first) = funcs.first() else {
        return Ok(true);
    };
    let n = first.dim();
    for f in funcs {
        check_dim(n, f.dim())?;
    }
    let rows: Vec<Vec<Rational>> = funcs.iter().map(|f| f.coeffs.clone()).collect();
    Ok(rank(&rows, n) == funcs.len())
}

/// `base + span(directions)`, directions held in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineManifold {
    base: Point,
    directions: Vec<Point>,
    pivots: Vec<usize>,
}

impl AffineManifold {
    /// Any spanning family of directions is accepted; it is reduced to a
    /// canonical basis.
    pub fn new(base: Point, directions: Vec<Point>) -> Result<Self> {
        let n = base.dim();
        for d in &directions {
            check_dim(n, d.dim())?;
        }
        let mut rows: Vec<Vec<Rational>> = directions.into_iter().map(Point::into_coords).collect();
        let pivots = rref(&mut rows, n);
        Ok(Self {
            base,
            directions: rows.into_iter().map(Point::new).collect(),
            pivots,
        })
    }

    pub fn point(p: Point) -> Self {
        Self { base: p, directions: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(dim: usize) -> Self {
        let directions = (0..dim)
            .map(|k| {
                let mut v = vec![Rational::zero(); dim];
                v[k] = Rational::one();
                Point::new(v)
            })
            .collect();
        Self { base: Point::origin(dim), directions, pivots: (0..dim).collect() }
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn directions(&self) -> &[Point] {
        &self.directions
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.dim()
    }

    /// Coordinates of `x - base` in the direction basis, if `x` lies on the
    /// manifold.
    pub fn coordinates(&self, x: &Point) -> Option<Vec<Rational>> {
        if x.dim() != self.ambient_dim() {
            return None;
        }
        let diff = x - &self.base;
        let t: Vec<Rational> = self.pivots.iter().map(|&p| diff[p].clone()).collect();
        let dirs: Vec<&Point> = self.directions.iter().collect();
        let back = Point::combination(&dirs, &t);
        let back = if dirs.is_empty() { Point::origin(x.dim()) } else { back };
        (back == diff).then_some(t)
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn at(&self, t: &[Rational]) -> Point {
        let dirs: Vec<&Point> = self.directions.iter().collect();
        if dirs.is_empty() {
            return self.base.clone();
        }
        &self.base + &Point::combination(&dirs, t)
    }

    /// Equation form: the manifold is the common zero set of the returned
    /// functionals (an empty list for the whole space).
    pub fn equations(&self) -> Vec<AffineFunctional> {
        let rows: Vec<Vec<Rational>> = self.directions.iter().map(|d| d.coords().to_vec()).collect();
        null_space(&rows, self.ambient_dim())
            .into_iter()
            .map(|normal| {
                let l = LinearFunctional::new(normal);
                let offset = -l.eval(&self.base);
                AffineFunctional::new(l, offset)
            })
            .collect()
    }

    /// Same direction space and a shared point.
    pub fn same_set(&self, other: &AffineManifold) -> bool {
        self.directions == other.directions && self.contains(&other.base)
    }
}

/// Common zero set of `funcs` in dimension `dim`; `None` when inconsistent.
pub fn solve_affine_zero_set(funcs: &[AffineFunctional], dim: usize) -> Result<Option<AffineManifold>> {
    for f in funcs {
        check_dim(dim, f.dim())?;
    }
    let mut rows: Vec<Vec<Rational>> = funcs
        .iter()
        .map(|f| {
            let mut row = f.linear.coeffs.clone();
            row.push(-f.offset.clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, dim);
    if rows.len() > pivots.len() {
        return Ok(None);
    }
    let mut base = vec![Rational::zero(); dim];
    for (row, &p) in rows.iter().zip(&pivots) {
        base[p] = row[dim].clone();
    }
    let coeff_rows: Vec<Vec<Rational>> = rows.iter().map(|r| r[..dim].to_vec()).collect();
    let dirs = null_space(&coeff_rows, dim).into_iter().map(Point::new).collect();
    AffineManifold::new(Point::new(base), dirs).map(Some)
}

pub fn affine_hull(points: &[Point]) -> Result<AffineManifold> {
    let base = points.first().ok_or(Error::EmptyInput)?;
    for p in points {
        check_dim(base.dim(), p.dim())?;
    }
    let dirs = points[1..].iter().map(|p| p - base).collect();
    AffineManifold::new(base.clone(), dirs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    #[test]
    fn independence_examples() {
        let e = |c: &[i64]| LinearFunctional::from_ints(c);
        assert!(linear_independent(&[e(&[1, 0]), e(&[0, 1])]).unwrap());
        assert!(!linear_independent(&[e(&[1, 2]), e(&[2, 4])]).unwrap());
        assert!(linear_independent(&[]).unwrap());
        assert_eq!(
            linear_independent(&[e(&[1, 0]), e(&[1, 0, 0])]),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn zero_set_examples() {
        let line = solve_affine_zero_set(&[AffineFunctional::from_ints(&[1, 1], -1)], 2)
            .unwrap()
            .unwrap();
        assert_eq!(line.base(), &p(&[1, 0]));
        assert_eq!(line.directions(), &[p(&[1, -1])]);

        let none = solve_affine_zero_set(
            &[AffineFunctional::from_ints(&[1, 0], 0), AffineFunctional::from_ints(&[1, 0], -1)],
            2,
        )
        .unwrap();
        assert!(none.is_none());

        let plane = solve_affine_zero_set(&[], 2).unwrap().unwrap();
        assert_eq!(plane.base(), &p(&[0, 0]));
        assert_eq!(plane.directions(), &[p(&[1, 0]), p(&[0, 1])]);
    }

    #[test]
    fn hull_examples() {
        let single = affine_hull(&[p(&[0, 0])]).unwrap();
        assert_eq!(single.dim(), 0);
        assert!(single.contains(&p(&[0, 0])));
        assert!(!single.contains(&p(&[0, 1])));

        let full = affine_hull(&[p(&[0, 0]), p(&[1, 0]), p(&[0, 1]), p(&[1, 1])]).unwrap();
        assert_eq!(full.dim(), 2);

        let diag = affine_hull(&[p(&[0, 0]), p(&[2, 2])]).unwrap();
        assert_eq!(diag.directions(), &[p(&[1, 1])]);
        assert!(diag.contains(&Point::new(vec![frac(-7, 3), frac(-7, 3)])));
        assert!(!diag.contains(&p(&[1, 0])));

        assert_eq!(affine_hull(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn equations_cut_out_the_manifold() {
        let m = affine_hull(&[p(&[1, 0, 2]), p(&[2, 1, 2])]).unwrap();
        let eqs = m.equations();
        assert_eq!(eqs.len(), 2);
        let back = solve_affine_zero_set(&eqs, 3).unwrap().unwrap();
        assert!(back.same_set(&m));
    }

    #[test]
    fn parse_and_normalize() {
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        for bad in ["", "1.5", "1/0", " 1", "1/-2", "--1", "/3", "a"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
        let f = AffineFunctional::new(
            LinearFunctional::new(vec![frac(1, 2), frac(-3, 4)]),
            frac(5, 6),
        );
        assert_eq!(f.normalized(), AffineFunctional::from_ints(&[6, -9], 10));
    }
}
