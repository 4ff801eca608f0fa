//! Corteges of affine functionals and step-affine functions of finite rank.
//!
//! A step-affine function returns the value of the first functional of its
//! cortege that does not vanish at the point, and the value of the last one
//! when all earlier ones vanish.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::exact::solve_affine_zero_set;
use crate::{AffineFunctional, AffineManifold, Error, LinearFunctional, Point, Rational, Result};

/// Why a functional cannot extend the cortege built so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CortegeDefect {
    /// The earlier functionals have no common zero.
    EmptyManifold,
    /// The functional is constant on the common zero set of the earlier ones.
    ConstantOnManifold,
}

/// A validated, nonempty, finite cortege. Level order is sequence order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cortege {
    functionals: Vec<AffineFunctional>,
}

/// Checks the cortege conditions level by level and reports the first
/// failure. Levels are numbered from 1 in the error.
pub fn validate_cortege(functionals: Vec<AffineFunctional>) -> Result<Cortege> {
    let first = functionals.first().ok_or(Error::EmptyInput)?;
    let dim = first.dim();
    for f in &functionals {
        if f.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: f.dim() });
        }
    }
    for (i, f) in functionals.iter().enumerate() {
        let defect = match solve_affine_zero_set(&functionals[..i], dim)? {
            None => Some(CortegeDefect::EmptyManifold),
            Some(e) if e.directions().iter().all(|d| f.linear.eval(d).is_zero()) => {
                Some(CortegeDefect::ConstantOnManifold)
            }
            Some(_) => None,
        };
        if let Some(defect) = defect {
            return Err(Error::InvalidCortege { index: i + 1, defect });
        }
    }
    Ok(Cortege { functionals })
}

impl Cortege {
    pub fn new(functionals: Vec<AffineFunctional>) -> Result<Self> {
        validate_cortege(functionals)
    }

    /// Cortege of linear functionals (all offsets zero).
    pub fn linear(levels: Vec<LinearFunctional>) -> Result<Self> {
        Self::new(levels.into_iter().map(|l| AffineFunctional::new(l, Rational::zero())).collect())
    }

    pub fn functionals(&self) -> &[AffineFunctional] {
        &self.functionals
    }

    pub fn rank(&self) -> usize {
        self.functionals.len()
    }

    pub fn dim(&self) -> usize {
        self.functionals[0].dim()
    }

    pub fn linear_parts(&self) -> Vec<LinearFunctional> {
        self.functionals.iter().map(|f| f.linear.clone()).collect()
    }

    pub fn is_linear(&self) -> bool {
        self.functionals.iter().all(|f| f.offset.is_zero())
    }

    pub fn into_functionals(self) -> Vec<AffineFunctional> {
        self.functionals
    }
}

/// Which part of the trichotomy `S⁻ ⊔ M ⊔ S` a point falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    NegativeSide,
    ZeroManifold,
    PositiveSide,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepAffineFunction {
    cortege: Cortege,
}

impl From<Cortege> for StepAffineFunction {
    fn from(cortege: Cortege) -> Self {
        Self { cortege }
    }
}

impl StepAffineFunction {
    pub fn new(cortege: Cortege) -> Self {
        Self { cortege }
    }

    pub fn cortege(&self) -> &Cortege {
        &self.cortege
    }

    pub fn rank(&self) -> usize {
        self.cortege.rank()
    }

    pub fn is_step_linear(&self) -> bool {
        self.cortege.is_linear()
    }

    pub fn eval(&self, x: &Point) -> Rational {
        let fs = self.cortege.functionals();
        let (last, head) = fs.split_last().expect("cortege is nonempty");
        for f in head {
            let v = f.eval(x);
            if !v.is_zero() {
                return v;
            }
        }
        last.eval(x)
    }

    /// Value through the least level not vanishing at `x`, zero when no
    /// level survives. Agrees with [`StepAffineFunction::eval`].
    pub fn eval_by_least_nonvanishing(&self, x: &Point) -> Rational {
        self.cortege
            .functionals()
            .iter()
            .map(|f| f.eval(x))
            .find(|v| !v.is_zero())
            .unwrap_or_else(Rational::zero)
    }

    /// Index (0-based) of the level that decides the value at `x`.
    pub fn deciding_level(&self, x: &Point) -> usize {
        let fs = self.cortege.functionals();
        fs.iter()
            .position(|f| !f.eval(x).is_zero())
            .unwrap_or(fs.len() - 1)
    }

    /// `{x | u(x) = 0}`, the common zero set of all levels. `None` means the
    /// function is irregular; a finite validated cortege never produces it.
    pub fn zero_set(&self) -> Option<AffineManifold> {
        solve_affine_zero_set(self.cortege.functionals(), self.cortege.dim())
            .expect("cortege levels share a dimension")
    }

    pub fn classify(&self, x: &Point) -> Result<Region> {
        if x.dim() != self.cortege.dim() {
            return Err(Error::DimensionMismatch { expected: self.cortege.dim(), found: x.dim() });
        }
        let v = self.eval(x);
        Ok(if v.is_positive() {
            Region::PositiveSide
        } else if v.is_negative() {
            Region::NegativeSide
        } else {
            Region::ZeroManifold
        })
    }

    /// `(w, a)` with `w` step-linear and `u(x) = w(x - a)`; `a` is the base
    /// point of the zero set.
    pub fn decompose_regular(&self) -> Result<(StepAffineFunction, Point)> {
        let anchor = self.zero_set().ok_or(Error::IrregularFunction)?.base().clone();
        let w = Cortege::linear(self.cortege.linear_parts())?;
        Ok((StepAffineFunction::new(w), anchor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn f(c: &[i64], o: i64) -> AffineFunctional {
        AffineFunctional::from_ints(c, o)
    }

    fn step(fs: &[(&[i64], i64)]) -> StepAffineFunction {
        StepAffineFunction::new(Cortege::new(fs.iter().map(|(c, o)| f(c, *o)).collect()).unwrap())
    }

    #[test]
    fn validation_examples() {
        assert!(validate_cortege(vec![f(&[1, 1], 0), f(&[1, -1], 0)]).is_ok());
        assert_eq!(
            validate_cortege(vec![f(&[1], 0), f(&[2], 1)]),
            Err(Error::InvalidCortege { index: 2, defect: CortegeDefect::ConstantOnManifold })
        );
        assert_eq!(
            validate_cortege(vec![f(&[1, 0], 0), f(&[1, 0], -1)]),
            Err(Error::InvalidCortege { index: 2, defect: CortegeDefect::ConstantOnManifold })
        );
        assert_eq!(
            validate_cortege(vec![f(&[0, 0], 3)]),
            Err(Error::InvalidCortege { index: 1, defect: CortegeDefect::ConstantOnManifold })
        );
        assert_eq!(validate_cortege(vec![]), Err(Error::EmptyInput));
        assert_eq!(
            validate_cortege(vec![f(&[1, 0], 0), f(&[1], 0)]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn eval_examples() {
        let u = step(&[(&[1, 1], -1), (&[1, -1], 0)]);
        assert_eq!(u.eval(&Point::from_ints(&[2, 0])), rat(1));
        let half = Point::new(vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(u.eval(&half), rat(0));
        assert_eq!(u.eval(&Point::from_ints(&[1, 0])), rat(1));
        assert_eq!(u.deciding_level(&Point::from_ints(&[1, 0])), 1);
    }

    #[test]
    fn zero_set_examples() {
        let origin = step(&[(&[1, 0], 0), (&[0, 1], 0)]).zero_set().unwrap();
        assert_eq!(origin.dim(), 0);
        assert_eq!(origin.base(), &Point::from_ints(&[0, 0]));
        let m = step(&[(&[1, 1], -1), (&[1, -1], 0)]).zero_set().unwrap();
        assert_eq!(m.base(), &Point::new(vec![frac(1, 2), frac(1, 2)]));
        assert_eq!(m.dim(), 0);
    }

    #[test]
    fn classify_examples() {
        let u = step(&[(&[1, 0], 0), (&[0, 1], 0)]);
        assert_eq!(u.classify(&Point::from_ints(&[0, 0])).unwrap(), Region::ZeroManifold);
        assert_eq!(u.classify(&Point::from_ints(&[0, -3])).unwrap(), Region::NegativeSide);
        assert_eq!(u.classify(&Point::from_ints(&[1, -100])).unwrap(), Region::PositiveSide);
        assert!(u.classify(&Point::from_ints(&[1])).is_err());
    }

    #[test]
    fn decompose_examples() {
        let (w, a) = step(&[(&[1, 1], -1), (&[1, -1], 0)]).decompose_regular().unwrap();
        assert_eq!(w, step(&[(&[1, 1], 0), (&[1, -1], 0)]));
        assert_eq!(a, Point::new(vec![frac(1, 2), frac(1, 2)]));

        let lin = step(&[(&[2, 1], 0)]);
        let (w, a) = lin.decompose_regular().unwrap();
        assert_eq!(w, lin);
        assert_eq!(a, Point::from_ints(&[0, 0]));

        let (w, a) = step(&[(&[1, 0], -1)]).decompose_regular().unwrap();
        assert_eq!(w, step(&[(&[1, 0], 0)]));
        assert_eq!(a, Point::from_ints(&[1, 0]));
    }
}
