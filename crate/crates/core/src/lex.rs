//! Compatible total preorders of finite rank.
//!
//! `x ⪯ y` iff the tuple `(l_1(y - x), …, l_m(y - x))` is lexicographically
//! nonnegative. The positive cone `{x | 0 ⪯ x}` is a lexicographic cone.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::step_affine::{Cortege, StepAffineFunction};
use crate::{Error, FaceDescriptor, LinearFunctional, Point, Polytope, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComparisonResult {
    Less,
    Equivalent,
    Greater,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LexPreorder {
    levels: Vec<LinearFunctional>,
}

impl LexPreorder {
    /// Levels must form a cortege of linear functionals, i.e. be nonzero and
    /// linearly independent.
    pub fn new(levels: Vec<LinearFunctional>) -> Result<Self> {
        let cortege = Cortege::linear(levels)?;
        Ok(Self { levels: cortege.linear_parts() })
    }

    pub fn levels(&self) -> &[LinearFunctional] {
        &self.levels
    }

    pub fn rank(&self) -> usize {
        self.levels.len()
    }

    pub fn dim(&self) -> usize {
        self.levels[0].dim()
    }

    /// The step-linear function whose nonnegativity region is the positive cone.
    pub fn step_function(&self) -> StepAffineFunction {
        StepAffineFunction::new(Cortege::linear(self.levels.clone()).expect("validated at construction"))
    }

    fn check(&self, x: &Point) -> Result<()> {
        if x.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() })
        }
    }

    pub fn compare(&self, x: &Point, y: &Point) -> Result<ComparisonResult> {
        self.check(x)?;
        self.check(y)?;
        let diff = y - x;
        let decided = self.levels.iter().map(|l| l.eval(&diff)).find(|v| !v.is_zero());
        Ok(match decided {
            None => ComparisonResult::Equivalent,
            Some(v) if v > Rational::zero() => ComparisonResult::Less,
            Some(_) => ComparisonResult::Greater,
        })
    }

    pub fn in_positive_cone(&self, x: &Point) -> Result<bool> {
        let origin = Point::origin(x.dim());
        Ok(self.compare(&origin, x)? != ComparisonResult::Greater)
    }

    /// `Min(P | ⪯)` by sequential filtering: keep the vertices minimising
    /// each level in turn.
    pub fn min_set(&self, poly: &Polytope) -> Result<FaceDescriptor> {
        if poly.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: poly.ambient_dim() });
        }
        let mut survivors: Vec<usize> = (0..poly.num_vertices()).collect();
        for level in &self.levels {
            let values: Vec<Rational> = survivors.iter().map(|&i| level.eval(poly.vertex(i))).collect();
            let min = values.iter().min().expect("polytopes are nonempty").clone();
            survivors = survivors
                .into_iter()
                .zip(values)
                .filter(|(_, v)| *v == min)
                .map(|(i, _)| i)
                .collect();
        }
        Ok(FaceDescriptor::new(survivors))
    }
}
