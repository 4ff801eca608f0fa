//! Exact face certificates for convex bodies.
//!
//! Everything here runs over arbitrary-precision rationals; nothing is ever
//! rounded. The crate is `no_std` and only needs an allocator.
//!
//! * [`exact`]: rationals, points, functionals and affine manifolds.
//! * [`polytope`]: V-represented polytopes, facet enumeration, face lattices.
//! * [`step_affine`]: corteges of affine functionals and the step-affine
//!   functions they define.
//! * [`lex`]: compatible total preorders of finite rank and lexicographic
//!   minimisation over a polytope.
//! * [`certify`]: rank-1 and chain certificates for polytope faces, their
//!   verification, and the four-way equivalence report.
//! * [`disk`]: convex hulls of rational disks, where faces that are
//!   lexicographically exposed but not exposed live.
//! * [`oracle`]: brute-force reference implementations used for
//!   cross-checking.
//! * [`invariants`]: sampled checks of the structural properties.
#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod certify;
pub mod disk;
mod error;
pub mod exact;
pub mod fixtures;
pub mod invariants;
pub mod lex;
pub mod oracle;
pub mod polytope;
pub mod quad;
pub mod sample;
pub mod step_affine;

pub use error::{Error, Result};
pub use exact::{
    affine_hull, linear_independent, solve_affine_zero_set, AffineFunctional, AffineManifold,
    LinearFunctional, Point, Rational,
};
pub use polytope::{Facet, FaceDescriptor, Polytope};
pub use step_affine::{Cortege, Region, StepAffineFunction};
