//! Exact-arithmetic invariants for cubic fourfolds and their Kuznetsov
//! components: truncated intersection-ring calculus, Euler and Mukai
//! pairings, mutation and projection at the level of numerical K-theory,
//! twisted Clifford-module characters with tilt slopes, and complete
//! enumeration of numerical walls for a target character.
//!
//! All arithmetic is exact rational; equality is decidable and no
//! tolerance parameters exist anywhere. Everything is a pure function on
//! immutable values and safe to use from any number of threads.

#![allow(clippy::result_large_err)]

pub mod clifford;
pub mod error;
pub mod intersection;
pub mod rational;
pub mod riemann_roch;
pub mod verify;
pub mod walls;

pub use clifford::{
    b_char, char_from_bundle, clifford_image, discriminant, ku_constraint_holds,
    lattice_coords, reduced_central_charge, slope_mu, slope_mu_poly, B0Char, LatticeBasis,
    Slope, SlopeFn, SlopePoly, TiltParams,
};
pub use error::Error;
pub use intersection::{exp_class, tangent_chern, todd, todd_from_chern, GradedClass, VarietyId};
pub use rational::{approx6, int, parse_rat, rat, Rat};
pub use riemann_roch::{
    conic_instanton_class, curve_class, euler_pairing, lambda_classes, left_mutation,
    line_structure_class, mukai_pairing, project_to_ku, project_to_ku_alt, quintic_ideal_class,
    right_mutation, CurveData, KClass,
};
pub use verify::{run_verify, Check, CheckStatus, VerifyReport};
pub use walls::{
    alpha_approx, check_solution, enumerate_walls, solve_alpha_sq, BoundaryCase, WallEnumeration,
    WallProblem, WallSolution,
};
#[doc(hidden)]
pub use walls::enumerate_walls_widened;
