//! Goldman bracket and intersection numbers of closed geodesics on the
//! modular orbifold and its congruence covers.

pub mod bracket;
pub mod conjugacy;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod intersection;
pub mod matrix;
pub mod quadratic;
pub mod subgroup;
pub mod word;

pub use error::{Error, Result};
pub use matrix::{trace_of_power, translation_length, IsometryClass, ProjectiveMatrix};
pub use subgroup::SubgroupSpec;
pub use word::{evaluate, parse_element, parse_word, GroupWord, Letter};
pub use geometry::{
    crossing_sign, displacement_radius, fixed_points, hyperbolic_distance, product_axis_witnesses, quasigeodesic,
    Axis, PlanePoint,
};
pub use quadratic::{boundary_less, BoundaryPoint};
pub use conjugacy::{
    are_conjugate, brute_force_conjugacy_oracle, conjugacy_class, primitive_root, rl_normal_form, subgroup_root,
    ConjugacyClass, CyclicWord,
};
pub use enumeration::{
    crossing_double_cosets, crossing_double_cosets_with, enumerate_ball, geometric_intersection_oracle,
    geometric_self_intersection_oracle, same_double_coset, Ball, CandidateStrategy, CrossingOptions, DoubleCosetRep,
};
pub use bracket::{bracket, bracket_of_powers, jacobi_defect, manhattan_norm, BracketSum, BracketTerm};
pub use intersection::{
    intersection_number, intersection_number_capped, min_noncancel_exponent, self_intersection_number,
    self_intersection_number_capped, IntersectionReport, DEFAULT_P_MAX,
};
