//! Certified Rokhlin-dimension bounds for the named constructions, the
//! tensor-product rules, and recomputation of certificates.

mod bound;
mod check;
mod constructions;
mod report;

pub use bound::{
    tensor_rule, AnnihilatorWitness, Certificate, CommutativeGroup, DimBound, IdealKind, Stability,
    TensorRule, Upper,
};
pub use check::{check, sphere_identification, validate, SPHERE_CHECK_MAX_COPIES};
pub use constructions::{
    circle_ah_dimension, circle_product_dimension, commutative_dimension, finite_af_bounds,
    product_z2_bounds, z2_af_bounds, z6_collapse_report, CommutativeDimension, FiniteAfOutcome,
    Z6Collapse,
};
pub use report::{ActionDescriptor, Citation, Report};
