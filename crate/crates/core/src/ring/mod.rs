//! Representation rings and their augmentation filtrations.
//!
//! Every ring here is a commutative unital ring with a chosen Z-basis
//! (index 0 is the unit), integer structure constants and an augmentation
//! `ε: R → Z`. [`FusionRing`] is the validated form for representation
//! rings of finite groups; [`CircleRingTruncation`] models `R(S¹)/I(S¹)ⁿ`
//! in the basis `λ⁰, …, λⁿ⁻¹` with `λ = 1 − t`.

mod based;
mod circle;
mod fusion;
mod ideal;
mod lambda;
mod spec;

pub use based::{BasedRing, RingElement};
pub(crate) use based::same_ring;
pub use circle::{circle_ideal_image, circle_truncation, CircleRingTruncation};
pub use fusion::{cyclic_ring, product_ring, FusionRing, FusionTable};
pub use ideal::{
    augmentation_ideal, content, ideal_power, lattice_quotient, regular_class_check, IdealLattice,
    RegularClassCheck, DEFAULT_PRODUCT_CAP,
};
pub use lambda::lambda_expansion;
pub use spec::RingSpec;
