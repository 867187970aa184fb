//! Operator spaces attached to a Leibniz algebra, computed as exact
//! nullspaces of structure-constant systems.

mod almost_inner;
pub mod identity;
mod operator;
mod registry;
mod structure;
mod system;

pub use almost_inner::{
    der_c_lie, exhaustive_check, hom_space, t_c_space, Certificate, HomSpace, PrimeCheck,
    SpaceOptions, EXHAUSTIVE_LIMIT,
};
pub use operator::OperatorSpace;
pub use registry::{lookup, registry, ComputedSpace, SpaceElement, SpaceKind};
pub use structure::{
    centroid_decomposition, centroid_pushforward, check_form_symmetry, gamma2_central_witness,
    ider_lie, idempotent_split, mult_operators, pushforward, rl_span, CentroidDecomposition,
    MultOperators, PushforwardReport,
};
pub use system::{
    centroid_lie, der_lie, der_z_closed_form, der_z_lie, gender_lie, gender_lie_with_witnesses,
    invariant_forms, qcentroid_lie, qder_lie, qder_lie_with_witnesses,
};
