//! Concrete polyhedral product spaces: finite point-set models and
//! products of sphere pairs.

mod finite;
mod sphere;

pub use finite::{
    complement_identity_check, finite_product, ghost_factorization_check, substitution_identity_check,
    FiniteSpacePair, IdentityVerdict, TupleSet,
};
pub use sphere::{
    sphere_pair_cohomology, sphere_pair_duality_check, sphere_pair_homology, Contribution, Part,
    SpaceHomologyReport, SphereDualityVerdict, SpherePairSystem,
};
