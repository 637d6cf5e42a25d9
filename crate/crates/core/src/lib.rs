//! Exact Chern-number calculus for projectivized vector bundles.
//!
//! The crate is generic over the coefficient field ([`Scalar`]); the aliases
//! below fix it to arbitrary-precision rationals, which is what every
//! computation in the CLI and the tests uses.

pub mod catalog;
pub mod charclass;
pub mod cobordism;
pub mod error;
pub mod families;
pub mod linalg;
pub mod partition;
pub mod pbundle;
pub mod ring;
pub mod scalar;
pub mod schema;
pub mod symmetric;

pub use charclass::{
    apply, chi_functionals, chi_y_at, euler_functional, milnor_s, pontryagin_functionals, segre, ChernData,
    ChernPoly, ChernVector, LinearFunctional,
};
pub use cobordism::{CobordismSpace, Generators, IdealSlice, SpanReport};
pub use error::{Error, ErrorKind, Result};
pub use families::{
    alpha_generator, build_eq, build_yq, family_chern, family_chern_all, family_vector, product_chern_vector,
    DolgachevModel, FamilyChernPolynomial, ModelConfig,
};
pub use partition::{partition_count, partitions, Partition, WeightedTuple};
pub use pbundle::{positivity_scan, Base, BundleOnBase, PositivityEntry, Sign};
pub use ring::{product_ring, BasisSymbol, RingElement, RingPresentation, RingViolation};
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
pub type Ring = RingPresentation<Rational>;
pub type Element = RingElement<Rational>;
pub type Chern = ChernData<Rational>;
pub type Functional = LinearFunctional<Rational>;
pub type Vector = ChernVector<Rational>;
pub type Bundle = BundleOnBase<Rational>;
pub type Space = CobordismSpace<Rational>;
