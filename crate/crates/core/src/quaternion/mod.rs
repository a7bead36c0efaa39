//! Finite subgroups of the unit quaternions and the reflection groups
//! `B(Γ)^c` built from them: pairs `(a, b)` with `ab` in the derived
//! subgroup, extended by the swap `σ` and taken modulo `(−1, −1)`.

mod bgc;
mod group;
mod identify;
mod quat;

pub use bgc::{Bgc, BgcElement};
pub use group::{BinaryGroup, GroupKind};
pub use identify::{
    coxeter_base, cross_validate_h4, identify_type, inclusion, permutation_model, CoxeterCertificate, CrossValidation,
    Inclusion, PermutationModel,
};
pub use quat::Quaternion;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuaternionError {
    #[error("seed generators close to {got} elements, expected {expected}")]
    BadGenerators { got: usize, expected: usize },
    #[error("{0} has no quaternion coordinates")]
    NoCoordinates(String),
    #[error("no isomorphism to the permutation model was found")]
    NoIsomorphism,
    #[error("subgroup does not contain −1")]
    MissingCenter,
    #[error("{0}")]
    Identification(String),
}
