//! The base algebra `K`, its twist `alpha`, the extension `A` and bimodules over it.

pub mod base;
pub mod bimodule;
pub mod endomorphism;
pub mod extension;
pub mod fixtures;
pub mod group;
pub mod hypotheses;
pub mod rank_one;

pub use base::{group_algebra, group_algebra_of, BaseAlgebra};
pub use bimodule::BimoduleData;
pub use endomorphism::{character_endomorphism, AlgebraEndomorphism};
pub use extension::{validate_monogenic, AElement, KPoly, MonogenicData};
pub use group::FiniteGroup;
pub use hypotheses::{
    check_collapse, eigen_split, k_twisted_commutators, twisted_commutator_subspace, verify_lambda_breve,
    CollapseReport, EigenComponent, LambdaBreveCheck,
};
pub use rank_one::{rank_one_extension, RankOneCase, RankOneExtension};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("not unital: {0}")]
    NotUnital(String),
    #[error("not associative: {0}")]
    NotAssociative(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("not an algebra endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("character is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("invalid extension data: {}", .0.join("; "))]
    InvalidExtension(Vec<String>),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("decomposition unavailable, generic path required: {0}")]
    NotDiagonal(String),
}
