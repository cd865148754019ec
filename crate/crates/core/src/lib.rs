//! Exact combinatorics for the largest Lusztig series of finite classical
//! groups.
//!
//! Everything is computed in arbitrary precision: partition counts, β(n),
//! the unipotent counts α, α⁺, α⁻, maxima over centralizer shapes and the
//! closed-form bounds f, f±, τ, θ, θ±.

pub mod argmax;
pub mod beta;
pub mod bounds;
pub mod centralizer;
pub mod error;
pub mod group;
pub mod partition;
pub mod unipotent;

pub use argmax::MaxResult;
pub use beta::{beta, beta_maximizers, beta_oracle, beta_prime, beta_ratio, BetaResult, ENUMERATION_GUARD};
pub use bounds::{
    bound_value, max_alpha_beta, max_gamma, max_gamma_eq, series_bound, small_n_max, un5_constant, BoundKind,
    BoundSource, GammaKind, ResidueTerm, SplitWitness, Un5Column, Un5Constant,
};
pub use centralizer::{
    attainment_threshold, center_index_multiplier, enumerate_shapes, max_series_size, minus_cap, minus_cap_maximizers,
    minus_cap_oracle, nu_of_shape, CenterFamily, CentralizerShape, EigenPart, FactorKind, GenericFactor,
    ParityCondition, QBound, ShapeClass, Threshold,
};
pub use error::{CoreError, Result};
pub use group::{Family, GroupSpec, QParity, Sign};
pub use partition::{
    pair_partition_count, partition_count, partition_product, partitions_of, Nat, Partition, PartitionMemo,
};
pub use unipotent::{alpha, alpha_minus, alpha_plus, alpha_upper_estimate, nu_linear, AlphaKind};
