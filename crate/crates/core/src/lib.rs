//! The α-normal distribution family, its Weibull companion, ψ_α Orlicz norms,
//! the meta-Gaussian multivariate α-normal law and its α → ∞ limit.
//!
//! Monte Carlo work is split into fixed-size chunks, each on its own random
//! stream, so results do not depend on whether the `parallel` feature is on.

// `!(x > 0.0)` is used on purpose so that NaN arguments are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod alpha_normal;
pub mod error;
pub mod limiting;
pub mod multivariate;
pub mod numerics;
pub mod parallel;
pub mod stats;
pub mod verify;
pub mod weibull;

pub use alpha_normal::{AlphaNormal, Regime, ShapeReport};
pub use error::{Error, Result};
pub use limiting::{MetaRademacher, SignVector};
pub use multivariate::{CorrelationMatrix, McConfig, MultivariateAlphaNormal};
pub use numerics::{McEstimate, RngStream};
pub use parallel::Execution;
pub use weibull::Weibull;
