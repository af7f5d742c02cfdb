//! Numerical kernel used by every distribution module: normal primitives,
//! log-gamma, bivariate and multivariate normal CDFs, quadrature, root
//! finding and seeded random streams.

pub mod bivariate;
pub mod gamma;
pub mod mvn;
pub mod normal;
pub mod quad;
pub mod rng;
pub mod roots;

pub use bivariate::bivariate_normal_cdf;
pub use gamma::{log_gamma, EULER_GAMMA};
pub use mvn::{mvn_cdf, mvn_cdf_with, McEstimate};
pub use normal::{std_normal_cdf, std_normal_pdf, std_normal_quantile, std_normal_sf};
pub use quad::{adaptive_quad, QuadResult, QuadratureSpec};
pub use rng::{sample_std_exponential, sample_std_normal, RngStream};
pub use roots::find_root;
