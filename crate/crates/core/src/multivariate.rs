//! Meta-Gaussian multivariate α-normal law: the Gauss copula composed with
//! α-normal margins.

use std::f64::consts::PI;

use crate::alpha_normal::AlphaNormal;
use crate::error::{Error, Result};
use crate::numerics::bivariate::bivariate_normal_cdf;
use crate::numerics::mvn::{mvn_cdf_with, McEstimate};
use crate::numerics::normal::{inv_phi, LN_SQRT_2PI};
use crate::numerics::quad::{adaptive_quad, QuadratureSpec};
use crate::numerics::rng::{sample_std_normal, RngStream};
use crate::parallel::{map_chunks, sample_vec, Execution};
use crate::stats::proportion;

const PIVOT_MIN: f64 = 1e-12;
const SYMMETRY_TOL: f64 = 1e-12;

/// Positive-definite correlation matrix with its cached Cholesky factor.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    dim: usize,
    entries: Vec<f64>,
    chol: Vec<f64>,
}

impl CorrelationMatrix {
    /// Row-major `dim × dim` entries.
    pub fn new(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidCorrelation("dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: entries.len() });
        }
        for i in 0..dim {
            if (entries[i * dim + i] - 1.0).abs() > SYMMETRY_TOL {
                return Err(Error::InvalidCorrelation(format!("diagonal entry {i} is {}", entries[i * dim + i])));
            }
            for j in 0..i {
                let (a, b) = (entries[i * dim + j], entries[j * dim + i]);
                if !a.is_finite() || (a - b).abs() > SYMMETRY_TOL {
                    return Err(Error::InvalidCorrelation(format!("not symmetric at ({i}, {j})")));
                }
                if a.abs() > 1.0 {
                    return Err(Error::InvalidCorrelation(format!("entry ({i}, {j}) = {a} outside [-1, 1]")));
                }
            }
        }
        let chol = cholesky(dim, &entries)?;
        Ok(Self { dim, entries, chol })
    }

    pub fn identity(dim: usize) -> Self {
        let mut e = vec![0.0; dim * dim];
        for i in 0..dim {
            e[i * dim + i] = 1.0;
        }
        Self::new(dim, e).expect("identity is positive definite")
    }

    pub fn bivariate(rho: f64) -> Result<Self> {
        Self::new(2, vec![1.0, rho, rho, 1.0])
    }

    pub fn equicorrelated(dim: usize, rho: f64) -> Result<Self> {
        let e = (0..dim * dim).map(|k| if k / dim == k % dim { 1.0 } else { rho }).collect();
        Self::new(dim, e)
    }

    /// Parse the text format: a line holding `d`, then `d` rows of `d`
    /// comma-separated reals. Blank lines and `#` comments are skipped.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty correlation file".into()))?;
        let dim: usize = header
            .split(',')
            .next()
            .unwrap_or("")
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension header {header:?}")))?;
        let mut entries = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {row}")))?;
            let vals = line
                .split(',')
                .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number {s:?} in row {row}"))))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != dim {
                return Err(Error::Parse(format!("row {row} has {} values, expected {dim}", vals.len())));
            }
            entries.extend(vals);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing rows after the matrix".into()));
        }
        Self::new(dim, entries)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| format!("{}", self.get(i, j))).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    /// Row-major lower-triangular factor `L` with `Σ = L Lᵀ`.
    pub fn cholesky(&self) -> &[f64] {
        &self.chol
    }

    pub fn log_det(&self) -> f64 {
        2.0 * (0..self.dim).map(|i| self.chol[i * self.dim + i].ln()).sum::<f64>()
    }

    /// `zᵀ Σ⁻¹ z` by forward substitution.
    pub fn quadratic_form(&self, z: &[f64]) -> f64 {
        let d = self.dim;
        let mut y = vec![0.0; d];
        for i in 0..d {
            let s: f64 = (0..i).map(|j| self.chol[i * d + j] * y[j]).sum();
            y[i] = (z[i] - s) / self.chol[i * d + i];
        }
        y.iter().map(|v| v * v).sum()
    }

    /// Principal submatrix on `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Result<Self> {
        let k = idx.len();
        let e = (0..k * k).map(|m| self.get(idx[m / k], idx[m % k])).collect();
        Self::new(k, e)
    }

    /// `L z` for a standard normal vector `z`.
    pub fn correlate(&self, z: &[f64], out: &mut [f64]) {
        let d = self.dim;
        for (i, o) in out.iter_mut().enumerate().take(d) {
            *o = (0..=i).map(|j| self.chol[i * d + j] * z[j]).sum();
        }
    }

    /// One draw of `N(0, Σ)`.
    pub fn sample_normal(&self, rng: &mut RngStream) -> Vec<f64> {
        let z: Vec<f64> = (0..self.dim).map(|_| sample_std_normal(rng)).collect();
        let mut out = vec![0.0; self.dim];
        self.correlate(&z, &mut out);
        out
    }

    /// Log-density of `N(0, Σ)`.
    pub fn normal_log_pdf(&self, z: &[f64]) -> f64 {
        -0.5 * self.quadratic_form(z) - 0.5 * self.log_det() - self.dim as f64 * LN_SQRT_2PI
    }
}

fn cholesky(d: usize, a: &[f64]) -> Result<Vec<f64>> {
    let mut l = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i * d + k] * l[j * d + k]).sum();
            if i == j {
                let pivot = a[i * d + i] - s;
                if !(pivot > PIVOT_MIN) {
                    return Err(Error::InvalidCorrelation(format!("not positive definite (pivot {i} = {pivot:e})")));
                }
                l[i * d + i] = pivot.sqrt();
            } else {
                l[i * d + j] = (a[i * d + j] - s) / l[j * d + j];
            }
        }
    }
    Ok(l)
}

/// Monte Carlo settings for evaluations in three or more dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub seed: u64,
    pub stream_id: u64,
    pub samples: usize,
    pub exec: Execution,
}

impl Default for McConfig {
    fn default() -> Self {
        Self { seed: 0, stream_id: 0, samples: 200_000, exec: Execution::default() }
    }
}

impl McConfig {
    pub fn new(seed: u64, stream_id: u64, samples: usize) -> Self {
        Self { seed, stream_id, samples, ..Self::default() }
    }

    pub fn rng(&self) -> RngStream {
        RngStream::new(self.seed, self.stream_id)
    }
}

/// `Φ_Σ(z)` exactly for `d ≤ 2`, by Monte Carlo otherwise.
pub fn normal_cdf(sigma: &CorrelationMatrix, z: &[f64], mc: &McConfig) -> Result<McEstimate> {
    let d = sigma.dim();
    if z.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: z.len() });
    }
    match d {
        1 => Ok(McEstimate::exact(crate::numerics::normal::std_normal_cdf(z[0]))),
        2 => Ok(McEstimate::exact(bivariate_normal_cdf(z[0], z[1], sigma.get(0, 1)))),
        _ => mvn_cdf_with(z, sigma, &mut mc.rng(), mc.samples, mc.exec),
    }
}

/// Gauss copula `C_Σ(u) = Φ_Σ(Φ⁻¹(u₁), …, Φ⁻¹(u_d))`.
///
/// Coordinates equal to 1 are marginalized out and any zero gives 0. The
/// value is clamped to the Fréchet bounds, which only matters for Monte
/// Carlo estimates.
pub fn gauss_copula(sigma: &CorrelationMatrix, u: &[f64], mc: &McConfig) -> Result<McEstimate> {
    let d = sigma.dim();
    if u.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: u.len() });
    }
    if let Some(bad) = u.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        return Err(Error::Domain(format!("copula argument {bad} outside [0, 1]")));
    }
    if u.contains(&0.0) {
        return Ok(McEstimate::exact(0.0));
    }
    let keep: Vec<usize> = (0..d).filter(|&i| u[i] < 1.0).collect();
    let est = match keep.len() {
        0 => McEstimate::exact(1.0),
        1 => McEstimate::exact(u[keep[0]]),
        2 => {
            let (i, j) = (keep[0], keep[1]);
            McEstimate::exact(bivariate_normal_cdf(inv_phi(u[i]), inv_phi(u[j]), sigma.get(i, j)))
        }
        _ => {
            let sub = if keep.len() == d { sigma.clone() } else { sigma.submatrix(&keep)? };
            let z: Vec<f64> = keep.iter().map(|&i| inv_phi(u[i])).collect();
            mvn_cdf_with(&z, &sub, &mut mc.rng(), mc.samples, mc.exec)?
        }
    };
    let lower = (u.iter().sum::<f64>() - d as f64 + 1.0).max(0.0);
    let upper = u.iter().cloned().fold(1.0, f64::min);
    Ok(McEstimate { value: est.value.clamp(lower.min(upper), upper), std_error: est.std_error })
}

/// The multivariate α-normal law with correlation `Σ` and shape `α`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivariateAlphaNormal {
    sigma: CorrelationMatrix,
    alpha: f64,
    margin: AlphaNormal,
}

impl MultivariateAlphaNormal {
    pub fn new(sigma: CorrelationMatrix, alpha: f64) -> Result<Self> {
        let margin = AlphaNormal::standard(alpha)?;
        Ok(Self { sigma, alpha, margin })
    }

    pub fn sigma_matrix(&self) -> &CorrelationMatrix {
        &self.sigma
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim()
    }

    pub fn margin(&self) -> &AlphaNormal {
        &self.margin
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    /// `Φ_Σ(sgn(x_i)|x_i|^(α/2))`.
    pub fn joint_cdf(&self, x: &[f64], mc: &McConfig) -> Result<McEstimate> {
        self.check_len(x)?;
        let z: Vec<f64> = x.iter().map(|&v| self.margin.to_gaussian(v)).collect();
        normal_cdf(&self.sigma, &z, mc)
    }

    /// `C_Σ(Φ_α(x₁), …, Φ_α(x_d))`, the defining composition.
    pub fn joint_cdf_via_copula(&self, x: &[f64], mc: &McConfig) -> Result<McEstimate> {
        self.check_len(x)?;
        let u: Vec<f64> = x.iter().map(|&v| self.margin.cdf(v)).collect();
        gauss_copula(&self.sigma, &u, mc)
    }

    /// `(α/2)^d Π|x_i|^(α/2-1) φ_Σ(sgn(x_i)|x_i|^(α/2))`.
    ///
    /// A zero coordinate is a singular point for α ≠ 2 and is rejected.
    pub fn joint_pdf(&self, x: &[f64]) -> Result<f64> {
        self.log_joint_pdf(x).map(f64::exp)
    }

    pub fn log_joint_pdf(&self, x: &[f64]) -> Result<f64> {
        self.check_len(x)?;
        let a = self.alpha;
        if a != 2.0 && x.contains(&0.0) {
            return Err(Error::Singular(format!("joint_pdf at an axis point {x:?} (alpha = {a})")));
        }
        let z: Vec<f64> = x.iter().map(|&v| self.margin.to_gaussian(v)).collect();
        let jac: f64 =
            if a == 2.0 { 0.0 } else { x.iter().map(|v| (0.5 * a).ln() + (0.5 * a - 1.0) * v.abs().ln()).sum() };
        Ok(jac + self.sigma.normal_log_pdf(&z))
    }

    pub fn sample(&self, rng: &mut RngStream) -> Vec<f64> {
        let mut z = self.sigma.sample_normal(rng);
        for v in z.iter_mut() {
            *v = self.margin.from_gaussian(*v);
        }
        z
    }

    pub fn sample_n(&self, n: usize, rng: &mut RngStream, exec: Execution) -> Vec<Vec<f64>> {
        sample_vec(n, rng, exec, |s| self.sample(s))
    }

    /// Fraction of `n` draws componentwise `≤ x`, with its binomial standard error.
    pub fn empirical_cdf_check(&self, x: &[f64], rng: &mut RngStream, n: usize, exec: Execution) -> Result<McEstimate> {
        self.check_len(x)?;
        if n < 1000 {
            return Err(Error::Domain(format!("empirical_cdf_check needs n >= 1000, got {n}")));
        }
        let hits: usize = map_chunks(n, rng, exec, |mut s, range| {
            range.filter(|_| self.sample(&mut s).iter().zip(x).all(|(v, b)| v <= b)).count()
        })
        .into_iter()
        .sum();
        let (p, se) = proportion(hits, n);
        Ok(McEstimate { value: p, std_error: se })
    }
}

/// Bivariate α-normal density with correlation `rho`, written out directly.
pub fn bivariate_pdf(rho: f64, alpha: f64, x: f64, y: f64) -> Result<f64> {
    if !(rho.abs() < 1.0) {
        return Err(Error::Domain(format!("bivariate_pdf needs |rho| < 1, got {rho}")));
    }
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
    }
    if alpha != 2.0 && (x == 0.0 || y == 0.0) {
        return Err(Error::Singular(format!("bivariate_pdf at ({x}, {y}) with alpha = {alpha}")));
    }
    let one_m = 1.0 - rho * rho;
    let (ax, ay) = (x.abs(), y.abs());
    let sxy = (x * y).signum();
    let q = ax.powf(alpha) - 2.0 * rho * sxy * (ax * ay).powf(0.5 * alpha) + ay.powf(alpha);
    let jac = if alpha == 2.0 { 1.0 } else { (ax * ay).powf(0.5 * alpha - 1.0) };
    Ok(alpha * alpha / (8.0 * PI * one_m.sqrt()) * jac * (-q / (2.0 * one_m)).exp())
}

/// Two-dimensional quadrature helpers for the joint density.
pub mod numeric {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::with_tol(1e-12)
    }

    /// `∫∫ f` over the box `[x0, x1] × [y0, y1]` with itself free of the axes.
    fn box_integral(f: &(dyn Fn(f64, f64) -> f64 + Sync), x0: f64, x1: f64, y0: f64, y1: f64) -> Result<f64> {
        let inner = |x: f64| adaptive_quad(|y| f(x, y), y0, y1, &spec()).map(|r| r.value).unwrap_or(f64::NAN);
        Ok(adaptive_quad(inner, x0, x1, &QuadratureSpec::with_tol(1e-11))?.value)
    }

    fn density(m: &MultivariateAlphaNormal) -> impl Fn(f64, f64) -> f64 + Sync + '_ {
        move |x, y| {
            if x == 0.0 || y == 0.0 {
                return 0.0;
            }
            m.log_joint_pdf(&[x, y]).map(f64::exp).unwrap_or(f64::NAN)
        }
    }

    /// Split `(-∞, b]` at 0.
    fn pieces(b: f64) -> Vec<(f64, f64)> {
        if b > 0.0 {
            vec![(f64::NEG_INFINITY, 0.0), (0.0, b)]
        } else {
            vec![(f64::NEG_INFINITY, b)]
        }
    }

    /// `∫∫ over ℝ²` of the bivariate joint density, quadrant by quadrant.
    pub fn total_mass(m: &MultivariateAlphaNormal) -> Result<f64> {
        lower_orthant(m, f64::INFINITY, f64::INFINITY)
    }

    /// `∫_{-∞}^{x} ∫_{-∞}^{y}` of the bivariate joint density.
    pub fn lower_orthant(m: &MultivariateAlphaNormal, x: f64, y: f64) -> Result<f64> {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: m.dim() });
        }
        let f = density(m);
        let split = |b: f64| if b == f64::INFINITY { vec![(f64::NEG_INFINITY, 0.0), (0.0, b)] } else { pieces(b) };
        let mut total = 0.0;
        for &(x0, x1) in &split(x) {
            for &(y0, y1) in &split(y) {
                total += box_integral(&f, x0, x1, y0, y1)?;
            }
        }
        Ok(total)
    }
}
