//! The univariate α-normal family `sgn(σG)|σG|^(2/α)`, `G ~ N(0, 1)`.

use std::f64::consts::{LN_2, PI};

use crate::error::{domain, Error, Result};
use crate::numerics::gamma::{ln_gamma_pos, EULER_GAMMA};
use crate::numerics::normal::{inv_phi, std_normal_cdf, std_normal_sf, SQRT_2PI};
use crate::numerics::quad::{adaptive_quad, QuadratureSpec};
use crate::numerics::rng::{sample_std_normal, RngStream};
use crate::numerics::roots::find_root;
use crate::parallel::{sample_vec, Execution};

/// α-normal law with shape `alpha` and Gaussian scale `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaNormal {
    alpha: f64,
    sigma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `0 < α < 2`: density diverges at 0.
    Cusp,
    /// `α = 2`: the normal law.
    Gaussian,
    /// `α > 2`: density vanishes at 0 with two symmetric maxima.
    Bimodal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeReport {
    pub regime: Regime,
    pub modes: Vec<f64>,
    /// `lim_{x→0⁺} φ'(x)`.
    pub slope_at_zero_plus: f64,
}

impl AlphaNormal {
    pub fn new(alpha: f64, sigma: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(domain(format!("alpha must be positive and finite, got {alpha}")));
        }
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(domain(format!("sigma must be positive and finite, got {sigma}")));
        }
        Ok(Self { alpha, sigma })
    }

    /// The model variable `G_α` (σ = 1).
    pub fn standard(alpha: f64) -> Result<Self> {
        Self::new(alpha, 1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    fn require_unit_sigma(&self, op: &str) -> Result<()> {
        if self.sigma != 1.0 {
            return Err(Error::Unsupported(format!("{op} is only available for sigma = 1 (got {})", self.sigma)));
        }
        Ok(())
    }

    /// `sgn(x)|x|^(α/2)`, the map taking this law back to `σG`.
    #[inline]
    pub fn to_gaussian(&self, x: f64) -> f64 {
        x.signum() * x.abs().powf(0.5 * self.alpha)
    }

    /// `sgn(z)|z|^(2/α)`, the map taking `σG` to this law.
    #[inline]
    pub fn from_gaussian(&self, z: f64) -> f64 {
        if z == 0.0 {
            return 0.0;
        }
        z.signum() * z.abs().powf(2.0 / self.alpha)
    }

    fn log_norm_const(&self) -> f64 {
        (self.alpha / (2.0 * SQRT_2PI * self.sigma)).ln()
    }

    /// Density. At `x = 0` it is `+∞` for α < 2, `1/(√(2π)σ)` for α = 2 and 0 for α > 2.
    pub fn pdf(&self, x: f64) -> f64 {
        let ax = x.abs();
        if ax == 0.0 {
            return if self.alpha < 2.0 {
                f64::INFINITY
            } else if self.alpha == 2.0 {
                1.0 / (SQRT_2PI * self.sigma)
            } else {
                0.0
            };
        }
        let decay = (-ax.powf(self.alpha) / (2.0 * self.sigma * self.sigma)).exp();
        if decay == 0.0 {
            return 0.0;
        }
        self.alpha / (2.0 * SQRT_2PI * self.sigma) * ax.powf(0.5 * self.alpha - 1.0) * decay
    }

    /// Log-density; undefined at the singular point 0.
    pub fn log_pdf(&self, x: f64) -> Result<f64> {
        if x == 0.0 || x.is_nan() {
            return Err(Error::Singular(format!("log_pdf is undefined at x = {x}")));
        }
        let ax = x.abs();
        Ok(self.log_norm_const() + (0.5 * self.alpha - 1.0) * ax.ln()
            - ax.powf(self.alpha) / (2.0 * self.sigma * self.sigma))
    }

    pub fn cdf(&self, x: f64) -> f64 {
        std_normal_cdf(self.to_gaussian(x) / self.sigma)
    }

    /// `P(|X| ≥ t) = 2(1 - Φ(t^(α/2)/σ))` for `t ≥ 0`.
    pub fn two_sided_tail(&self, t: f64) -> f64 {
        2.0 * std_normal_sf(t.abs().powf(0.5 * self.alpha) / self.sigma)
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(domain(format!("quantile needs u in (0, 1), got {u}")));
        }
        Ok(self.from_gaussian(self.sigma * inv_phi(u)))
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        self.from_gaussian(self.sigma * sample_std_normal(rng))
    }

    pub fn sample_n(&self, n: usize, rng: &mut RngStream, exec: Execution) -> Vec<f64> {
        sample_vec(n, rng, exec, |s| self.sample(s))
    }

    /// `φ'(x)` for `x > 0` (σ = 1 only).
    pub fn density_derivative(&self, x: f64) -> Result<f64> {
        self.require_unit_sigma("density_derivative")?;
        if !(x > 0.0) {
            return Err(domain(format!("density_derivative needs x > 0, got {x}")));
        }
        let a = self.alpha;
        let xa = x.powf(a);
        Ok(-a * a / (4.0 * SQRT_2PI) * x.powf(0.5 * a - 2.0) * (xa - (a - 2.0) / a) * (-0.5 * xa).exp())
    }

    pub fn shape_report(&self) -> Result<ShapeReport> {
        self.require_unit_sigma("shape_report")?;
        let a = self.alpha;
        let report = if a < 2.0 {
            ShapeReport { regime: Regime::Cusp, modes: vec![0.0], slope_at_zero_plus: f64::NEG_INFINITY }
        } else if a == 2.0 {
            ShapeReport { regime: Regime::Gaussian, modes: vec![0.0], slope_at_zero_plus: 0.0 }
        } else {
            let m = ((a - 2.0) / a).powf(1.0 / a);
            // x^(α/2-2) blows up for α < 4, is constant at 4 and vanishes above.
            let slope = if a < 4.0 {
                f64::INFINITY
            } else if a == 4.0 {
                2.0 / SQRT_2PI
            } else {
                0.0
            };
            ShapeReport { regime: Regime::Bimodal, modes: vec![-m, m], slope_at_zero_plus: slope }
        };
        Ok(report)
    }

    /// `E|X|^p = σ^(2p/α) 2^(p/α) Γ(p/α + 1/2) / √π`.
    pub fn absolute_moment(&self, p: f64) -> Result<f64> {
        if !(p > 0.0) {
            return Err(domain(format!("absolute_moment needs p > 0, got {p}")));
        }
        let r = p / self.alpha;
        Ok((2.0 * r * self.sigma.ln() + r * LN_2 + ln_gamma_pos(r + 0.5) - 0.5 * PI.ln()).exp())
    }

    pub fn variance(&self) -> f64 {
        self.absolute_moment(2.0).expect("p = 2 is in range")
    }

    /// Differential entropy (σ = 1 only).
    pub fn entropy(&self) -> Result<f64> {
        self.require_unit_sigma("entropy")?;
        let a = self.alpha;
        Ok((0.5 - 1.0 / a) * (EULER_GAMMA + LN_2) + (2.0 * SQRT_2PI / a).ln() + 0.5)
    }

    /// `‖X‖_ψα = σ^(2/α) (8/3)^(1/α)`.
    pub fn psi_norm(&self) -> f64 {
        (self.sigma * self.sigma * 8.0 / 3.0).powf(1.0 / self.alpha)
    }

    /// `E exp(|X/K|^α)` by quadrature over the density; `+∞` when `K^α ≤ 2σ²`.
    pub fn orlicz_functional(&self, k: f64) -> Result<f64> {
        if !(k > 0.0) {
            return Err(domain(format!("Orlicz functional needs K > 0, got {k}")));
        }
        let a = self.alpha;
        let ka = k.powf(a);
        if ka <= 2.0 * self.sigma * self.sigma {
            return Ok(f64::INFINITY);
        }
        let lc = self.log_norm_const();
        let rate = 1.0 / (2.0 * self.sigma * self.sigma) - 1.0 / ka;
        // Rescale so the exponential factor decays on a unit length.
        let scale = rate.powf(-1.0 / a);
        let integrand = |y: f64| {
            if y == 0.0 {
                return 0.0;
            }
            let x = scale * y;
            (lc + (0.5 * a - 1.0) * x.ln() - rate * x.powf(a)).exp() * scale
        };
        let r = adaptive_quad(integrand, 0.0, f64::INFINITY, &QuadratureSpec::with_tol(1e-13))?;
        Ok(2.0 * r.value)
    }

    /// `‖X‖_ψα` as the root of `E exp(|X/K|^α) = 2`.
    pub fn psi_norm_numeric(&self) -> Result<f64> {
        let s2 = self.sigma * self.sigma;
        let lo = (2.5 * s2).powf(1.0 / self.alpha);
        let hi = (100.0 * s2).powf(1.0 / self.alpha);
        let g = |k: f64| self.orlicz_functional(k).map(|v| v - 2.0).unwrap_or(f64::NAN);
        find_root(g, lo, hi, 1e-12 * lo)
    }

    /// `exp(-t^α/2)`, the Weibull(α, 2^(1/α)) tail dominating `P(|G_α| ≥ t)` (σ = 1).
    pub fn tail_upper_bound(&self, t: f64) -> Result<f64> {
        self.require_unit_sigma("tail_upper_bound")?;
        if !(t >= 0.0) {
            return Err(domain(format!("tail bound needs t >= 0, got {t}")));
        }
        Ok((-0.5 * t.powf(self.alpha)).exp())
    }

    /// `t₀^(2/α)`, beyond which `P(|G_α| ≥ t) ≥ exp(-t^α)` (σ = 1).
    pub fn tail_lower_threshold(&self) -> Result<f64> {
        self.require_unit_sigma("tail_lower_threshold")?;
        Ok(gaussian_tail_crossing()?.powf(2.0 / self.alpha))
    }
}

/// Root on [1, 3] of `√(2π) t e^(-t²/2) = 1`.
pub fn gaussian_tail_crossing() -> Result<f64> {
    find_root(|t| SQRT_2PI * t * (-0.5 * t * t).exp() - 1.0, 1.0, 3.0, 1e-14)
}

/// Moment generating function of χ²₁: `(1 - 2s)^(-1/2)` for `s < 1/2`.
pub fn chi2_mgf(s: f64) -> Result<f64> {
    if !(s < 0.5) {
        return Err(domain(format!("chi-square MGF needs s < 1/2, got {s}")));
    }
    Ok((1.0 - 2.0 * s).powf(-0.5))
}

/// Quadrature counterparts of the closed forms, integrating the density
/// split at its singular point 0.
pub mod numeric {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::with_tol(1e-13)
    }

    /// `∫ g(x) φ(x) dx` over ℝ for an even weight `g`, computed in log space
    /// as `2 ∫₀^∞ exp(ln g(x) + ln φ(x)) dx`, with `ln g` given.
    fn even_expectation(d: &AlphaNormal, log_weight: impl Fn(f64) -> f64) -> Result<f64> {
        let f = |x: f64| {
            if x == 0.0 {
                return 0.0;
            }
            let lp = d.log_pdf(x).unwrap_or(f64::NEG_INFINITY) + log_weight(x);
            if lp == f64::NEG_INFINITY {
                0.0
            } else {
                lp.exp()
            }
        };
        Ok(2.0 * adaptive_quad(f, 0.0, f64::INFINITY, &spec())?.value)
    }

    /// `∫_{-∞}^{0} φ + ∫_0^∞ φ`, each side separately.
    pub fn total_mass(d: &AlphaNormal) -> Result<f64> {
        let f = |x: f64| if x == 0.0 { 0.0 } else { d.pdf(x) };
        let left = adaptive_quad(f, f64::NEG_INFINITY, 0.0, &spec())?.value;
        let right = adaptive_quad(f, 0.0, f64::INFINITY, &spec())?.value;
        Ok(left + right)
    }

    /// `∫ₐᵇ φ`, split at 0 when the panel straddles it.
    pub fn mass_between(d: &AlphaNormal, a: f64, b: f64) -> Result<f64> {
        let f = |x: f64| if x == 0.0 { 0.0 } else { d.pdf(x) };
        if a < 0.0 && b > 0.0 {
            Ok(adaptive_quad(f, a, 0.0, &spec())?.value + adaptive_quad(f, 0.0, b, &spec())?.value)
        } else {
            Ok(adaptive_quad(f, a, b, &spec())?.value)
        }
    }

    pub fn absolute_moment(d: &AlphaNormal, p: f64) -> Result<f64> {
        even_expectation(d, |x| p * x.ln())
    }

    /// `E ln|X|`.
    pub fn mean_log_abs(d: &AlphaNormal) -> Result<f64> {
        let f = |x: f64| {
            if x == 0.0 {
                return 0.0;
            }
            let p = d.pdf(x);
            if p == 0.0 {
                0.0
            } else {
                p * x.ln()
            }
        };
        Ok(2.0 * adaptive_quad(f, 0.0, f64::INFINITY, &spec())?.value)
    }

    /// `-∫ φ ln φ`.
    pub fn entropy(d: &AlphaNormal) -> Result<f64> {
        let f = |x: f64| {
            if x == 0.0 {
                return 0.0;
            }
            let lp = d.log_pdf(x).unwrap_or(f64::NEG_INFINITY);
            if lp == f64::NEG_INFINITY {
                0.0
            } else {
                -lp.exp() * lp
            }
        };
        Ok(2.0 * adaptive_quad(f, 0.0, f64::INFINITY, &spec())?.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::normal::{std_normal_pdf, std_normal_quantile};
    use crate::stats::{ks_critical, ks_statistic};

    fn g(alpha: f64) -> AlphaNormal {
        AlphaNormal::standard(alpha).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(AlphaNormal::new(0.0, 1.0).is_err());
        assert!(AlphaNormal::new(1.0, -1.0).is_err());
        assert!(AlphaNormal::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn pdf_values_at_zero() {
        assert!((g(2.0).pdf(0.0) - 0.398_942_280_401_432_7).abs() < 1e-15);
        assert_eq!(g(1.0).pdf(0.0), f64::INFINITY);
        assert_eq!(g(3.0).pdf(0.0), 0.0);
        assert!((AlphaNormal::new(2.0, 2.0).unwrap().pdf(0.0) - 0.5 / SQRT_2PI).abs() < 1e-15);
    }

    #[test]
    fn pdf_is_normalized_and_even() {
        for &a in &[0.5, 1.0, 2.0, 3.0, 5.0] {
            for &s in &[0.5, 1.0, 2.0] {
                let d = AlphaNormal::new(a, s).unwrap();
                let m = numeric::total_mass(&d).unwrap();
                assert!((m - 1.0).abs() < 1e-8, "alpha {a} sigma {s}: {m}");
                assert_eq!(d.pdf(0.7), d.pdf(-0.7));
            }
        }
    }

    #[test]
    fn log_pdf_consistency() {
        assert!((g(2.0).log_pdf(0.5).unwrap() - (-0.5 * (2.0 * PI).ln() - 0.125)).abs() < 1e-14);
        let want = (1.0 / (2.0 * SQRT_2PI)).ln() - 0.5;
        assert!((g(1.0).log_pdf(1.0).unwrap() - want).abs() < 1e-14);
        assert!(matches!(g(1.0).log_pdf(0.0), Err(Error::Singular(_))));
        for &a in &[0.5, 1.0, 3.0, 5.0] {
            let d = AlphaNormal::new(a, 1.5).unwrap();
            for &x in &[0.01, 0.3, 1.0, 2.7] {
                let lp = d.log_pdf(x).unwrap();
                assert!(((lp - d.pdf(x).ln()) / lp).abs() < 1e-12);
                assert_eq!(lp, d.log_pdf(-x).unwrap());
            }
        }
    }

    #[test]
    fn cdf_examples() {
        for &a in &[0.5, 2.0, 7.0] {
            assert_eq!(AlphaNormal::new(a, 1.3).unwrap().cdf(0.0), 0.5);
        }
        assert!((g(2.0).cdf(1.0) - 0.841_344_746_068_542_9).abs() < 1e-12);
        assert_eq!(g(4.0).cdf(2.0), std_normal_cdf(4.0));
        assert_eq!(g(3.0).cdf(f64::INFINITY), 1.0);
        assert_eq!(g(3.0).cdf(f64::NEG_INFINITY), 0.0);
    }

    #[test]
    fn cdf_is_antiderivative() {
        for &a in &[0.5, 1.0, 3.0] {
            let d = AlphaNormal::new(a, 0.8).unwrap();
            for &(lo, hi) in &[(-1.0, 2.0), (0.2, 1.5), (-3.0, -0.5)] {
                let q = numeric::mass_between(&d, lo, hi).unwrap();
                assert!((q - (d.cdf(hi) - d.cdf(lo))).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn quantile_examples_and_symmetry() {
        assert_eq!(g(3.0).quantile(0.5).unwrap(), 0.0);
        assert!((g(2.0).quantile(0.975).unwrap() - 1.959964).abs() < 1e-6);
        let q4 = g(4.0).quantile(0.975).unwrap();
        assert!((q4 - std_normal_quantile(0.975).unwrap().sqrt()).abs() < 1e-14);
        assert!((q4 - 1.399987).abs() < 1e-5);
        assert!(g(1.0).quantile(0.0).is_err());
        assert!(g(1.0).quantile(1.0).is_err());
        for &a in &[0.5, 1.0, 3.0] {
            let d = AlphaNormal::new(a, 1.7).unwrap();
            for &u in &[0.01, 0.2, 0.45] {
                assert!((d.quantile(1.0 - u).unwrap() + d.quantile(u).unwrap()).abs() < 1e-9);
                assert!((d.cdf(d.quantile(u).unwrap()) - u).abs() < 1e-9);
            }
            for &x in &[-3.0, -1.0, -0.1, 0.1, 1.0, 3.0] {
                assert!((d.quantile(d.cdf(x)).unwrap() - x).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn reduces_to_standard_normal() {
        let d = g(2.0);
        for i in 0..10 {
            let x = -2.25 + 0.5 * i as f64;
            assert!((d.pdf(x) - std_normal_pdf(x)).abs() < 1e-10);
            assert!((d.cdf(x) - std_normal_cdf(x)).abs() < 1e-10);
            let u = 0.05 + 0.1 * i as f64;
            assert!((d.quantile(u).unwrap() - std_normal_quantile(u).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn sampling_matches_cdf() {
        for &(a, s) in &[(1.0, 1.0), (2.0, 1.0), (3.0, 0.5)] {
            let d = AlphaNormal::new(a, s).unwrap();
            let n = 100_000;
            let xs = d.sample_n(n, &mut RngStream::new(21, 0), Execution::default());
            let ks = ks_statistic(&xs, |x| d.cdf(x));
            assert!(ks < ks_critical(n, 0.01), "alpha {a}: D = {ks}");
            let pos = xs.iter().filter(|&&x| x > 0.0).count() as f64 / n as f64;
            assert!((pos - 0.5).abs() < 4.0 / (2.0 * (n as f64).sqrt()));
        }
    }

    #[test]
    fn cusp_sample_variance_is_three() {
        let n = 1_000_000;
        let xs = g(1.0).sample_n(n, &mut RngStream::new(5, 9), Execution::default());
        let m2 = xs.iter().map(|x| x * x).sum::<f64>() / n as f64;
        let m4 = xs.iter().map(|x| x.powi(4)).sum::<f64>() / n as f64;
        let se = ((m4 - m2 * m2) / n as f64).sqrt();
        assert!((m2 - 3.0).abs() < 3.0 * se, "{m2} ± {se}");
    }

    #[test]
    fn derivative_examples() {
        let d3 = g(3.0);
        let mode = (1.0f64 / 3.0).powf(1.0 / 3.0);
        assert!(d3.density_derivative(mode).unwrap().abs() < 1e-12);
        assert!((g(2.0).density_derivative(1.0).unwrap() + std_normal_pdf(1.0)).abs() < 1e-15);
        // φ₄(x) = (2/√(2π)) x e^{-x⁴/2}, so the slope at 0⁺ is 2/√(2π).
        assert!((g(4.0).density_derivative(1e-8).unwrap() - 2.0 / SQRT_2PI).abs() < 1e-12);
        assert!(AlphaNormal::new(3.0, 2.0).unwrap().density_derivative(1.0).is_err());
        assert!(d3.density_derivative(0.0).is_err());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        for &a in &[0.5, 1.0, 2.0, 3.0, 4.5] {
            let d = g(a);
            for i in 1..30 {
                let x = 0.1 * i as f64;
                let h = 1e-5 * x;
                let fd = (d.pdf(x + h) - d.pdf(x - h)) / (2.0 * h);
                let an = d.density_derivative(x).unwrap();
                assert!((fd - an).abs() <= 1e-5 * an.abs().max(1e-6), "alpha {a}, x {x}");
            }
        }
    }

    #[test]
    fn shape_regimes() {
        let r = g(1.0).shape_report().unwrap();
        assert_eq!(r.regime, Regime::Cusp);
        assert_eq!(r.modes, vec![0.0]);
        assert_eq!(r.slope_at_zero_plus, f64::NEG_INFINITY);
        let r = g(2.0).shape_report().unwrap();
        assert_eq!((r.regime, r.slope_at_zero_plus), (Regime::Gaussian, 0.0));
        let r = g(4.0).shape_report().unwrap();
        assert_eq!(r.regime, Regime::Bimodal);
        let m = r.modes[1];
        assert!((m - 0.840_896_415_253_714_5).abs() < 1e-12);
        let root = find_root(|x| g(4.0).density_derivative(x).unwrap(), 0.5, 1.2, 1e-14).unwrap();
        assert!((root - m).abs() < 1e-10);
        let d = g(4.0);
        assert!(d.pdf(m) > d.pdf(m + 1e-4) && d.pdf(m) > d.pdf(m - 1e-4));
        assert!(AlphaNormal::new(4.0, 2.0).unwrap().shape_report().is_err());
    }

    #[test]
    fn moments() {
        assert!((g(2.0).absolute_moment(2.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((g(1.0).absolute_moment(2.0).unwrap() - 3.0).abs() < 1e-13);
        for &a in &[0.5, 1.0, 3.0, 7.0] {
            assert!((g(a).absolute_moment(a).unwrap() - 1.0).abs() < 1e-13);
        }
        assert!(g(1.0).absolute_moment(0.0).is_err());
        assert!((g(1.0).variance() - 3.0).abs() < 1e-13);
        // σ scaling: |X| = (σ|G|)^(2/α)
        let d = AlphaNormal::new(3.0, 2.0).unwrap();
        let want = 2f64.powf(4.0 / 3.0) * g(3.0).absolute_moment(2.0).unwrap();
        assert!((d.absolute_moment(2.0).unwrap() - want).abs() < 1e-12);
        for &a in &[1.0, 2.0, 3.0] {
            for &p in &[0.5, 1.0, 2.0, 4.0] {
                let q = numeric::absolute_moment(&g(a), p).unwrap();
                assert!((q - g(a).absolute_moment(p).unwrap()).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn entropy_closed_form_matches_quadrature() {
        assert!((g(2.0).entropy().unwrap() - ((2.0 * PI).sqrt().ln() + 0.5)).abs() < 1e-12);
        assert!((g(1.0).entropy().unwrap() - 1.476905).abs() < 1e-6);
        for &a in &[0.5, 1.0, 2.0, 3.0, 5.0] {
            let num = numeric::entropy(&g(a)).unwrap();
            assert!((num - g(a).entropy().unwrap()).abs() < 1e-6, "alpha {a}");
        }
        assert!(AlphaNormal::new(2.0, 3.0).unwrap().entropy().is_err());
    }

    #[test]
    fn mean_log_abs() {
        for &a in &[1.0, 2.0, 3.0] {
            let q = numeric::mean_log_abs(&g(a)).unwrap();
            assert!((q + (EULER_GAMMA + LN_2) / a).abs() < 1e-7);
        }
    }

    #[test]
    fn psi_norms() {
        assert!((g(2.0).psi_norm() - (8.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((g(1.0).psi_norm() - 8.0 / 3.0).abs() < 1e-15);
        assert!((g(4.0).psi_norm() - 1.277_886).abs() < 1e-6);
        for &a in &[0.5, 1.0, 2.0, 4.0] {
            let k = g(a).psi_norm_numeric().unwrap();
            assert!((k - g(a).psi_norm()).abs() < 1e-6, "alpha {a}: {k}");
        }
        let d = g(1.5);
        assert!(d.orlicz_functional(d.psi_norm() * 1.001).unwrap() < 2.0);
        assert_eq!(d.orlicz_functional(0.5).unwrap(), f64::INFINITY);
        let s = AlphaNormal::new(3.0, 1.4).unwrap();
        assert!((s.psi_norm_numeric().unwrap() - s.psi_norm()).abs() < 1e-6);
    }

    #[test]
    fn chi2_mgf_values() {
        assert_eq!(chi2_mgf(0.0).unwrap(), 1.0);
        assert!((chi2_mgf(3.0 / 8.0).unwrap() - 2.0).abs() < 1e-15);
        assert!((chi2_mgf(0.25).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!(chi2_mgf(0.5).is_err());
    }

    #[test]
    fn tail_bounds() {
        assert_eq!(g(2.0).tail_upper_bound(0.0).unwrap(), 1.0);
        for &a in &[0.5, 1.0, 2.0, 3.0, 5.0] {
            let d = g(a);
            let thr = d.tail_lower_threshold().unwrap();
            for i in 1..=8 {
                let t = 0.5 * i as f64;
                let tail = d.two_sided_tail(t);
                assert!(tail <= d.tail_upper_bound(t).unwrap() + 1e-15);
                if t >= thr {
                    assert!(tail >= (-t.powf(a)).exp());
                }
            }
        }
        assert!(AlphaNormal::new(2.0, 2.0).unwrap().tail_lower_threshold().is_err());
        assert!(g(2.0).tail_upper_bound(-1.0).is_err());
    }
}
