//! Standard bivariate normal CDF.
//!
//! Genz's refinement of the Drezner–Wesolowsky single-integral method: the
//! integrand in `arcsin ρ` (or, for |ρ| ≥ 0.925, in `√(1-ρ²)` after an
//! asymptotic correction) is integrated by a fixed Gauss–Legendre rule of
//! 6, 12 or 20 points depending on |ρ|. Accurate to about 1e-15.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::numerics::normal::{std_normal_cdf, std_normal_sf, SQRT_2PI};

/// Gauss–Legendre nodes and weights on [-1, 1] (Newton on `P_n`).
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

struct Rules {
    r6: (Vec<f64>, Vec<f64>),
    r12: (Vec<f64>, Vec<f64>),
    r20: (Vec<f64>, Vec<f64>),
}

fn rules() -> &'static Rules {
    static RULES: OnceLock<Rules> = OnceLock::new();
    RULES.get_or_init(|| Rules { r6: gauss_legendre(6), r12: gauss_legendre(12), r20: gauss_legendre(20) })
}

/// `P(Z₁ ≤ x, Z₂ ≤ y)` for standard normals with correlation `rho`.
///
/// Infinite arguments are allowed. For `ρ ≥ 1` the comonotone value
/// `min(Φ(x), Φ(y))` is returned and for `ρ ≤ -1` the countermonotone
/// `max(Φ(x) + Φ(y) - 1, 0)`. NaN in, NaN out.
pub fn bivariate_normal_cdf(x: f64, y: f64, rho: f64) -> f64 {
    if x.is_nan() || y.is_nan() || rho.is_nan() {
        return f64::NAN;
    }
    if x == f64::NEG_INFINITY || y == f64::NEG_INFINITY {
        return 0.0;
    }
    if x == f64::INFINITY {
        return std_normal_cdf(y);
    }
    if y == f64::INFINITY {
        return std_normal_cdf(x);
    }
    if rho >= 1.0 {
        return std_normal_cdf(x.min(y));
    }
    if rho <= -1.0 {
        return (std_normal_cdf(x) - std_normal_sf(y)).max(0.0);
    }
    upper_orthant(-x, -y, rho).clamp(0.0, 1.0)
}

/// `P(Z₁ > h, Z₂ > k)`, finite `h`, `k` and `|r| < 1`.
fn upper_orthant(h: f64, k: f64, r: f64) -> f64 {
    let rules = rules();
    let (nodes, weights) = if r.abs() < 0.3 {
        (&rules.r6.0, &rules.r6.1)
    } else if r.abs() < 0.75 {
        (&rules.r12.0, &rules.r12.1)
    } else {
        (&rules.r20.0, &rules.r20.1)
    };
    let two_pi = 2.0 * PI;
    let mut hk = h * k;

    if r.abs() < 0.925 {
        let hs = 0.5 * (h * h + k * k);
        let asr = r.asin();
        let mut s = 0.0;
        for (&t, &w) in nodes.iter().zip(weights) {
            let sn = (0.5 * asr * (t + 1.0)).sin();
            s += w * ((sn * hk - hs) / (1.0 - sn * sn)).exp();
        }
        return s * asr / (2.0 * two_pi) + std_normal_sf(h) * std_normal_sf(k);
    }

    let mut k = k;
    if r < 0.0 {
        k = -k;
        hk = -hk;
    }
    let mut bvn = 0.0;
    let a2 = (1.0 - r) * (1.0 + r);
    let mut a = a2.sqrt();
    let bs = (h - k) * (h - k);
    let c = (4.0 - hk) / 8.0;
    let d = (12.0 - hk) / 16.0;
    let asr = -0.5 * (bs / a2 + hk);
    if asr > -100.0 {
        bvn = a * asr.exp() * (1.0 - c * (bs - a2) * (1.0 - d * bs / 5.0) / 3.0 + c * d * a2 * a2 / 5.0);
    }
    if -hk < 100.0 {
        let b = bs.sqrt();
        bvn -= (-0.5 * hk).exp() * SQRT_2PI * std_normal_cdf(-b / a) * b * (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a *= 0.5;
    for (&t, &w) in nodes.iter().zip(weights) {
        let xs = (a * (t + 1.0)).powi(2);
        let rs = (1.0 - xs).sqrt();
        let asr = -0.5 * (bs / xs + hk);
        if asr > -100.0 {
            bvn += a
                * w
                * asr.exp()
                * ((-hk * (1.0 - rs) / (2.0 * (1.0 + rs))).exp() / rs - (1.0 + c * xs * (1.0 + d * xs)));
        }
    }
    bvn = -bvn / two_pi;

    if r > 0.0 {
        bvn + std_normal_sf(h.max(k))
    } else {
        // k was negated above
        let gap = if h >= k {
            0.0
        } else if h < 0.0 {
            std_normal_cdf(k) - std_normal_cdf(h)
        } else {
            std_normal_sf(h) - std_normal_sf(k)
        };
        gap - bvn
    }
}
