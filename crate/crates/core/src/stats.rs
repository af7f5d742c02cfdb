//! Goodness-of-fit and dependence statistics used by the Monte Carlo checks.

/// Kolmogorov–Smirnov statistic `sup |F_n - F|` of `samples` against `cdf`.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = cdf(x);
        let above = (i + 1) as f64 / n - f;
        let below = f - i as f64 / n;
        d.max(above).max(below)
    })
}

/// Asymptotic KS critical value `c(q)/√n`; `q` is 0.01 or 0.05.
pub fn ks_critical(n: usize, level: f64) -> f64 {
    let c = if level <= 0.01 { 1.628 } else { 1.358 };
    c / (n as f64).sqrt()
}

/// Sample mean and the standard error of the mean.
pub fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Proportion estimate `k/n` with its binomial standard error.
pub fn proportion(k: usize, n: usize) -> (f64, f64) {
    let p = k as f64 / n as f64;
    (p, (p * (1.0 - p) / n as f64).sqrt())
}

/// Kendall's τ with a Hoeffding (U-statistic) standard error, in O(n log n).
///
/// For each point `i` the concordance score `s_i = (C_i - D_i)/(n - 1)` is
/// built from the counts of points strictly below-left and above-right; then
/// `τ̂ = mean(s_i)` and `se ≈ 2·sd(s)/√n`. Assumes no ties.
pub fn kendall_tau(x: &[f64], y: &[f64]) -> (f64, f64) {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    let rank = |v: &[f64]| {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0usize; n];
        for (k, &i) in idx.iter().enumerate() {
            r[i] = k;
        }
        r
    };
    let rx = rank(x);
    let ry = rank(y);
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by_key(|&i| rx[i]);

    // Fenwick tree over y-ranks counting points with smaller x.
    let mut tree = vec![0u32; n + 1];
    let mut below_left = vec![0usize; n];
    for &i in &by_x {
        let mut k = ry[i];
        let mut c = 0usize;
        while k > 0 {
            c += tree[k] as usize;
            k &= k - 1;
        }
        below_left[i] = c;
        let mut k = ry[i] + 1;
        while k <= n {
            tree[k] += 1;
            k += k & k.wrapping_neg();
        }
    }

    let m = (n - 1) as f64;
    let scores: Vec<f64> = (0..n)
        .map(|i| {
            let above_right = (n - 1) + below_left[i] - rx[i] - ry[i];
            let concordant = (below_left[i] + above_right) as f64;
            (2.0 * concordant - m) / m
        })
        .collect();
    let (tau, se_mean) = mean_and_se(&scores);
    (tau, 2.0 * se_mean)
}
