use alphanorm::limiting::{MetaRademacher, SignVector};
use alphanorm::multivariate::{gauss_copula, CorrelationMatrix, McConfig};
use alphanorm::numerics::{bivariate_normal_cdf, std_normal_cdf, std_normal_quantile, std_normal_sf};
use alphanorm::parallel::sample_vec;
use alphanorm::{AlphaNormal, Execution, RngStream, Weibull};
use proptest::prelude::*;

proptest! {
    #[test]
    fn normal_cdf_symmetry(x in -30.0f64..30.0) {
        prop_assert!((std_normal_cdf(x) + std_normal_cdf(-x) - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn normal_quantile_round_trip(u in 1e-12f64..(1.0 - 1e-12)) {
        let x = std_normal_quantile(u).unwrap();
        // Compare in the smaller tail, where the relative error is meaningful.
        let (got, want) = if u < 0.5 { (std_normal_cdf(x), u) } else { (std_normal_sf(x), 1.0 - u) };
        prop_assert!((got / want - 1.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_normal_quantile_inverts_cdf(alpha in 0.3f64..8.0, sigma in 0.2f64..5.0, u in 1e-6f64..(1.0 - 1e-6)) {
        let d = AlphaNormal::new(alpha, sigma).unwrap();
        let x = d.quantile(u).unwrap();
        prop_assert!((d.cdf(x) - u).abs() < 1e-12);
        prop_assert!((d.cdf(-x) - (1.0 - u)).abs() < 1e-12);
    }

    #[test]
    fn alpha_normal_pdf_even_and_positive(alpha in 0.3f64..8.0, x in 0.01f64..3.0) {
        let d = AlphaNormal::standard(alpha).unwrap();
        prop_assert_eq!(d.pdf(x), d.pdf(-x));
        prop_assert!(d.pdf(x) >= 0.0);
    }

    #[test]
    fn weibull_cdf_plus_survival(shape in 0.3f64..6.0, scale in 0.1f64..10.0, t in 0.0f64..20.0) {
        let w = Weibull::new(shape, scale).unwrap();
        prop_assert!((w.cdf(t).unwrap() + w.survival(t).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bivariate_cdf_monotone_and_bounded(x in -6.0f64..6.0, y in -6.0f64..6.0, dx in 0.0f64..2.0, rho in -0.999f64..0.999) {
        let p = bivariate_normal_cdf(x, y, rho);
        prop_assert!(p >= 0.0 && p <= std_normal_cdf(x).min(std_normal_cdf(y)) + 1e-15);
        prop_assert!(p >= std_normal_cdf(x) + std_normal_cdf(y) - 1.0 - 1e-15);
        prop_assert!(bivariate_normal_cdf(x + dx, y, rho) >= p - 1e-15);
        prop_assert!((p - bivariate_normal_cdf(y, x, rho)).abs() < 1e-15);
    }

    #[test]
    fn bivariate_cdf_reflection(x in -5.0f64..5.0, y in -5.0f64..5.0, rho in -0.99f64..0.99) {
        // P(X ≤ x, Y ≤ y) + P(X ≤ x, Y > y) = Φ(x), with Corr(X, -Y) = -ρ
        let s = bivariate_normal_cdf(x, y, rho) + bivariate_normal_cdf(x, -y, -rho);
        prop_assert!((s - std_normal_cdf(x)).abs() < 1e-12);
    }

    #[test]
    fn copula_within_frechet_bounds(u in 0.0f64..1.0, v in 0.0f64..1.0, rho in -0.99f64..0.99) {
        let s = CorrelationMatrix::bivariate(rho).unwrap();
        let c = gauss_copula(&s, &[u, v], &McConfig::default()).unwrap().value;
        prop_assert!(c >= (u + v - 1.0).max(0.0) && c <= u.min(v));
    }

    #[test]
    fn bivariate_limit_pmf_symmetric(rho in -0.99f64..0.99) {
        let m = MetaRademacher::new(CorrelationMatrix::bivariate(rho).unwrap());
        let mc = McConfig::default();
        let mut total = 0.0;
        for s in SignVector::all(2) {
            let p = m.pmf(&s, &mc).unwrap().value;
            prop_assert!(p >= 0.0);
            prop_assert!((p - m.pmf(&s.negate(), &mc).unwrap().value).abs() < 1e-15);
            total += p;
        }
        prop_assert!((total - 1.0).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn execution_mode_does_not_change_draws(seed in any::<u64>(), stream in any::<u64>(), n in 0usize..30_000) {
        let d = AlphaNormal::new(1.5, 0.7).unwrap();
        let draw = |s: &mut RngStream| d.sample(s);
        let a = sample_vec(n, &mut RngStream::new(seed, stream), Execution::Sequential, draw);
        let b = sample_vec(n, &mut RngStream::new(seed, stream), Execution::Parallel, draw);
        prop_assert_eq!(a.len(), n);
        prop_assert!(a.iter().zip(&b).all(|(x, y)| x.to_bits() == y.to_bits()));
    }
}
