//! Sequential against rayon-parallel execution for the chunked Monte Carlo
//! kernels. Both modes produce identical numbers; only wall time differs.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use alphanorm::multivariate::{CorrelationMatrix, MultivariateAlphaNormal};
use alphanorm::numerics::mvn_cdf_with;
use alphanorm::{AlphaNormal, Execution, RngStream};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn univariate_sampling(c: &mut Criterion) {
    let d = AlphaNormal::standard(3.0).unwrap();
    let mut group = c.benchmark_group("alpha_normal_sample_n");
    for &n in &[100_000usize, 1_000_000] {
        group.throughput(Throughput::Elements(n as u64));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| black_box(d.sample_n(n, &mut RngStream::new(1, 0), exec)))
            });
        }
    }
    group.finish();
}

fn multivariate_sampling(c: &mut Criterion) {
    let m = MultivariateAlphaNormal::new(CorrelationMatrix::equicorrelated(5, 0.3).unwrap(), 1.5).unwrap();
    let n = 200_000;
    let mut group = c.benchmark_group("multivariate_sample_n");
    group.throughput(Throughput::Elements(n as u64));
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(m.sample_n(n, &mut RngStream::new(2, 0), exec))));
    }
    group.finish();
}

fn mvn_cdf(c: &mut Criterion) {
    let mut group = c.benchmark_group("mvn_cdf");
    group.sample_size(20);
    for &d in &[3usize, 8] {
        let sigma = CorrelationMatrix::equicorrelated(d, 0.5).unwrap();
        let x = vec![0.5; d];
        let n = 500_000;
        group.throughput(Throughput::Elements(n as u64));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, d), &d, |b, _| {
                b.iter(|| black_box(mvn_cdf_with(&x, &sigma, &mut RngStream::new(3, 0), n, exec).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, univariate_sampling, multivariate_sampling, mvn_cdf);
criterion_main!(benches);
