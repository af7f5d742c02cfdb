//! Chunked execution shared by the Monte Carlo estimators and samplers.
//!
//! Work of size `n` is cut into fixed chunks; chunk `k` always gets child
//! stream `k` of a split [`RngStream`], and per-chunk results come back in
//! chunk order. Output is therefore bit-identical whether the chunks run on
//! the rayon pool or one after another.

use std::ops::Range;

use crate::numerics::rng::{RngStream, StreamFamily};

/// Samples per chunk.
pub const CHUNK: usize = 8192;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon thread pool; identical to `Sequential` without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

fn chunks(n: usize) -> Vec<Range<usize>> {
    (0..n.div_ceil(CHUNK)).map(|k| k * CHUNK..((k + 1) * CHUNK).min(n)).collect()
}

/// Run `job(stream, range)` for every chunk of `0..n`, in chunk order.
pub fn map_chunks<T, F>(n: usize, rng: &mut RngStream, exec: Execution, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(RngStream, Range<usize>) -> T + Sync + Send,
{
    let family = rng.split();
    run(chunks(n), family, exec, job)
}

#[cfg(feature = "parallel")]
fn run<T, F>(ranges: Vec<Range<usize>>, family: StreamFamily, exec: Execution, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(RngStream, Range<usize>) -> T + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Execution::Parallel => {
            ranges.into_par_iter().enumerate().map(|(k, r)| job(family.stream(k as u64), r)).collect()
        }
        Execution::Sequential => sequential(ranges, family, job),
    }
}

#[cfg(not(feature = "parallel"))]
fn run<T, F>(ranges: Vec<Range<usize>>, family: StreamFamily, _exec: Execution, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(RngStream, Range<usize>) -> T + Sync + Send,
{
    sequential(ranges, family, job)
}

fn sequential<T, F>(ranges: Vec<Range<usize>>, family: StreamFamily, job: F) -> Vec<T>
where
    F: Fn(RngStream, Range<usize>) -> T,
{
    ranges.into_iter().enumerate().map(|(k, r)| job(family.stream(k as u64), r)).collect()
}

/// Map independent items (no randomness) preserving order.
pub fn map_items<I, T, F>(items: Vec<I>, exec: Execution, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Draw `n` values with `draw`, chunked as above.
pub fn sample_vec<T, F>(n: usize, rng: &mut RngStream, exec: Execution, draw: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut RngStream) -> T + Sync + Send,
{
    map_chunks(n, rng, exec, |mut s, r| r.map(|_| draw(&mut s)).collect::<Vec<T>>()).into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rng::sample_std_normal;

    #[test]
    fn chunking_covers_range() {
        let r = chunks(3 * CHUNK + 5);
        assert_eq!(r.len(), 4);
        assert_eq!(r[3], 3 * CHUNK..3 * CHUNK + 5);
        assert!(chunks(0).is_empty());
    }

    #[test]
    fn sequential_and_parallel_agree_bitwise() {
        let a = sample_vec(50_000, &mut RngStream::new(9, 2), Execution::Sequential, sample_std_normal);
        let b = sample_vec(50_000, &mut RngStream::new(9, 2), Execution::Parallel, sample_std_normal);
        assert_eq!(a.len(), 50_000);
        assert!(a.iter().zip(&b).all(|(x, y)| x.to_bits() == y.to_bits()));
    }
}
