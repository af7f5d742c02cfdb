//! Seeded, splittable random streams.
//!
//! A stream is a ChaCha12 keystream: the key is expanded from `seed` and the
//! 64-bit nonce is `stream_id`, so distinct ids give independent sequences
//! under the same seed. [`RngStream::split`] hands out child streams for
//! chunked or parallel work without sharing state between tasks.

use rand::distr::Open01;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Exp1, StandardNormal};

#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream_id: u64,
    inner: ChaCha12Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut inner = ChaCha12Rng::seed_from_u64(seed);
        inner.set_stream(stream_id);
        Self { seed, stream_id, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Draw a fresh key from this stream and return a factory for
    /// children sharing it, one nonce each. Advances `self`.
    pub fn split(&mut self) -> StreamFamily {
        StreamFamily { seed: self.inner.next_u64() }
    }

    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform on the open interval `(0, 1)`.
    pub fn uniform_open(&mut self) -> f64 {
        self.inner.sample(Open01)
    }
}

/// Children of a split stream: `family.stream(k)` is the k-th child.
#[derive(Debug, Clone, Copy)]
pub struct StreamFamily {
    seed: u64,
}

impl StreamFamily {
    pub fn stream(&self, k: u64) -> RngStream {
        RngStream::new(self.seed, k)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

pub fn sample_std_normal(rng: &mut RngStream) -> f64 {
    rng.sample(StandardNormal)
}

pub fn sample_std_exponential(rng: &mut RngStream) -> f64 {
    rng.sample(Exp1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = 1_000_000;

    #[test]
    fn normal_mean_within_clt_band() {
        let mut rng = RngStream::new(7, 0);
        let mean: f64 = (0..N).map(|_| sample_std_normal(&mut rng)).sum::<f64>() / N as f64;
        assert!(mean.abs() < 4.0 / (N as f64).sqrt(), "{mean}");
    }

    #[test]
    fn exponential_mean_within_clt_band() {
        let mut rng = RngStream::new(7, 1);
        let mean: f64 = (0..N).map(|_| sample_std_exponential(&mut rng)).sum::<f64>() / N as f64;
        assert!((mean - 1.0).abs() < 4.0 / (N as f64).sqrt(), "{mean}");
        let mut rng = RngStream::new(7, 1);
        assert!((0..1000).all(|_| sample_std_exponential(&mut rng) >= 0.0));
    }

    #[test]
    fn same_seed_and_stream_repeat() {
        let mut a = RngStream::new(42, 3);
        let mut b = RngStream::new(42, 3);
        for _ in 0..1000 {
            assert_eq!(sample_std_normal(&mut a).to_bits(), sample_std_normal(&mut b).to_bits());
        }
    }

    #[test]
    fn distinct_streams_differ_and_are_uncorrelated() {
        let mut a = RngStream::new(42, 0);
        let mut b = RngStream::new(42, 1);
        let n = 200_000;
        let mut sxy = 0.0;
        let mut same = 0;
        for _ in 0..n {
            let (x, y) = (sample_std_normal(&mut a), sample_std_normal(&mut b));
            sxy += x * y;
            if x == y {
                same += 1;
            }
        }
        assert_eq!(same, 0);
        assert!((sxy / n as f64).abs() < 4.0 / (n as f64).sqrt());
    }

    #[test]
    fn split_is_deterministic_and_advances_parent() {
        let mut a = RngStream::new(1, 0);
        let mut b = RngStream::new(1, 0);
        let fa = a.split();
        let fb = b.split();
        assert_eq!(fa.stream(5).next_u64(), fb.stream(5).next_u64());
        assert_ne!(fa.stream(5).next_u64(), fa.stream(6).next_u64());
        assert_ne!(a.split().stream(0).next_u64(), fa.stream(0).next_u64());
    }

    #[test]
    fn open_uniform_excludes_endpoints() {
        let mut rng = RngStream::new(0, 0);
        for _ in 0..100_000 {
            let u = rng.uniform_open();
            assert!(u > 0.0 && u < 1.0);
        }
    }
}
