//! Seeded generation of random rational inputs.
//!
//! The generator is ChaCha8 seeded from a `u64`, which gives the same stream
//! on every platform; commands echo the seed so runs can be replayed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{rat, Rational};

pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Clone)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
    seed: u64,
    /// numerators are drawn from `-height..=height`
    pub height: i64,
    /// denominators are drawn from `1..=max_denominator`
    pub max_denominator: i64,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            height: 20,
            max_denominator: 9,
        }
    }

    pub fn with_bounds(seed: u64, height: i64, max_denominator: i64) -> Self {
        assert!(height >= 1 && max_denominator >= 1);
        Self {
            height,
            max_denominator,
            ..Self::new(seed)
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.height..=self.height);
        let d = self.rng.gen_range(1..=self.max_denominator);
        rat(n, d)
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn nonzero_vector(&mut self, len: usize) -> Vec<Rational> {
        assert!(len > 0, "no nonzero vectors in dimension 0");
        loop {
            let v = self.vector(len);
            if !crate::linalg::is_zero_vec(&v) {
                return v;
            }
        }
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}
