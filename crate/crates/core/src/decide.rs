//! Parameters and helpers for decisions that may fall back to sampling.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::rat::{frac, int, Rat};

/// Controls symbolic work and the randomized fallback.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionConfig {
    /// Largest matrix handed to the symbolic determinant.
    pub budget_dim: usize,
    /// Seed for every pseudorandom choice.
    pub seed: u64,
    /// Points tried by the sampled zero test.
    pub samples: usize,
    /// Sample coordinates are integers in `[-bound, bound]`.
    pub sample_bound: i64,
}

impl Default for DecisionConfig {
    fn default() -> Self {
        DecisionConfig { budget_dim: 8, seed: 0, samples: 24, sample_bound: 1000 }
    }
}

impl DecisionConfig {
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }
}

/// Outcome of evaluating a polynomial of known degree bound at seeded
/// random points.
///
/// A nonzero value is a proof that the polynomial is nonzero. If every
/// sample vanished, a nonzero polynomial of degree `d` would have slipped
/// through with probability at most `error_bound = (d / (2*bound+1))^samples`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledVerdict {
    pub samples: usize,
    pub seed: u64,
    pub degree_bound: usize,
    pub nonzero_at: Option<Vec<Rat>>,
    pub error_bound: Rat,
}

/// Seeded Schwartz–Zippel test for a polynomial given as an evaluator.
pub fn sampled_zero_test(
    nvars: usize,
    degree_bound: usize,
    cfg: &DecisionConfig,
    stream: u64,
    f: impl Fn(&[Rat]) -> Rat,
) -> SampledVerdict {
    let mut rng = cfg.rng(stream);
    let mut nonzero_at = None;
    let mut tried = 0;
    for _ in 0..cfg.samples {
        tried += 1;
        let p: Vec<Rat> = (0..nvars).map(|_| int(rng.gen_range(-cfg.sample_bound..=cfg.sample_bound))).collect();
        if !f(&p).is_zero() {
            nonzero_at = Some(p);
            break;
        }
    }
    let width = 2 * cfg.sample_bound + 1;
    let one = frac(degree_bound.min(width as usize) as i64, width);
    let mut error_bound = int(1);
    for _ in 0..tried {
        error_bound *= &one;
    }
    if nonzero_at.is_some() {
        error_bound = int(0);
    }
    SampledVerdict { samples: tried, seed: cfg.seed, degree_bound, nonzero_at, error_bound }
}

/// Small seeded rationals `p/q` with `|p| <= 9`, `1 <= q <= 4`.
pub fn seeded_rationals(len: usize, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    (0..len).map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect()
}
