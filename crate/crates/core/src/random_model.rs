//! Sampling from the random chain model and Monte Carlo estimates of the
//! expected indices.
//!
//! Trial `i` draws from its own ChaCha8 stream selected by `(seed, i)`, so an
//! estimate does not depend on how trials are scheduled across threads.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Float, Integer, Rational};
use serde::{Serialize, Serializer};

use crate::asymptotics::{float_to_string, PRECISION};
use crate::count::{count_chain, IndexKind};
use crate::error::{Error, Result};
use crate::expectation::{ExactRational, ProbabilityTriple};
use crate::graph::{AttachmentSequence, AttachmentType};

const VARIATE_BITS: u32 = 53;

/// Integer thresholds `ceil(a * 2^53)` and `ceil((a + b) * 2^53)`: a variate
/// `k / 2^53` is below a rational `t` exactly when `k < ceil(t * 2^53)`.
struct Thresholds {
    ortho: u64,
    meta: u64,
}

impl Thresholds {
    fn new(p: &ProbabilityTriple) -> Self {
        let scale = Integer::from(1) << VARIATE_BITS;
        let cut = |t: Rational| -> u64 {
            let scaled = t * &scale;
            scaled.ceil().numer().to_u64().expect("threshold fits in 54 bits")
        };
        Self {
            ortho: cut(p.a().clone()),
            meta: cut(Rational::from(p.a() + p.b())),
        }
    }

    fn pick(&self, variate: u64) -> AttachmentType {
        if variate < self.ortho {
            AttachmentType::Ortho
        } else if variate < self.meta {
            AttachmentType::Meta
        } else {
            AttachmentType::Para
        }
    }
}

fn draw(thresholds: &Thresholds, n: usize, rng: &mut impl RngCore) -> AttachmentSequence {
    let choices = (0..AttachmentSequence::choice_count(n))
        .map(|_| thresholds.pick(rng.next_u64() >> (64 - VARIATE_BITS)))
        .collect();
    AttachmentSequence::new(n, choices).expect("choice count matches n")
}

/// Draws one chain of `n` hexagons. Each attachment takes a uniform dyadic
/// variate `u` in `[0, 1)` and picks ortho if `u < a`, meta if `u < a + b`,
/// para otherwise, with exact comparisons.
pub fn sample_sequence(n: usize, p: &ProbabilityTriple, rng: &mut impl RngCore) -> AttachmentSequence {
    draw(&Thresholds::new(p), n, rng)
}

/// The random stream used by trial `trial` of a run seeded with `seed`.
pub fn trial_stream(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Debug)]
pub struct McEstimate {
    pub mean: Float,
    /// Sample standard deviation (divisor `trials - 1`; zero for one trial).
    pub std_dev: Float,
    /// `std_dev / sqrt(trials)`.
    pub std_err: Float,
    pub trials: u64,
    pub n: usize,
    pub kind: IndexKind,
    /// The sample mean before conversion to floating point.
    pub exact_mean: ExactRational,
}

/// Averages the index over `trials` sampled chains. Sums are accumulated
/// exactly, so the result is bit-identical for any thread count.
pub fn monte_carlo(
    n: usize,
    p: &ProbabilityTriple,
    trials: u64,
    seed: u64,
    kind: IndexKind,
) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let thresholds = Thresholds::new(p);
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seq = draw(&thresholds, n, &mut trial_stream(seed, trial));
            let value = count_chain(&seq, kind).into_integer();
            let square = Integer::from(value.square_ref());
            (value, square)
        })
        .reduce(
            || (Integer::new(), Integer::new()),
            |(s1, q1), (s2, q2)| (s1 + s2, q1 + q2),
        );
    let mean = Rational::from((sum.clone(), trials));
    let variance = if trials > 1 {
        // (sum_sq - sum^2 / T) / (T - 1)
        (Rational::from(sum_sq) - Rational::from((Integer::from(sum.square_ref()), trials)))
            / (trials - 1)
    } else {
        Rational::new()
    };
    let std_dev = Float::with_val(PRECISION, &variance).sqrt();
    let std_err = Float::with_val(PRECISION, &std_dev / Float::with_val(PRECISION, trials).sqrt());
    Ok(McEstimate {
        mean: Float::with_val(PRECISION, &mean),
        std_dev,
        std_err,
        trials,
        n,
        kind,
        exact_mean: mean.into(),
    })
}

impl Serialize for McEstimate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            kind: IndexKind,
            trials: u64,
            mean: String,
            std_dev: String,
            std_err: String,
            exact_mean: &'a ExactRational,
        }
        Wire {
            n: self.n,
            kind: self.kind,
            trials: self.trials,
            mean: float_to_string(&self.mean),
            std_dev: float_to_string(&self.std_dev),
            std_err: float_to_string(&self.std_err),
            exact_mean: &self.exact_mean,
        }
        .serialize(serializer)
    }
}
