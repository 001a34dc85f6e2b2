//! Plain Monte-Carlo estimate of the unit-cube integral.
//!
//! Samples are split into batches of [`BATCH`]. Batch `b` draws from
//! ChaCha8 seeded with `seed` on stream `b`, so every sample point is a
//! fixed function of `(seed, index)`. Batches run in parallel, but their
//! running statistics are merged in batch order, so the result does not
//! depend on scheduling and is bit-identical for a given seed.

use std::num::NonZeroU64;

use cubecalc_core::Rat;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::document::{Body, PolyDocument};

pub const BATCH: u64 = 4096;

/// Reported alongside every estimate.
pub const ALGORITHM: &str = "chacha8/seed_from_u64/stream=batch/batch=4096/welford";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl Estimate {
    pub fn algorithm(&self) -> &'static str {
        ALGORITHM
    }
}

/// Welford accumulator.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let (na, nb, nt) = (self.n as f64, other.n as f64, n as f64);
        Moments {
            n,
            mean: self.mean + delta * nb / nt,
            m2: self.m2 + other.m2 + delta * delta * na * nb / nt,
        }
    }
}

/// constant, then (var, ascending coefficients) per part
type SumRow = (f64, Vec<(usize, Vec<f64>)>);
/// (coefficient, [(var, exponent)]) per term
type MultiRow = Vec<(f64, Vec<(usize, i32)>)>;

enum Evaluator {
    Sum(Vec<SumRow>),
    Multi(Vec<MultiRow>),
}

fn f(r: &Rat) -> f64 {
    r.to_f64().expect("rational converts to a float")
}

impl Evaluator {
    fn new(doc: &PolyDocument) -> Self {
        match &doc.body {
            Body::ProdSum(p) => Evaluator::Sum(
                p.factors()
                    .iter()
                    .map(|sf| {
                        let parts = sf
                            .parts()
                            .iter()
                            .map(|(v, q)| (v.index(), q.coeffs().iter().map(f).collect()))
                            .collect();
                        (f(sf.constant()), parts)
                    })
                    .collect(),
            ),
            Body::ProdMulti(p) => Evaluator::Multi(
                p.factors()
                    .iter()
                    .map(|mp| {
                        mp.terms()
                            .map(|(m, c)| {
                                (
                                    f(c),
                                    m.pairs()
                                        .iter()
                                        .map(|&(v, e)| (v.index(), e as i32))
                                        .collect(),
                                )
                            })
                            .collect()
                    })
                    .collect(),
            ),
        }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Evaluator::Sum(factors) => factors
                .iter()
                .map(|(c, parts)| {
                    c + parts
                        .iter()
                        .map(|(v, q)| q.iter().rev().fold(0.0, |acc, a| acc * x[*v] + a))
                        .sum::<f64>()
                })
                .product(),
            Evaluator::Multi(factors) => factors
                .iter()
                .map(|terms| {
                    terms
                        .iter()
                        .map(|(c, m)| c * m.iter().map(|&(v, e)| x[v].powi(e)).product::<f64>())
                        .sum::<f64>()
                })
                .product(),
        }
    }
}

/// Mean of the document's value at `samples` uniform points of the unit
/// cube, with the sample standard error of that mean.
pub fn mc_estimate(doc: &PolyDocument, samples: NonZeroU64, seed: u64) -> Estimate {
    let samples = samples.get();
    let eval = Evaluator::new(doc);
    let dim = doc.num_vars;
    let batches = samples.div_ceil(BATCH);

    let per_batch: Vec<Moments> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let count = BATCH.min(samples - b * BATCH);
            let mut point = vec![0.0; dim];
            let mut m = Moments::default();
            for _ in 0..count {
                point.iter_mut().for_each(|p| *p = rng.random::<f64>());
                m.push(eval.eval(&point));
            }
            m
        })
        .collect();

    let total = per_batch
        .into_iter()
        .fold(Moments::default(), Moments::merge);
    let std_error = if total.n > 1 {
        (total.m2 / (total.n - 1) as f64 / total.n as f64).sqrt()
    } else {
        0.0
    };
    Estimate {
        mean: total.mean,
        std_error,
        samples,
        seed,
    }
}
