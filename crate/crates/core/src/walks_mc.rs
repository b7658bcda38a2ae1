//! Monte Carlo estimation of `rho = P(A_tau = 0)` for the lazy walk, and
//! exactly uniform sampling of graphical bridges.
//!
//! The lazy walk `Y` moves ±1 with probability 1/4 each and stays put with
//! probability 1/2. With `A_k = Y_1 + .. + Y_k`, the stopping time is
//! `tau = inf { k >= 1 : Y_k = 0, A_k <= 0 }`.
//!
//! Runs are reproducible per `(seed, workers)`: worker `w` draws from the
//! ChaCha8 stream `w` of `seed` and handles a fixed slice of the samples.

use num_bigint::BigUint;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bridges::{Bridge, GraphicalCompletions, BLOCKS};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    AreaZero,
    AreaNegative,
    Capped,
}

/// Runs the lazy walk on the given increments until `tau` or `horizon`
/// steps. Running out of increments counts as capped.
pub fn simulate_tau_with<I>(increments: I, horizon: u64) -> Outcome
where
    I: IntoIterator<Item = i8>,
{
    let mut y = 0i64;
    let mut area = 0i64;
    for dy in increments.into_iter().take(horizon as usize) {
        y += i64::from(dy);
        area += y;
        if y == 0 && area <= 0 {
            return if area == 0 {
                Outcome::AreaZero
            } else {
                Outcome::AreaNegative
            };
        }
    }
    Outcome::Capped
}

/// Lazy-walk increments from two random bits each.
pub struct LazySteps<'a, R: RngCore> {
    rng: &'a mut R,
    bits: u64,
    left: u32,
}

impl<'a, R: RngCore> LazySteps<'a, R> {
    pub fn new(rng: &'a mut R) -> Self {
        Self {
            rng,
            bits: 0,
            left: 0,
        }
    }
}

impl<R: RngCore> Iterator for LazySteps<'_, R> {
    type Item = i8;

    fn next(&mut self) -> Option<i8> {
        if self.left == 0 {
            self.bits = self.rng.next_u64();
            self.left = 32;
        }
        let pair = self.bits & 3;
        self.bits >>= 2;
        self.left -= 1;
        Some(match pair {
            0 => -1,
            3 => 1,
            _ => 0,
        })
    }
}

/// One run of the lazy walk from a fresh generator seeded with `seed`.
pub fn simulate_tau(seed: u64, horizon: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    simulate_tau_with(LazySteps::new(&mut rng), horizon)
}

/// Monte Carlo estimate of `rho`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    /// Fraction of area-zero stops among runs that stopped; `None` if every
    /// run was capped.
    pub estimate: Option<f64>,
    pub samples: u64,
    /// Binomial standard error over the runs that stopped.
    pub std_error: f64,
    pub capped_fraction: f64,
    pub seed: u64,
    pub horizon: u64,
    pub workers: usize,
    pub area_zero: u64,
    pub area_negative: u64,
    pub capped: u64,
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    zero: u64,
    negative: u64,
    capped: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            zero: self.zero + o.zero,
            negative: self.negative + o.negative,
            capped: self.capped + o.capped,
        }
    }
}

/// Runs `samples` walks split over `workers` independent streams.
pub fn estimate_rho(samples: u64, horizon: u64, seed: u64, workers: usize) -> McEstimate {
    let workers = workers.max(1);
    let w = workers as u64;
    let tally = (0..w)
        .into_par_iter()
        .map(|i| {
            let lo = samples * i / w;
            let hi = samples * (i + 1) / w;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let mut t = Tally::default();
            for _ in lo..hi {
                match simulate_tau_with(LazySteps::new(&mut rng), horizon) {
                    Outcome::AreaZero => t.zero += 1,
                    Outcome::AreaNegative => t.negative += 1,
                    Outcome::Capped => t.capped += 1,
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let stopped = tally.zero + tally.negative;
    let (estimate, std_error) = if stopped == 0 {
        (None, 0.0)
    } else {
        let p = tally.zero as f64 / stopped as f64;
        (Some(p), (p * (1.0 - p) / stopped as f64).sqrt())
    };
    McEstimate {
        estimate,
        samples,
        std_error,
        capped_fraction: if samples == 0 {
            0.0
        } else {
            tally.capped as f64 / samples as f64
        },
        seed,
        horizon,
        workers,
        area_zero: tally.zero,
        area_negative: tally.negative,
        capped: tally.capped,
    }
}

/// Uniform integer in `[0, bound)` by rejection on the bit length.
fn uniform_below<R: Rng + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(bound > &BigUint::ZERO, "empty range");
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let spare = (bytes as u64 * 8 - bits) as u32;
    let mut buf = vec![0u8; bytes];
    loop {
        rng.fill_bytes(&mut buf);
        if let Some(top) = buf.last_mut() {
            *top &= 0xffu8 >> spare;
        }
        let x = BigUint::from_bytes_le(&buf);
        if &x < bound {
            return x;
        }
    }
}

/// Draws graphical bridges of a fixed length uniformly at random, walking
/// forward through the completion counts.
#[derive(Debug, Clone)]
pub struct UniformBridgeSampler {
    table: GraphicalCompletions,
}

impl UniformBridgeSampler {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            table: GraphicalCompletions::new(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Bridge {
        let n = self.table.n();
        let mut inc = Vec::with_capacity(2 * n);
        let (mut v, mut sigma) = (0i64, 0i64);
        for k in 0..n {
            let options: Vec<(i64, BigUint)> = BLOCKS
                .iter()
                .map(|&(dv, weight)| {
                    let w = v + dv;
                    (dv, self.table.completions(k + 1, w, sigma + w) * weight)
                })
                .collect();
            let total: BigUint = options.iter().map(|(_, c)| c).sum();
            let mut r = uniform_below(rng, &total);
            let dv = options
                .into_iter()
                .find_map(|(dv, c)| {
                    if r < c {
                        Some(dv)
                    } else {
                        r -= c;
                        None
                    }
                })
                .expect("r below total");
            match dv {
                1 => inc.extend([1, 1]),
                -1 => inc.extend([-1, -1]),
                _ if rng.random::<bool>() => inc.extend([1, -1]),
                _ => inc.extend([-1, 1]),
            }
            v += dv;
            sigma += v;
        }
        Bridge::from_trusted(inc)
    }
}

/// One uniform graphical bridge of length `2n` from a generator seeded with
/// `seed`.
pub fn sample_uniform_graphical_bridge(n: usize, seed: u64) -> Result<Bridge> {
    let sampler = UniformBridgeSampler::new(n)?;
    Ok(sampler.sample(&mut ChaCha8Rng::seed_from_u64(seed)))
}

/// `count` uniform graphical bridges of length `2n` from one seeded stream.
pub fn sample_graphical_bridges(n: usize, count: usize, seed: u64) -> Result<Vec<Bridge>> {
    let sampler = UniformBridgeSampler::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| sampler.sample(&mut rng)).collect())
}
