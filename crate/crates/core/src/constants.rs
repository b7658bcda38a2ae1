//! The limiting constants `xi`, `C` and `rho`, each with an error bound.
//!
//! `xi = sum_{k>=1} T_k / (k 4^k)`. The first [`EXACT_TERMS`] terms are summed
//! as one exact rational and rounded once. Later terms use
//! `c_d = C(2d - 1, d) / 4^d` from the recurrence
//! `c_{d+1} = c_d (2d + 1) / (2d + 2)`, and every rounding step is charged to
//! the bound. The tail after `N` terms is at most `(2 / (3 sqrt(pi))) N^{-3/2}`,
//! using `k T_k <= C(2k, k) <= 4^k / sqrt(pi k)`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::numtheory::{divisors, euler_phi};
use crate::series::ExactRational;
use crate::trees::walkup_t;

/// Terms of the `xi` series summed exactly.
pub const EXACT_TERMS: usize = 64;

/// Beyond this index every proper divisor `d` of `k` has `4^(d - k)` below
/// the smallest positive double, so only the `d = k` term survives.
const DIVISOR_SUM_LIMIT: usize = 1100;

/// Unit roundoff of `f64`.
const U: f64 = f64::EPSILON / 2.0;

/// Absolute error allowed for the library gamma function at `3/4`.
pub const GAMMA_BOUND: f64 = 1e-14;

/// A real number known to lie in `value ± bound`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundedReal {
    pub value: f64,
    pub bound: f64,
}

impl BoundedReal {
    pub fn new(value: f64, bound: f64) -> Self {
        Self { value, bound }
    }

    /// A double taken as exact up to one rounding.
    pub fn rounded(value: f64) -> Self {
        Self::new(value, value.abs() * U)
    }

    pub fn lo(&self) -> f64 {
        self.value - self.bound
    }

    pub fn hi(&self) -> f64 {
        self.value + self.bound
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.bound
    }

    /// True when the two intervals intersect.
    pub fn overlaps(&self, other: &BoundedReal) -> bool {
        (self.value - other.value).abs() <= self.bound + other.bound
    }

    pub fn scale(self, factor: f64) -> BoundedReal {
        self * BoundedReal::new(factor, 0.0)
    }

    pub fn exp(self) -> BoundedReal {
        let value = self.value.exp();
        let bound = value * self.bound.exp_m1() + 4.0 * U * (self.value + self.bound).exp();
        BoundedReal::new(value, bound)
    }

    pub fn sqrt(self) -> BoundedReal {
        assert!(self.lo() > 0.0, "sqrt of an interval reaching 0");
        let value = self.value.sqrt();
        let bound = self.bound / (self.lo().sqrt() + value) + 2.0 * U * value;
        BoundedReal::new(value, bound)
    }

    /// `1 - x`.
    pub fn one_minus(self) -> BoundedReal {
        let value = 1.0 - self.value;
        BoundedReal::new(value, self.bound + U * (1.0 + self.value.abs()))
    }

    /// Value rounded to `digits` significant digits.
    pub fn format_value(&self, digits: usize) -> String {
        format_significant(self.value, digits)
    }

    pub fn format_bound(&self) -> String {
        format!("{:.2e}", self.bound)
    }
}

impl Mul for BoundedReal {
    type Output = BoundedReal;

    fn mul(self, rhs: BoundedReal) -> BoundedReal {
        let value = self.value * rhs.value;
        let bound = self.value.abs() * rhs.bound
            + rhs.value.abs() * self.bound
            + self.bound * rhs.bound
            + 2.0 * U * value.abs();
        BoundedReal::new(value, bound)
    }
}

impl Div for BoundedReal {
    type Output = BoundedReal;

    fn div(self, rhs: BoundedReal) -> BoundedReal {
        assert!(rhs.bound < rhs.value.abs(), "divisor interval contains 0");
        let value = self.value / rhs.value;
        let denom = rhs.value.abs() - rhs.bound;
        let bound = (self.bound + value.abs() * rhs.bound) / denom + 2.0 * U * value.abs();
        BoundedReal::new(value, bound)
    }
}

impl fmt::Display for BoundedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(10);
        write!(f, "{} ± {}", self.format_value(digits), self.format_bound())
    }
}

/// Decimal rendering with `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Compensated (Neumaier) summation.
#[derive(Debug, Default, Clone, Copy)]
struct Neumaier {
    sum: f64,
    carry: f64,
    abs_sum: f64,
    count: usize,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
        self.count += 1;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }

    /// Error bound of compensated summation: `2u S + 2 n u^2 S`.
    fn error(&self) -> f64 {
        let n = self.count as f64;
        (2.0 * U + 2.0 * n * U * U) * self.abs_sum * (1.0 + 4.0 * U)
    }
}

/// Exact `T_k / (k 4^k)`.
pub fn xi_term_exact(k: usize) -> ExactRational {
    let t = walkup_t(k as u64).expect("k >= 1");
    ExactRational::new(t.into(), BigInt::from(k) * BigInt::from(4).pow(k as u32))
}

/// Upper bound on `sum_{k > terms} T_k / (k 4^k)`.
pub fn xi_tail_bound(terms: usize) -> f64 {
    2.0 / (3.0 * PI.sqrt()) * (terms as f64).powf(-1.5)
}

/// Terms needed so that the tail bound drops below `10^-(digits + 1)`.
pub fn terms_for_digits(digits: usize) -> usize {
    let target = 10f64.powi(-(digits as i32 + 1));
    let n = (2.0 / (3.0 * PI.sqrt()) / target).powf(2.0 / 3.0).ceil() as usize;
    n.max(EXACT_TERMS)
}

/// `xi` from the first `terms` terms plus the tail bound.
pub fn xi(terms: usize) -> BoundedReal {
    let terms = terms.max(1);
    let exact_end = terms.min(EXACT_TERMS);
    let head: ExactRational = (1..=exact_end).map(xi_term_exact).sum();
    let head_value = head.to_f64().expect("finite");
    let mut bound = 2.0 * U * head_value + xi_tail_bound(terms);
    if terms <= EXACT_TERMS {
        return BoundedReal::new(head_value, bound);
    }

    // c[d] = C(2d - 1, d) / 4^d, seeded exactly at d = EXACT_TERMS.
    let seed = ExactRational::new(
        crate::numtheory::binomial(2 * EXACT_TERMS as u64 - 1, EXACT_TERMS as u64).into(),
        BigInt::from(4).pow(EXACT_TERMS as u32),
    )
    .to_f64()
    .expect("finite");
    let divisor_range = terms.min(DIVISOR_SUM_LIMIT);
    let mut small_c = vec![0.0; divisor_range + 1];
    small_c[1] = 0.25;
    for d in 1..divisor_range {
        small_c[d + 1] = small_c[d] * (2 * d + 1) as f64 / (2 * d + 2) as f64;
    }

    let mut acc = Neumaier::default();
    let mut term_error = 0.0;
    let mut c = seed;
    for k in EXACT_TERMS + 1..=terms {
        c *= (2 * k - 1) as f64 / (2 * k) as f64;
        let term = if k <= DIVISOR_SUM_LIMIT {
            let mut s = 0.0;
            for d in divisors(k as u64).expect("k >= 1") {
                let d = d as usize;
                let phi = euler_phi((k / d) as u64).expect("positive") as f64;
                let cd = if d == k { c } else { small_c[d] };
                s += cd * 0.25f64.powi((k - d) as i32) * phi;
            }
            s / (k as f64 * k as f64)
        } else {
            // Proper divisors contribute less than k 2^-k relative to c_k.
            c / (k as f64 * k as f64)
        };
        // Recurrence from the seed, divisor sum and final scaling.
        let steps = (2 * k + 64) as f64;
        term_error += term * steps * U / (1.0 - steps * U);
        acc.add(term);
    }
    bound += term_error + acc.error() + 2.0 * U * (head_value + acc.value());
    BoundedReal::new(head_value + acc.value(), bound)
}

/// `Gamma(3/4)` from the library Lanczos evaluator.
pub fn gamma_three_quarters() -> BoundedReal {
    BoundedReal::new(statrs::function::gamma::gamma(0.75), GAMMA_BOUND)
}

/// `Gamma(3/4) / (2^{5/2} pi)`.
pub fn c_prefactor() -> BoundedReal {
    let denom = BoundedReal::rounded(2f64.powf(2.5)) * BoundedReal::rounded(PI);
    gamma_three_quarters() / denom
}

/// `C = Gamma(3/4) / (2^{5/2} pi) * exp(xi)`.
pub fn constant_c_from(xi: BoundedReal) -> BoundedReal {
    c_prefactor() * xi.exp()
}

/// `rho = 1 - exp(-2 xi)`.
pub fn rho_from(xi: BoundedReal) -> BoundedReal {
    xi.scale(-2.0).exp().one_minus()
}

/// All constants evaluated from a single `xi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub terms: usize,
    pub xi: BoundedReal,
    pub c: BoundedReal,
    pub rho: BoundedReal,
    pub gamma34: BoundedReal,
}

impl Constants {
    pub fn evaluate(terms: usize) -> Self {
        let xi = xi(terms);
        Self {
            terms,
            xi,
            c: constant_c_from(xi),
            rho: rho_from(xi),
            gamma34: gamma_three_quarters(),
        }
    }
}

/// Default number of `xi` terms: a tail bound below `10^-11`.
pub const DEFAULT_TERMS: usize = 20_000_000;

pub fn constant_c() -> BoundedReal {
    constant_c_from(xi(DEFAULT_TERMS))
}

pub fn rho_exact() -> BoundedReal {
    rho_from(xi(DEFAULT_TERMS))
}
