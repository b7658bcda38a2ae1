//! Integer primitives: totient, divisors and exact binomial coefficients.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// Euler's totient, computed from the prime factorisation of `n`.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// Divisors of `n` in ascending order, by trial division up to `sqrt(n)`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Exact binomial coefficient; zero when `k > n`.
///
/// Uses the multiplicative formula `C(n, i+1) = C(n, i) * (n - i) / (i + 1)`,
/// where every intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        let (q, r) = acc.div_rem(&BigUint::from(i + 1));
        debug_assert!(r == BigUint::ZERO);
        acc = q;
    }
    acc
}

/// `C(2d - 1, d)` for `d >= 1`, i.e. half the central binomial coefficient.
pub(crate) fn half_central_binomial(d: u64) -> BigUint {
    binomial(2 * d - 1, d)
}
