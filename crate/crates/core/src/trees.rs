//! Cyclically distinct plane-tree counts and the lattice-path identities
//! that connect them to bridges.
//!
//! Trees are never materialised. `T_n` comes from Walkup's divisor sum and is
//! cross-checked against submultiset counts and lattice-path areas.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numtheory::{binomial, divisors, euler_phi, half_central_binomial};
use crate::CountMode;

/// Largest `n` for which [`count_paths_n`] accepts [`CountMode::Exhaustive`].
pub const EXHAUSTIVE_PATH_CAP: usize = 14;
/// Largest `n` for which [`count_paths_n`] accepts [`CountMode::Dp`].
pub const DP_PATH_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Right,
}

/// A lattice path of unit up/right steps starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    pub fn rights(&self) -> usize {
        self.steps.len() - self.ups()
    }

    /// End point `(rights, ups)`.
    pub fn end(&self) -> (usize, usize) {
        (self.rights(), self.ups())
    }

    /// Bar heights: `u_i` is the number of up steps before the i-th right step.
    pub fn bar_heights(&self) -> Vec<usize> {
        let mut ups = 0;
        let mut bars = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            match s {
                Step::Up => ups += 1,
                Step::Right => bars.push(ups),
            }
        }
        bars
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "N",
                Step::Right => "E",
            })?;
        }
        Ok(())
    }
}

/// Area between the path and the lines `x = end_x`, `y = 0`: the sum of the
/// bar heights.
pub fn path_area(path: &LatticePath) -> u64 {
    path.bar_heights().into_iter().map(|u| u as u64).sum()
}

/// Walkup's count `T_n` of rooted plane trees with `n` edges, up to cyclic
/// rotation of the root's subtrees:
/// `T_n = (1/n) * sum_{d | n} C(2d - 1, d) * phi(n / d)`.
pub fn walkup_t(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut sum = BigUint::ZERO;
    for d in divisors(n)? {
        sum += half_central_binomial(d) * euler_phi(n / d)?;
    }
    let (q, r) = sum.div_rem(&BigUint::from(n));
    debug_assert!(r == BigUint::ZERO, "divisor sum not divisible by n");
    Ok(q)
}

/// `T_1, ..., T_n`.
pub fn walkup_table(n_max: u64) -> Vec<BigUint> {
    (1..=n_max).map(|n| walkup_t(n).expect("n >= 1")).collect()
}

/// Von Sterneck's count `M_{n,k}` of size-`k` submultisets of `{0, .., n-1}`
/// whose sum is divisible by `n`.
pub fn multiset_count_m(n: u64, k: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if k == 0 {
        return Ok(BigUint::from(1u32));
    }
    let g = n.gcd(&k);
    let mut sum = BigUint::ZERO;
    for d in divisors(g)? {
        sum += binomial((n + k) / d - 1, k / d) * euler_phi(d)?;
    }
    let (q, r) = sum.div_rem(&BigUint::from(n));
    debug_assert!(r == BigUint::ZERO);
    Ok(q)
}

/// Lattice paths `(0,0) -> (n,n)` with area divisible by `n`, split by the
/// direction of the final step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCount {
    pub ending_up: BigUint,
    pub ending_right: BigUint,
}

impl PathCount {
    pub fn total(&self) -> BigUint {
        &self.ending_up + &self.ending_right
    }
}

/// `N_n`: lattice paths from `(0,0)` to `(n,n)` whose area is `0 mod n`.
pub fn count_paths_n(n: usize, mode: CountMode) -> Result<BigUint> {
    Ok(count_paths_split(n, mode)?.total())
}

/// [`count_paths_n`] with the total split by final step direction.
pub fn count_paths_split(n: usize, mode: CountMode) -> Result<PathCount> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    match mode {
        CountMode::Exhaustive => {
            if n > EXHAUSTIVE_PATH_CAP {
                return Err(Error::OutOfRange {
                    what: "exhaustive lattice-path count",
                    n,
                    cap: EXHAUSTIVE_PATH_CAP,
                });
            }
            let mut counts = [0u64; 2];
            exhaustive_paths(n, 0, 0, 0, None, &mut counts);
            Ok(PathCount {
                ending_up: counts[0].into(),
                ending_right: counts[1].into(),
            })
        }
        CountMode::Dp => {
            if n > DP_PATH_CAP {
                return Err(Error::OutOfRange {
                    what: "lattice-path DP",
                    n,
                    cap: DP_PATH_CAP,
                });
            }
            Ok(dp_paths(n))
        }
    }
}

fn exhaustive_paths(
    n: usize,
    ups: usize,
    rights: usize,
    area: usize,
    last: Option<Step>,
    counts: &mut [u64; 2],
) {
    if ups == n && rights == n {
        if area.is_multiple_of(n) {
            match last {
                Some(Step::Up) => counts[0] += 1,
                Some(Step::Right) => counts[1] += 1,
                None => unreachable!("n >= 1"),
            }
        }
        return;
    }
    if ups < n {
        exhaustive_paths(n, ups + 1, rights, area, Some(Step::Up), counts);
    }
    if rights < n {
        exhaustive_paths(n, ups, rights + 1, area + ups, Some(Step::Right), counts);
    }
}

fn dp_paths(n: usize) -> PathCount {
    let total = paths_with_area_residue_zero(n, n, n);
    // Dropping a final up step keeps the area, so paths ending in an up step
    // are the paths to (n, n - 1).
    let ending_up = paths_with_area_residue_zero(n, n - 1, n);
    let ending_right = &total - &ending_up;
    PathCount {
        ending_up,
        ending_right,
    }
}

/// Paths `(0,0) -> (rights, ups)` with area `0 mod modulus`, column by column.
fn paths_with_area_residue_zero(rights: usize, ups: usize, modulus: usize) -> BigUint {
    let zero_column = || vec![vec![BigUint::ZERO; modulus]; ups + 1];
    // column[y][a]: paths to (x, y) with area = a mod modulus.
    let mut column = zero_column();
    column[0][0] = BigUint::from(1u32);
    for x in 0..=rights {
        for y in 0..ups {
            let (lo, hi) = column.split_at_mut(y + 1);
            for (dst, src) in hi[0].iter_mut().zip(&lo[y]) {
                *dst += src;
            }
        }
        if x == rights {
            break;
        }
        // A right step at height y adds y to the area.
        let mut next = zero_column();
        for (y, cells) in column.iter().enumerate() {
            for (a, c) in cells.iter().enumerate() {
                next[y][(a + y) % modulus] += c;
            }
        }
        column = next;
    }
    column[ups][0].clone()
}

/// All lattice paths with `rights` right steps and `ups` up steps, in
/// lexicographic order (`Up < Right`).
pub fn all_paths(rights: usize, ups: usize) -> Vec<LatticePath> {
    fn go(r: usize, u: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if r == 0 && u == 0 {
            out.push(LatticePath::new(cur.clone()));
            return;
        }
        if u > 0 {
            cur.push(Step::Up);
            go(r, u - 1, cur, out);
            cur.pop();
        }
        if r > 0 {
            cur.push(Step::Right);
            go(r - 1, u, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rights, ups, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Step::{Right as R, Up as U};

    /// Size-`k` submultisets of `{0..n-1}` with sum divisible by `n`,
    /// enumerated as non-decreasing sequences.
    fn brute_multisets(n: usize, k: usize) -> u64 {
        fn go(n: usize, left: usize, min: usize, sum: usize) -> u64 {
            if left == 0 {
                return u64::from(sum.is_multiple_of(n));
            }
            (min..n).map(|v| go(n, left - 1, v, sum + v)).sum()
        }
        go(n, k, 0, 0)
    }

    #[test]
    fn walkup_examples() {
        assert_eq!(walkup_t(3).unwrap(), 4u32.into());
        assert_eq!(walkup_t(4).unwrap(), 10u32.into());
        assert_eq!(walkup_t(9).unwrap(), 2704u32.into());
        assert_eq!(walkup_t(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn multiset_examples() {
        assert_eq!(multiset_count_m(5, 0).unwrap(), 1u32.into());
        assert_eq!(multiset_count_m(3, 3).unwrap(), 4u32.into());
        assert_eq!(brute_multisets(4, 2), 3);
        assert_eq!(multiset_count_m(4, 2).unwrap(), 3u32.into());
        assert_eq!(multiset_count_m(0, 1), Err(Error::ZeroArgument));
    }

    #[test]
    fn multiset_formula_matches_brute_force() {
        for n in 1..=8 {
            for k in 0..=8 {
                assert_eq!(
                    multiset_count_m(n as u64, k as u64).unwrap(),
                    brute_multisets(n, k).into(),
                    "M({n},{k})"
                );
            }
        }
    }

    #[test]
    fn diagonal_multisets_are_walkup() {
        for n in 1..=50 {
            assert_eq!(multiset_count_m(n, n).unwrap(), walkup_t(n).unwrap());
        }
    }

    #[test]
    fn area_examples() {
        assert_eq!(path_area(&LatticePath::new(vec![R, R])), 0);
        assert_eq!(path_area(&LatticePath::new(vec![U, R])), 1);
        assert_eq!(path_area(&LatticePath::new(vec![U, U, R, R])), 4);
    }

    #[test]
    fn path_count_examples() {
        for mode in [CountMode::Exhaustive, CountMode::Dp] {
            assert_eq!(count_paths_n(1, mode).unwrap(), 2u32.into());
            assert_eq!(count_paths_n(3, mode).unwrap(), 8u32.into());
            assert_eq!(count_paths_n(4, mode).unwrap(), 20u32.into());
        }
    }

    #[test]
    fn exhaustive_count_matches_materialised_paths() {
        for n in 1..=7 {
            let direct = all_paths(n, n)
                .iter()
                .filter(|p| path_area(p).is_multiple_of(n as u64))
                .count();
            assert_eq!(
                count_paths_n(n, CountMode::Exhaustive).unwrap(),
                direct.into()
            );
        }
    }

    #[test]
    fn modes_agree_and_equal_twice_walkup() {
        for n in 1..=12 {
            let ex = count_paths_split(n, CountMode::Exhaustive).unwrap();
            let dp = count_paths_split(n, CountMode::Dp).unwrap();
            let t = walkup_t(n as u64).unwrap();
            assert_eq!(ex, dp, "n = {n}");
            assert_eq!(ex.ending_up, t);
            assert_eq!(ex.ending_right, t);
        }
    }

    #[test]
    fn multiset_row_sums_to_path_count() {
        for n in 1..=12u64 {
            let row: BigUint = (0..=n).map(|k| multiset_count_m(n, k).unwrap()).sum();
            assert_eq!(row, count_paths_n(n as usize, CountMode::Dp).unwrap());
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            count_paths_n(15, CountMode::Exhaustive),
            Err(Error::OutOfRange { cap: 14, .. })
        ));
        assert!(matches!(
            count_paths_n(201, CountMode::Dp),
            Err(Error::OutOfRange { cap: 200, .. })
        ));
    }
}
