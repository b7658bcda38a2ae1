//! ±1 walks, diamond area, graphical and irreducible bridges.
//!
//! The diamond area of a walk of length `2m` is `sigma = (1/2) * sum_i X_{2i}`,
//! the ordinary area of its lazy version. A bridge is graphical when its final
//! diamond area is zero and every even-prefix diamond area is non-negative.
//! Its renewal times are the interior even times with `X_{2k} = 0` and
//! `sigma_{2k} = 0`; they cut the bridge into irreducible parts.
//!
//! Counting works on two-step blocks. From an even height `h` the blocks
//! `UU`, `DD` and the two mixed blocks move to `h + 2`, `h - 2` and `h`
//! (weight 2), and the diamond area grows by the new height over two.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::CountMode;

/// Largest half-length accepted by the exhaustive enumerators.
pub const EXHAUSTIVE_BRIDGE_CAP: usize = 10;
/// Largest half-length accepted by the graphical-bridge DP.
pub const GRAPHICAL_DP_CAP: usize = 60;
/// Largest half-length accepted by the `sigma mod n` DP.
pub const SIGMA_MOD_DP_CAP: usize = 200;

/// Two-step blocks as (height change in units of 2, multiplicity).
pub(crate) const BLOCKS: [(i64, u32); 3] = [(1, 1), (0, 2), (-1, 1)];

/// A walk with ±1 increments started at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    increments: Vec<i8>,
}

impl Walk {
    pub fn new(increments: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = increments.iter().find(|&&d| d != 1 && d != -1) {
            return Err(Error::InvalidIncrement(bad.into()));
        }
        Ok(Self { increments })
    }

    pub(crate) fn from_trusted(increments: Vec<i8>) -> Self {
        Self { increments }
    }

    pub fn increments(&self) -> &[i8] {
        &self.increments
    }

    pub fn len(&self) -> usize {
        self.increments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.increments.is_empty()
    }

    /// Positions `X_0 = 0, X_1, ..., X_len`.
    pub fn positions(&self) -> Vec<i64> {
        let mut x = 0i64;
        let mut out = Vec::with_capacity(self.increments.len() + 1);
        out.push(0);
        for &d in &self.increments {
            x += i64::from(d);
            out.push(x);
        }
        out
    }

    pub fn end(&self) -> i64 {
        self.increments.iter().map(|&d| i64::from(d)).sum()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.increments {
            f.write_str(if d > 0 { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for Walk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'U' | 'u' => Ok(1),
                'D' | 'd' => Ok(-1),
                other => Err(Error::ParseWalk(other)),
            })
            .collect::<Result<Vec<i8>>>()
            .map(Self::from_trusted)
    }
}

/// A ±1 walk of even length that returns to 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bridge(Walk);

impl Bridge {
    pub fn new(increments: Vec<i8>) -> Result<Self> {
        Self::try_from(Walk::new(increments)?)
    }

    pub(crate) fn from_trusted(increments: Vec<i8>) -> Self {
        debug_assert!(increments.len().is_multiple_of(2));
        debug_assert_eq!(increments.iter().map(|&d| i64::from(d)).sum::<i64>(), 0);
        Self(Walk::from_trusted(increments))
    }

    pub fn empty() -> Self {
        Self(Walk::from_trusted(Vec::new()))
    }

    pub fn as_walk(&self) -> &Walk {
        &self.0
    }

    pub fn increments(&self) -> &[i8] {
        self.0.increments()
    }

    /// Half the length: the `n` of a bridge of length `2n`.
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }

    pub fn positions(&self) -> Vec<i64> {
        self.0.positions()
    }

    /// Diamond area; bridges always have even length.
    pub fn sigma(&self) -> i64 {
        diamond_area(&self.0).expect("bridge has even length")
    }

    /// `sigma_{2k}` for `k = 1..=n`.
    pub fn prefix_sigmas(&self) -> Vec<i64> {
        prefix_diamond_areas(&self.0).expect("bridge has even length")
    }

    /// Concatenation of two bridges.
    pub fn concat(&self, other: &Bridge) -> Bridge {
        let mut inc = self.increments().to_vec();
        inc.extend_from_slice(other.increments());
        Bridge::from_trusted(inc)
    }
}

impl TryFrom<Walk> for Bridge {
    type Error = Error;

    fn try_from(w: Walk) -> Result<Self> {
        if !w.len().is_multiple_of(2) {
            return Err(Error::OddLength(w.len()));
        }
        if w.end() != 0 {
            return Err(Error::NotABridge);
        }
        Ok(Self(w))
    }
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Bridge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::try_from(s.parse::<Walk>()?)
    }
}

/// A walk with increments in `{-1, 0, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LazyWalk {
    increments: Vec<i8>,
}

impl LazyWalk {
    pub fn increments(&self) -> &[i8] {
        &self.increments
    }

    pub fn positions(&self) -> Vec<i64> {
        let mut y = 0i64;
        std::iter::once(0)
            .chain(self.increments.iter().map(|&d| {
                y += i64::from(d);
                y
            }))
            .collect()
    }

    /// Signed area `sum_{k>=1} Y_k`.
    pub fn area(&self) -> i64 {
        self.positions().iter().sum()
    }
}

/// `sigma(X) = (1/2) * sum_{i=1}^{m} X_{2i}` for a walk of length `2m`.
pub fn diamond_area(walk: &Walk) -> Result<i64> {
    Ok(prefix_diamond_areas(walk)?.last().copied().unwrap_or(0))
}

/// Diamond areas of the even prefixes, `sigma_2, sigma_4, ..., sigma_{2m}`.
pub fn prefix_diamond_areas(walk: &Walk) -> Result<Vec<i64>> {
    if !walk.len().is_multiple_of(2) {
        return Err(Error::OddLength(walk.len()));
    }
    let mut x = 0i64;
    let mut sigma = 0i64;
    Ok(walk
        .increments()
        .chunks_exact(2)
        .map(|pair| {
            x += i64::from(pair[0]) + i64::from(pair[1]);
            // x is even at even times.
            sigma += x / 2;
            sigma
        })
        .collect())
}

/// The lazy version: increment `i` is the average of increments `2i - 1`
/// and `2i`.
pub fn lazify(walk: &Walk) -> Result<LazyWalk> {
    if !walk.len().is_multiple_of(2) {
        return Err(Error::OddLength(walk.len()));
    }
    Ok(LazyWalk {
        increments: walk
            .increments()
            .chunks_exact(2)
            .map(|p| (p[0] + p[1]) / 2)
            .collect(),
    })
}

/// `sigma(B) = 0` and every even-prefix diamond area is non-negative.
pub fn is_graphical(bridge: &Bridge) -> bool {
    let sigmas = bridge.prefix_sigmas();
    sigmas.iter().all(|&s| s >= 0) && sigmas.last().copied().unwrap_or(0) == 0
}

/// Interior renewal times `k` (in blocks, `1 <= k < n`) where
/// `X_{2k} = 0` and `sigma_{2k} = 0`.
fn renewal_blocks(bridge: &Bridge) -> Vec<usize> {
    let n = bridge.half_len();
    let pos = bridge.positions();
    bridge
        .prefix_sigmas()
        .iter()
        .enumerate()
        .map(|(i, &s)| (i + 1, s))
        .filter(|&(k, s)| k < n && s == 0 && pos[2 * k] == 0)
        .map(|(k, _)| k)
        .collect()
}

/// Graphical with no interior renewal time.
///
/// Note that the final block of a graphical bridge always has
/// `sigma_{2n-2} = sigma_{2n} = 0`, so irreducibility is a statement about
/// renewal times rather than about strictly positive prefix areas.
pub fn is_irreducible(bridge: &Bridge) -> bool {
    bridge.half_len() > 0 && is_graphical(bridge) && renewal_blocks(bridge).is_empty()
}

/// Splits a graphical bridge at its renewal times.
pub fn irreducible_decomposition(bridge: &Bridge) -> Result<Vec<Bridge>> {
    if !is_graphical(bridge) {
        return Err(Error::NotGraphical);
    }
    let inc = bridge.increments();
    let mut cuts = vec![0];
    cuts.extend(renewal_blocks(bridge).into_iter().map(|k| 2 * k));
    cuts.push(inc.len());
    Ok(cuts
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| Bridge::from_trusted(inc[w[0]..w[1]].to_vec()))
        .collect())
}

fn check_exhaustive_cap(n: usize, what: &'static str) -> Result<()> {
    if n > EXHAUSTIVE_BRIDGE_CAP {
        return Err(Error::OutOfRange {
            what,
            n,
            cap: EXHAUSTIVE_BRIDGE_CAP,
        });
    }
    Ok(())
}

/// Every bridge of length `2n`, lexicographic with `+1 < -1`.
///
/// Not capped: callers bound `n` themselves (there are `C(2n, n)` bridges).
pub fn all_bridges(n: usize) -> Vec<Bridge> {
    fn go(ups: usize, downs: usize, cur: &mut Vec<i8>, out: &mut Vec<Bridge>) {
        if ups == 0 && downs == 0 {
            out.push(Bridge::from_trusted(cur.clone()));
            return;
        }
        if ups > 0 {
            cur.push(1);
            go(ups - 1, downs, cur, out);
            cur.pop();
        }
        if downs > 0 {
            cur.push(-1);
            go(ups, downs - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// All graphical bridges of length `2n`, in the order of [`all_bridges`].
pub fn enumerate_graphical_bridges(n: usize) -> Result<Vec<Bridge>> {
    check_exhaustive_cap(n, "graphical bridge enumeration")?;
    Ok(all_bridges(n).into_iter().filter(is_graphical).collect())
}

/// Minimum of `sum_j v_j` over block paths that start at height `v` (in
/// units of 2), take at most `r` blocks and end at 0, ignoring the sign
/// constraint on prefix areas. `None` when 0 is out of reach.
struct AreaFloor {
    reach: i64,
    // floor[r][v + reach]
    floor: Vec<Vec<Option<i64>>>,
}

impl AreaFloor {
    fn new(reach: usize) -> Self {
        let r = reach as i64;
        let width = 2 * reach + 1;
        // exact[m][v]: minimum over paths with exactly m blocks.
        let mut exact = vec![None; width];
        exact[reach] = Some(0i64);
        let mut floor = vec![exact.clone()];
        for _ in 0..reach {
            let mut next = vec![None; width];
            for (vi, slot) in next.iter_mut().enumerate() {
                let v = vi as i64 - r;
                *slot = BLOCKS
                    .iter()
                    .filter_map(|&(dv, _)| {
                        let w = v + dv;
                        if w.abs() > r {
                            return None;
                        }
                        exact[(w + r) as usize].map(|rest: i64| w + rest)
                    })
                    .min();
            }
            exact = next;
            let prev = floor.last().expect("non-empty");
            let merged = prev
                .iter()
                .zip(&exact)
                .map(|(a, b)| match (a, b) {
                    (Some(a), Some(b)) => Some(*a.min(b)),
                    (a, b) => a.or(*b),
                })
                .collect();
            floor.push(merged);
        }
        Self { reach: r, floor }
    }

    fn get(&self, remaining: usize, v: i64) -> Option<i64> {
        if v.abs() > self.reach {
            return None;
        }
        self.floor[remaining][(v + self.reach) as usize]
    }
}

/// `B_n`, the number of graphical bridges of length `2n`.
pub fn count_graphical_b(n: usize) -> Result<BigUint> {
    Ok(graphical_counts(n)?.pop().expect("non-empty"))
}

/// `B_0, ..., B_{n_max}` from one forward pass over
/// `(block, height, accumulated sigma >= 0)`.
pub fn graphical_counts(n_max: usize) -> Result<Vec<BigUint>> {
    if n_max > GRAPHICAL_DP_CAP {
        return Err(Error::OutOfRange {
            what: "graphical bridge DP",
            n: n_max,
            cap: GRAPHICAL_DP_CAP,
        });
    }
    let floor = AreaFloor::new(n_max);
    let reach = n_max as i64;
    // Largest sigma that can still be cancelled from any height.
    let sigma_cap = (-reach..=reach)
        .filter_map(|v| floor.get(n_max, v))
        .map(|f| -f)
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let width = 2 * n_max + 1;
    let idx = |v: i64| (v + reach) as usize;

    let mut layer = vec![vec![BigUint::ZERO; sigma_cap + 1]; width];
    layer[idx(0)][0] = BigUint::from(1u32);
    let mut counts = vec![BigUint::from(1u32)];
    for k in 0..n_max {
        let remaining = n_max - k - 1;
        let mut next = vec![vec![BigUint::ZERO; sigma_cap + 1]; width];
        for (vi, cells) in layer.iter().enumerate() {
            let v = vi as i64 - reach;
            for (sigma, c) in cells.iter().enumerate() {
                if c == &BigUint::ZERO {
                    continue;
                }
                for &(dv, weight) in &BLOCKS {
                    let w = v + dv;
                    let s = sigma as i64 + w;
                    if s < 0 || w.abs() > reach {
                        continue;
                    }
                    match floor.get(remaining, w) {
                        Some(f) if s + f <= 0 => {}
                        _ => continue,
                    }
                    next[idx(w)][s as usize] += c * weight;
                }
            }
        }
        layer = next;
        counts.push(layer[idx(0)][0].clone());
    }
    Ok(counts)
}

/// Number of graphical completions from each `(block, height, sigma)` state
/// to the end of a bridge of length `2n`.
///
/// Heights are stored in units of 2. This is the table behind exact uniform
/// sampling of graphical bridges.
#[derive(Debug, Clone)]
pub struct GraphicalCompletions {
    n: usize,
    layers: Vec<HashMap<(i64, i64), BigUint>>,
}

impl GraphicalCompletions {
    pub fn new(n: usize) -> Result<Self> {
        if n > GRAPHICAL_DP_CAP {
            return Err(Error::OutOfRange {
                what: "graphical bridge DP",
                n,
                cap: GRAPHICAL_DP_CAP,
            });
        }
        let mut layers = vec![HashMap::new(); n + 1];
        layers[n].insert((0, 0), BigUint::from(1u32));
        for k in (0..n).rev() {
            let mut cur: HashMap<(i64, i64), BigUint> = HashMap::new();
            let k_i = k as i64;
            let sigma_reach = k_i * (k_i + 1) / 2;
            for (&(w, s), c) in &layers[k + 1] {
                let prev_sigma = s - w;
                if prev_sigma < 0 || prev_sigma > sigma_reach {
                    continue;
                }
                for &(dv, weight) in &BLOCKS {
                    let v = w - dv;
                    if v.abs() > k_i {
                        continue;
                    }
                    *cur.entry((v, prev_sigma)).or_default() += c * weight;
                }
            }
            layers[k] = cur;
        }
        Ok(Self { n, layers })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Completions from `(block, height / 2, sigma)`; zero for dead states.
    pub fn completions(&self, block: usize, half_height: i64, sigma: i64) -> BigUint {
        self.layers
            .get(block)
            .and_then(|l| l.get(&(half_height, sigma)))
            .cloned()
            .unwrap_or_default()
    }

    /// `B_n`.
    pub fn total(&self) -> BigUint {
        self.completions(0, 0, 0)
    }
}

/// `N'_n`: bridges of length `2n` with `sigma = 0 mod n`.
pub fn count_bridges_sigma_mod(n: usize, mode: CountMode) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    match mode {
        CountMode::Exhaustive => {
            check_exhaustive_cap(n, "exhaustive bridge count")?;
            let m = n as i64;
            Ok(all_bridges(n)
                .iter()
                .filter(|b| b.sigma().rem_euclid(m) == 0)
                .count()
                .into())
        }
        CountMode::Dp => {
            if n > SIGMA_MOD_DP_CAP {
                return Err(Error::OutOfRange {
                    what: "sigma mod n DP",
                    n,
                    cap: SIGMA_MOD_DP_CAP,
                });
            }
            Ok(sigma_mod_dp(n))
        }
    }
}

fn sigma_mod_dp(n: usize) -> BigUint {
    let reach = n as i64;
    let width = 2 * n + 1;
    let idx = |v: i64| (v + reach) as usize;
    let mut layer = vec![vec![BigUint::ZERO; n]; width];
    layer[idx(0)][0] = BigUint::from(1u32);
    for k in 0..n {
        // Height must be able to return to 0 in the remaining blocks.
        let remaining = (n - k - 1) as i64;
        let mut next = vec![vec![BigUint::ZERO; n]; width];
        for (vi, cells) in layer.iter().enumerate() {
            let v = vi as i64 - reach;
            for (r, c) in cells.iter().enumerate() {
                if c == &BigUint::ZERO {
                    continue;
                }
                for &(dv, weight) in &BLOCKS {
                    let w = v + dv;
                    if w.abs() > remaining {
                        continue;
                    }
                    let res = (r as i64 + w).rem_euclid(reach) as usize;
                    next[idx(w)][res] += c * weight;
                }
            }
        }
        layer = next;
    }
    layer[idx(0)][0].clone()
}
