//! Graphical degree sequences: the Erdős–Gallai test, counting `G_n` by
//! pruned enumeration, and an all-graphs oracle for small `n`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest `n` for [`count_graphical_sequences`].
pub const ENUMERATION_CAP: usize = 12;
/// Largest `n` for [`graph_degree_oracle`].
pub const ORACLE_CAP: usize = 6;

/// A non-decreasing sequence of `n` degrees in `[0, n - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let max = degrees.len().saturating_sub(1);
        if let Some(&degree) = degrees.iter().find(|&&d| d > max) {
            return Err(Error::DegreeOutOfRange { degree, max });
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotSorted);
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Erdős–Gallai on a non-increasing slice.
fn erdos_gallai_descending(desc: &[usize]) -> bool {
    if desc.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    let n = desc.len();
    let mut head = 0;
    for k in 1..=n {
        head += desc[k - 1];
        let tail: usize = desc[k..].iter().map(|&d| d.min(k)).sum();
        if head > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// True iff the sum is even and, with degrees sorted descending,
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)` for every `k`.
pub fn is_graphical_sequence(seq: &DegreeSequence) -> bool {
    let desc: Vec<usize> = seq.degrees.iter().rev().copied().collect();
    erdos_gallai_descending(&desc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    On,
    Off,
}

/// `G_n`, the number of graphical sequences of length `n`.
pub fn count_graphical_sequences(n: usize) -> Result<u64> {
    count_graphical_sequences_with(n, Pruning::On)
}

/// [`count_graphical_sequences`] with prefix pruning switched on or off.
///
/// Sequences are built in non-increasing order. A prefix `d_1 >= .. >= d_j`
/// is cut when some `k <= j` already fails
/// `sum_{i<=k} d_i <= k(k-1) + sum_{k<i<=j} min(d_i, k) + (n-j) min(d_j, k)`;
/// later degrees are at most `d_j`, so no completion can recover.
pub fn count_graphical_sequences_with(n: usize, pruning: Pruning) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > ENUMERATION_CAP {
        return Err(Error::OutOfRange {
            what: "graphical sequence enumeration",
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok((0..n)
        .into_par_iter()
        .map(|first| {
            let mut prefix = Vec::with_capacity(n);
            prefix.push(first);
            extend(n, &mut prefix, pruning)
        })
        .sum())
}

fn extend(n: usize, prefix: &mut Vec<usize>, pruning: Pruning) -> u64 {
    if pruning == Pruning::On && !prefix_feasible(n, prefix) {
        return 0;
    }
    if prefix.len() == n {
        return u64::from(erdos_gallai_descending(prefix));
    }
    let top = *prefix.last().expect("non-empty");
    let mut total = 0;
    for d in 0..=top {
        prefix.push(d);
        total += extend(n, prefix, pruning);
        prefix.pop();
    }
    total
}

fn prefix_feasible(n: usize, prefix: &[usize]) -> bool {
    let j = prefix.len();
    let last = prefix[j - 1];
    let mut head = 0;
    for k in 1..=j {
        head += prefix[k - 1];
        let known: usize = prefix[k..].iter().map(|&d| d.min(k)).sum();
        if head > k * (k - 1) + known + (n - j) * last.min(k) {
            return false;
        }
    }
    true
}

/// Sorted degree sequences of every simple graph on `n` labelled vertices.
pub fn graph_degree_oracle(n: usize) -> Result<BTreeSet<DegreeSequence>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > ORACLE_CAP {
        return Err(Error::OutOfRange {
            what: "all-graphs oracle",
            n,
            cap: ORACLE_CAP,
        });
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << edges.len() {
        let mut deg = vec![0; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[a] += 1;
                deg[b] += 1;
            }
        }
        deg.sort_unstable();
        out.insert(DegreeSequence { degrees: deg });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub n: usize,
    pub count: u64,
    /// `n^{3/4} G_n / 4^n`.
    pub ratio: f64,
}

/// `n^{3/4} G_n / 4^n` for `n = 1..=n_max`.
pub fn ratio_table(n_max: usize) -> Result<Vec<RatioRow>> {
    (1..=n_max)
        .map(|n| {
            let count = count_graphical_sequences(n)?;
            let ratio = (n as f64).powf(0.75) * count as f64 / 4f64.powi(n as i32);
            Ok(RatioRow { n, count, ratio })
        })
        .collect()
}
