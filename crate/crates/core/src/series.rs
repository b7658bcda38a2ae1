//! Log transforms, renewal inversion and the distribution of the number of
//! irreducible parts of a uniform graphical bridge.
//!
//! Everything here is exact. Decimal values appear only in
//! [`convergence_table`] and the total-variation comparison, which are
//! diagnostics.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bridges::graphical_counts;
use crate::error::{Error, Result};
use crate::trees::walkup_t;

/// Exact rational in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// A contiguous run of exact integers `a_start, a_{start+1}, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeqTable {
    start: usize,
    values: Vec<BigInt>,
}

impl IntSeqTable {
    pub fn new(start: usize, values: Vec<BigInt>) -> Self {
        Self { start, values }
    }

    pub fn from_unsigned(start: usize, values: impl IntoIterator<Item = BigUint>) -> Self {
        Self::new(start, values.into_iter().map(BigInt::from).collect())
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Last index held.
    pub fn end(&self) -> usize {
        self.start + self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (i + self.start, v))
    }
}

fn check_leading_one(a: &IntSeqTable) -> Result<()> {
    if a.start != 0 || a.values.first() != Some(&BigInt::one()) {
        return Err(Error::LeadingTermNotOne);
    }
    Ok(())
}

/// Log transform of a rational sequence with `a_0 = 1`:
/// the unique `a*` with `n a_n = sum_{i=1}^{n} a*_i a_{n-i}`.
///
/// Index 0 of the result is a zero placeholder so that `out[k] = a*_k`.
pub fn log_transform(a: &[ExactRational]) -> Result<Vec<ExactRational>> {
    if a.first() != Some(&ExactRational::one()) {
        return Err(Error::LeadingTermNotOne);
    }
    let mut star = vec![ExactRational::zero()];
    for n in 1..a.len() {
        let mut v = &a[n] * BigInt::from(n);
        for i in 1..n {
            v -= &star[i] * &a[n - i];
        }
        star.push(v);
    }
    Ok(star)
}

/// Integer log transform. For an integer sequence with `a_0 = 1` the
/// recurrence never leaves the integers. The result starts at index 1.
pub fn log_transform_int(a: &IntSeqTable) -> Result<IntSeqTable> {
    check_leading_one(a)?;
    let a = &a.values;
    let mut star: Vec<BigInt> = Vec::with_capacity(a.len().saturating_sub(1));
    for n in 1..a.len() {
        let mut v = &a[n] * BigInt::from(n);
        for i in 1..n {
            v -= &star[i - 1] * &a[n - i];
        }
        star.push(v);
    }
    Ok(IntSeqTable::new(1, star))
}

/// First-return counts of a renewal sequence: the coefficients of
/// `F(x) = 1 - 1/B(x)`, starting at index 0 (where `F_0 = 0`).
pub fn irreducible_counts(b: &IntSeqTable) -> Result<IntSeqTable> {
    check_leading_one(b)?;
    let b = &b.values;
    let mut f = vec![BigInt::zero(); b.len()];
    for n in 1..b.len() {
        let mut v = b[n].clone();
        for i in 1..n {
            v -= &f[i] * &b[n - i];
        }
        f[n] = v;
    }
    Ok(IntSeqTable::new(0, f))
}

/// Truncated powers of a series with zero constant term:
/// `out[m][n] = [x^n] f(x)^m` for `0 <= m, n <= len - 1`.
pub fn series_powers(f: &IntSeqTable) -> Vec<Vec<BigInt>> {
    let len = f.values.len();
    let mut pow = vec![BigInt::zero(); len];
    pow[0] = BigInt::one();
    let mut out = vec![pow.clone()];
    for _ in 1..len {
        let mut next = vec![BigInt::zero(); len];
        for (i, p) in pow.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, c) in f.values.iter().enumerate().take(len - i) {
                next[i + j] += p * c;
            }
        }
        pow = next;
        out.push(pow.clone());
    }
    out
}

/// Exact tables for graphical bridges up to some half-length: `B_n`, the
/// irreducible counts `B^(1)_n`, and `B^(m)_n`, the bridges with exactly `m`
/// irreducible parts.
#[derive(Debug, Clone)]
pub struct BridgeSeries {
    graphical: IntSeqTable,
    irreducible: IntSeqTable,
    // parts[m][n]
    parts: Vec<Vec<BigInt>>,
}

impl BridgeSeries {
    pub fn new(n_max: usize) -> Result<Self> {
        let graphical = IntSeqTable::from_unsigned(0, graphical_counts(n_max)?);
        Self::from_graphical(graphical)
    }

    /// Builds the tables from a given `B_0, B_1, ...`.
    pub fn from_graphical(graphical: IntSeqTable) -> Result<Self> {
        let irreducible = irreducible_counts(&graphical)?;
        let parts = series_powers(&irreducible);
        Ok(Self {
            graphical,
            irreducible,
            parts,
        })
    }

    pub fn n_max(&self) -> usize {
        self.graphical.end()
    }

    pub fn graphical(&self) -> &IntSeqTable {
        &self.graphical
    }

    pub fn irreducible(&self) -> &IntSeqTable {
        &self.irreducible
    }

    /// `B^(m)_n`.
    pub fn with_parts(&self, n: usize, m: usize) -> BigInt {
        self.parts
            .get(m)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_default()
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::OutOfRange {
                what: "bridge series table",
                n,
                cap: self.n_max(),
            });
        }
        Ok(())
    }

    /// `P(I_n = m)` for every `m` with positive probability.
    pub fn parts_distribution(&self, n: usize) -> Result<BTreeMap<usize, ExactRational>> {
        self.check(n)?;
        let total = &self.graphical.values[n];
        Ok((0..=n)
            .map(|m| (m, self.with_parts(n, m)))
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, ExactRational::new(c, total.clone())))
            .collect())
    }

    /// `E[1 / I_n] = sum_m (1/m) B^(m)_n / B_n`.
    pub fn mean_inverse_parts(&self, n: usize) -> Result<ExactRational> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(self
            .parts_distribution(n)?
            .into_iter()
            .map(|(m, p)| p / BigInt::from(m))
            .sum())
    }

    /// `B*_n / (n B_n)` from the integer log transform of `B`.
    pub fn log_ratio(&self, n: usize) -> Result<ExactRational> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        self.check(n)?;
        let star = log_transform_int(&self.graphical)?;
        Ok(ExactRational::new(
            star.get(n).expect("in range").clone(),
            BigInt::from(n) * &self.graphical.values[n],
        ))
    }
}

/// Left side minus right side of `n B_n = sum_{i=1}^n 2 T_i B_{n-i}`.
pub fn log_transform_defect(b: &IntSeqTable, n: usize) -> Result<BigInt> {
    let lhs = BigInt::from(n)
        * b.get(n).ok_or(Error::OutOfRange {
            what: "graphical table",
            n,
            cap: b.end(),
        })?;
    let mut rhs = BigInt::zero();
    for i in 1..=n {
        rhs += BigInt::from(walkup_t(i as u64)? * 2u32) * &b.values[n - i];
    }
    Ok(lhs - rhs)
}

/// `P(1 + X = m)` for `X` negative binomial counting failures before the
/// second success, with success probability `1 - rho`:
/// `m (1 - rho)^2 rho^(m - 1)` for `m >= 1`.
pub fn shifted_negative_binomial_pmf(m: usize, rho: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let p = 1.0 - rho;
    m as f64 * p * p * rho.powi(m as i32 - 1)
}

/// Total-variation distance between `I_n` and the shifted negative binomial.
pub fn tv_to_negative_binomial(series: &BridgeSeries, n: usize, rho: f64) -> Result<f64> {
    let dist = series.parts_distribution(n)?;
    let mut l1 = 0.0;
    let mut mass = 0.0;
    for m in 1..=n {
        let q = shifted_negative_binomial_pmf(m, rho);
        mass += q;
        let p = dist.get(&m).and_then(ToPrimitive::to_f64).unwrap_or(0.0);
        l1 += (p - q).abs();
    }
    // I_n <= n, so the model's mass above n counts in full.
    l1 += (1.0 - mass).max(0.0);
    Ok(l1 / 2.0)
}

/// One row of the convergence table for `B*_n / (n B_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub ratio: ExactRational,
    pub decimal: f64,
    /// `|ratio - exp(-2 xi)|`.
    pub distance: f64,
}

/// `B*_n / (n B_n)` for `n = 1..=n_max`, against the limit `exp(-2 xi)`.
pub fn convergence_table(n_max: usize, limit: f64) -> Result<Vec<ConvergenceRow>> {
    let series = BridgeSeries::new(n_max)?;
    (1..=n_max)
        .map(|n| {
            let ratio = series.log_ratio(n)?;
            let decimal = ratio.to_f64().unwrap_or(f64::NAN);
            Ok(ConvergenceRow {
                n,
                ratio,
                decimal,
                distance: (decimal - limit).abs(),
            })
        })
        .collect()
}

/// `a*_{floor(x n)} / (x^gamma a*_n)` for `a*_n = 2 T_n / 4^n`, which tends
/// to 1 for every `x > 0` when the sequence varies regularly with index
/// `gamma`.
pub fn regular_variation_ratio(n: usize, x: f64, gamma: f64) -> Result<f64> {
    let m = (x * n as f64).floor() as usize;
    if n == 0 || m == 0 {
        return Err(Error::ZeroArgument);
    }
    let scaled = |k: usize| -> Result<f64> {
        let t = walkup_t(k as u64)?;
        let r = ExactRational::new(BigInt::from(t * 2u32), BigInt::from(4).pow(k as u32));
        Ok(r.to_f64().unwrap_or(f64::NAN))
    };
    Ok(scaled(m)? / (x.powf(gamma) * scaled(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridges::{enumerate_graphical_bridges, irreducible_decomposition, is_irreducible};

    fn ints(v: &[i64]) -> IntSeqTable {
        IntSeqTable::new(0, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    const TABLE_B: [i64; 10] = [1, 2, 4, 8, 17, 38, 92, 236, 643, 1834];

    #[test]
    fn log_transform_of_constant_sequence() {
        let a = vec![ExactRational::one(); 8];
        let star = log_transform(&a).unwrap();
        assert!(star[1..].iter().all(|s| s == &ExactRational::one()));
    }

    #[test]
    fn log_transform_of_geometric_sequence() {
        let c = rat(3, 7);
        let a: Vec<_> = (0..10).map(|k| c.pow(k)).collect();
        let star = log_transform(&a).unwrap();
        for (k, s) in star.iter().enumerate().skip(1) {
            assert_eq!(s, &c.pow(k as i32));
        }
    }

    #[test]
    fn log_transform_rejects_bad_leading_term() {
        assert_eq!(log_transform(&[rat(2, 1)]), Err(Error::LeadingTermNotOne));
        assert_eq!(
            log_transform_int(&ints(&[0, 1])),
            Err(Error::LeadingTermNotOne)
        );
        assert_eq!(
            irreducible_counts(&ints(&[3])),
            Err(Error::LeadingTermNotOne)
        );
    }

    #[test]
    fn scaled_bridge_log_transform_is_twice_walkup() {
        let four = BigInt::from(4);
        let a: Vec<_> = TABLE_B
            .iter()
            .enumerate()
            .map(|(n, &b)| ExactRational::new(b.into(), four.pow(n as u32)))
            .collect();
        let star = log_transform(&a).unwrap();
        for (n, s) in star.iter().enumerate().skip(1) {
            let t = BigInt::from(walkup_t(n as u64).unwrap() * 2u32);
            assert_eq!(*s, ExactRational::new(t, four.pow(n as u32)));
        }
        // 4 * 17 = 2*8 + 4*4 + 8*2 + 20*1
        assert_eq!(4 * 17, 2 * 8 + 4 * 4 + 8 * 2 + 20);
        assert_eq!(
            log_transform_defect(&ints(&TABLE_B), 4).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn irreducible_count_examples() {
        let f = irreducible_counts(&ints(&TABLE_B)).unwrap();
        assert_eq!(f.get(1), Some(&BigInt::from(2)));
        assert_eq!(f.get(2), Some(&BigInt::from(0)));
        assert_eq!(f.get(5), Some(&BigInt::from(2)));
    }

    #[test]
    fn inversion_matches_enumeration() {
        let series = BridgeSeries::new(10).unwrap();
        for n in 1..=10 {
            let enumerated = enumerate_graphical_bridges(n).unwrap();
            let irreducible = enumerated.iter().filter(|b| is_irreducible(b)).count();
            assert_eq!(
                series.irreducible().get(n),
                Some(&BigInt::from(irreducible))
            );
            // Part-count histogram agrees as well.
            let mut hist = BTreeMap::new();
            for b in &enumerated {
                *hist
                    .entry(irreducible_decomposition(b).unwrap().len())
                    .or_insert(0i64) += 1;
            }
            for (m, c) in hist {
                assert_eq!(series.with_parts(n, m), BigInt::from(c), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn distribution_examples() {
        let series = BridgeSeries::new(9).unwrap();
        let d1 = series.parts_distribution(1).unwrap();
        assert_eq!(d1, BTreeMap::from([(1, rat(1, 1))]));
        let d4 = series.parts_distribution(4).unwrap();
        assert_eq!(d4, BTreeMap::from([(1, rat(1, 17)), (4, rat(16, 17))]));
        let d5 = series.parts_distribution(5).unwrap();
        assert_eq!(d5[&1], rat(2, 38));
        assert_eq!(
            d5.values().cloned().sum::<ExactRational>(),
            ExactRational::one()
        );
    }

    #[test]
    fn mean_inverse_examples() {
        let series = BridgeSeries::new(9).unwrap();
        assert_eq!(series.mean_inverse_parts(1).unwrap(), rat(1, 1));
        assert_eq!(series.mean_inverse_parts(4).unwrap(), rat(5, 17));
        assert_eq!(series.mean_inverse_parts(4).unwrap(), rat(20, 68));
        assert_eq!(
            series.mean_inverse_parts(9).unwrap(),
            rat(2 * 2704, 9 * 1834)
        );
        assert_eq!(series.mean_inverse_parts(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn part_counts_sum_to_total() {
        let series = BridgeSeries::new(40).unwrap();
        for n in 0..=40 {
            let total: BigInt = (0..=n).map(|m| series.with_parts(n, m)).sum();
            assert_eq!(&total, series.graphical().get(n).unwrap());
        }
    }

    #[test]
    fn convergence_table_head() {
        let rows = convergence_table(9, 0.5).unwrap();
        assert_eq!(rows[0].ratio, rat(1, 1));
        assert_eq!(rows[8].ratio, rat(5408, 9 * 1834));
        assert!((rows[8].decimal - 0.3276).abs() < 5e-5);
    }

    #[test]
    fn negative_binomial_pmf_sums_to_one() {
        let total: f64 = (1..2000)
            .map(|m| shifted_negative_binomial_pmf(m, 0.5158))
            .sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(shifted_negative_binomial_pmf(0, 0.3), 0.0);
    }

    #[test]
    fn scaled_walkup_varies_regularly() {
        let r = regular_variation_ratio(400, 2.0, -1.5).unwrap();
        assert!((r - 1.0).abs() < 0.01, "{r}");
    }
}
