//! Verification suites behind `gseq verify`.

use std::collections::HashSet;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;

use gseq_core::bijections::{
    all_shifted_pairs, bridge_to_path, path_to_bridge, phi_inverse, phi_shift,
};
use gseq_core::bridges::{
    all_bridges, count_bridges_sigma_mod, enumerate_graphical_bridges, graphical_counts,
    irreducible_decomposition, is_irreducible, EXHAUSTIVE_BRIDGE_CAP, GRAPHICAL_DP_CAP,
};
use gseq_core::constants::{c_prefactor, BoundedReal, Constants, DEFAULT_TERMS};
use gseq_core::graphseq::{
    count_graphical_sequences, count_graphical_sequences_with, graph_degree_oracle, Pruning,
};
use gseq_core::series::{
    convergence_table, log_transform_defect, tv_to_negative_binomial, BridgeSeries, IntSeqTable,
};
use gseq_core::trees::{
    count_paths_n, count_paths_split, multiset_count_m, path_area, walkup_t, DP_PATH_CAP,
    EXHAUSTIVE_PATH_CAP,
};
use gseq_core::{BigInt, BigUint, Bridge, CountMode, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Logtransform,
    Bijections,
    Lemmas,
    Oracles,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Parameters {
    pub suite: Suite,
    pub n_max: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.all_passed
    }
}

type Outcome = gseq_core::Result<(bool, String)>;

fn check(name: &'static str, f: impl FnOnce() -> Outcome) -> Check {
    match f() {
        Ok((passed, detail)) => Check {
            name,
            passed,
            detail,
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

/// Runs `pred` for `n = lo..=hi`; reports the first failing `n`.
fn for_each_n(
    lo: usize,
    hi: usize,
    mut pred: impl FnMut(usize) -> gseq_core::Result<bool>,
) -> Outcome {
    for n in lo..=hi {
        if !pred(n)? {
            return Ok((false, format!("fails at n = {n}")));
        }
    }
    Ok((true, format!("holds for {lo} <= n <= {hi}")))
}

fn twice_walkup(n: usize) -> gseq_core::Result<BigUint> {
    Ok(walkup_t(n as u64)? * 2u32)
}

fn cap_for(suite: Suite) -> usize {
    match suite {
        Suite::Logtransform => GRAPHICAL_DP_CAP,
        Suite::Lemmas => DP_PATH_CAP,
        Suite::Bijections | Suite::Oracles | Suite::All => EXHAUSTIVE_BRIDGE_CAP,
    }
}

pub fn run(suite: Suite, n_max: usize) -> Result<Report> {
    let cap = cap_for(suite);
    if n_max == 0 || n_max > cap {
        bail!("verify {suite:?}: n_max must be in 1..={cap}, got {n_max}");
    }
    let mut checks = Vec::new();
    if matches!(suite, Suite::Logtransform | Suite::All) {
        checks.extend(logtransform(n_max));
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        checks.extend(lemmas(n_max));
    }
    if matches!(suite, Suite::Bijections | Suite::All) {
        checks.extend(bijections(n_max));
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        checks.extend(oracles(n_max));
    }
    let all_passed = checks.iter().all(|c| c.passed);
    Ok(Report {
        command: "verify",
        parameters: Parameters { suite, n_max },
        checks,
        all_passed,
    })
}

fn logtransform(n_max: usize) -> Vec<Check> {
    let series = match BridgeSeries::new(n_max.max(40)) {
        Ok(s) => s,
        Err(e) => {
            return vec![Check {
                name: "bridge series up to n = 40",
                passed: false,
                detail: format!("error: {e}"),
            }]
        }
    };
    let constants = Constants::evaluate(DEFAULT_TERMS);
    let mut out = Vec::new();
    out.push(check(
        "log transform of B_n is 2 T_n: n B_n = sum_i 2 T_i B_(n-i)",
        || {
            let b = IntSeqTable::from_unsigned(0, graphical_counts(n_max)?);
            for_each_n(1, n_max, |n| {
                Ok(log_transform_defect(&b, n)? == BigInt::ZERO)
            })
        },
    ));
    out.push(check(
        "mean inverse part count: E[1/I_n] n B_n = 2 T_n",
        || {
            let s = &series;
            for_each_n(1, n_max, |n| {
                let lhs =
                    s.mean_inverse_parts(n)? * BigInt::from(n) * s.graphical().get(n).unwrap();
                Ok(lhs == ExactRational::from_integer(twice_walkup(n)?.into()))
            })
        },
    ));
    out.push(check("renewal decomposition: sum_m B^(m)_n = B_n", || {
        let s = &series;
        for_each_n(0, n_max, |n| {
            let total: BigInt = (0..=n).map(|m| s.with_parts(n, m)).sum();
            Ok(&total == s.graphical().get(n).unwrap())
        })
    }));
    out.push(check(
        "part count tends to 1 + NegBin(2, 1 - rho): TV(40) < TV(10)",
        || {
            let s = &series;
            let rho = constants.rho.value;
            let (tv10, tv40) = (
                tv_to_negative_binomial(s, 10, rho)?,
                tv_to_negative_binomial(s, 40, rho)?,
            );
            Ok((
                tv40 < tv10,
                format!("TV(10) = {tv10:.6}, TV(40) = {tv40:.6}"),
            ))
        },
    ));
    out.push(check(
        "B*_n / (n B_n) approaches exp(-2 xi): distance(40) < distance(10)",
        || {
            let limit = (-2.0 * constants.xi.value).exp();
            let rows = convergence_table(40, limit)?;
            let d = |n: usize| {
                rows.iter()
                    .find(|r| r.n == n)
                    .map_or(f64::NAN, |r| r.distance)
            };
            let (d10, d40) = (d(10), d(40));
            Ok((
                d40 < d10,
                format!("distance(10) = {d10:.6}, distance(40) = {d40:.6}"),
            ))
        },
    ));
    out.push(check(
        "rho = 1 - exp(-2 xi) reconciles both forms of C",
        || {
            let root = constants.rho.one_minus().sqrt();
            let lhs = constants.c * root;
            let ok = lhs.overlaps(&c_prefactor())
                && (BoundedReal::new(1.0, 0.0) / root).overlaps(&constants.xi.exp());
            Ok((
                ok,
                format!("C sqrt(1 - rho) = {lhs}, prefactor = {}", c_prefactor()),
            ))
        },
    ));
    out
}

fn lemmas(n_max: usize) -> Vec<Check> {
    let ex_paths = n_max.min(12).min(EXHAUSTIVE_PATH_CAP);
    let ex_bridges = n_max.min(EXHAUSTIVE_BRIDGE_CAP);
    vec![
        check("lattice paths: N_n = 2 T_n (exhaustive)", || {
            for_each_n(1, ex_paths, |n| {
                Ok(count_paths_n(n, CountMode::Exhaustive)? == twice_walkup(n)?)
            })
        }),
        check("lattice paths: N_n = 2 T_n (dynamic programme)", || {
            for_each_n(1, n_max, |n| {
                Ok(count_paths_n(n, CountMode::Dp)? == twice_walkup(n)?)
            })
        }),
        check("lattice paths ending up or right each number T_n", || {
            for_each_n(1, ex_paths, |n| {
                let split = count_paths_split(n, CountMode::Exhaustive)?;
                let t = walkup_t(n as u64)?;
                Ok(split.ending_up == t && split.ending_right == t)
            })
        }),
        check(
            "submultisets: sum_k M_(n,k) = N_n and M_(n,n) = T_n",
            || {
                for_each_n(1, n_max, |n| {
                    let row: BigUint = (0..=n as u64)
                        .map(|k| multiset_count_m(n as u64, k))
                        .sum::<gseq_core::Result<_>>()?;
                    Ok(row == count_paths_n(n, CountMode::Dp)?
                        && multiset_count_m(n as u64, n as u64)? == walkup_t(n as u64)?)
                })
            },
        ),
        check(
            "bridges with sigma = 0 mod n: N'_n = N_n (exhaustive)",
            || {
                for_each_n(1, ex_bridges, |n| {
                    Ok(count_bridges_sigma_mod(n, CountMode::Exhaustive)?
                        == count_paths_n(n, CountMode::Dp)?)
                })
            },
        ),
        check(
            "bridges with sigma = 0 mod n: N'_n = N_n (dynamic programme)",
            || {
                for_each_n(1, n_max, |n| {
                    Ok(count_bridges_sigma_mod(n, CountMode::Dp)?
                        == count_paths_n(n, CountMode::Dp)?)
                })
            },
        ),
    ]
}

fn bijections(n_max: usize) -> Vec<Check> {
    vec![
        check(
            "bridge to lattice path: alpha(L) = sigma(B) + l n, invertible",
            || {
                for_each_n(0, n_max, |n| {
                    let mut seen = HashSet::new();
                    for b in all_bridges(n) {
                        let (path, ell) = bridge_to_path(&b);
                        if path_area(&path) as i64 != b.sigma() + (ell * n) as i64
                            || path_to_bridge(&path)? != b
                            || !seen.insert(path)
                        {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })
            },
        ),
        check(
            "cyclic shift map: injective onto sigma = 0 mod n, 2 T_n pairs",
            || {
                for_each_n(1, n_max, |n| {
                    let pairs = all_shifted_pairs(n)?;
                    let image: HashSet<Bridge> = pairs.iter().map(phi_shift).collect();
                    let target: HashSet<Bridge> = all_bridges(n)
                        .into_iter()
                        .filter(|b| b.sigma().rem_euclid(n as i64) == 0)
                        .collect();
                    Ok(BigUint::from(pairs.len()) == twice_walkup(n)?
                        && image.len() == pairs.len()
                        && image == target)
                })
            },
        ),
        check("cyclic shift inverse: exactly one preimage", || {
            for_each_n(1, n_max, |n| {
                for w in all_bridges(n) {
                    if w.sigma().rem_euclid(n as i64) != 0 {
                        continue;
                    }
                    let pair = phi_inverse(&w)?;
                    if phi_shift(&pair) != w {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        }),
    ]
}

fn oracles(n_max: usize) -> Vec<Check> {
    vec![
        check("reference values: B_0..9 and 2 T_1..9", || {
            let b = graphical_counts(9)?;
            let b_ok = b.iter().map(ToString::to_string).collect::<Vec<_>>()
                == ["1", "2", "4", "8", "17", "38", "92", "236", "643", "1834"];
            let t: Vec<String> = (1..=9)
                .map(|n| twice_walkup(n).map(|v| v.to_string()))
                .collect::<gseq_core::Result<_>>()?;
            let t_ok = t == ["2", "4", "8", "20", "52", "160", "492", "1620", "5408"];
            Ok((b_ok && t_ok, "Table of B_n and 2 T_n".into()))
        }),
        check("graphical bridges: DP count = enumeration", || {
            let dp = graphical_counts(n_max)?;
            for_each_n(0, n_max, |n| {
                Ok(dp[n] == enumerate_graphical_bridges(n)?.len().into())
            })
        }),
        check(
            "irreducible bridges: series inversion = enumeration",
            || {
                let series = BridgeSeries::new(n_max)?;
                for_each_n(1, n_max, |n| {
                    let direct = enumerate_graphical_bridges(n)?
                        .iter()
                        .filter(|b| is_irreducible(b))
                        .count();
                    Ok(series.irreducible().get(n) == Some(&BigInt::from(direct)))
                })
            },
        ),
        check(
            "bridges with all prefix diamond areas zero number 2^n",
            || {
                for_each_n(0, n_max, |n| {
                    let flat = enumerate_graphical_bridges(n)?
                        .iter()
                        .filter(|b| b.prefix_sigmas().iter().all(|&s| s == 0))
                        .count();
                    Ok(flat == 1 << n)
                })
            },
        ),
        check(
            "length 10: 38 graphical, 32 diamond-bound, 2 irreducible, rest 2 parts",
            || {
                let all = enumerate_graphical_bridges(5)?;
                let mut flat = 0;
                let mut irreducible = 0;
                let mut two_parts = 0;
                for b in &all {
                    let parts = irreducible_decomposition(b)?.len();
                    if b.prefix_sigmas().iter().all(|&s| s == 0) {
                        flat += 1;
                    } else if parts == 1 {
                        irreducible += 1;
                    } else if parts == 2 {
                        two_parts += 1;
                    }
                }
                Ok((
                all.len() == 38 && flat == 32 && irreducible == 2 && two_parts == 4,
                format!("{} graphical, {flat} diamond-bound, {irreducible} irreducible, {two_parts} with 2 parts", all.len()),
            ))
            },
        ),
        check(
            "graphical sequences: Erdos-Gallai count = all-graphs oracle",
            || {
                for_each_n(1, n_max.min(6), |n| {
                    Ok(count_graphical_sequences(n)? == graph_degree_oracle(n)?.len() as u64)
                })
            },
        ),
        check(
            "graphical sequences: prefix pruning does not change the count",
            || {
                for_each_n(1, n_max.min(9), |n| {
                    Ok(count_graphical_sequences_with(n, Pruning::On)?
                        == count_graphical_sequences_with(n, Pruning::Off)?)
                })
            },
        ),
    ]
}
