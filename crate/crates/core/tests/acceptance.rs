//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gseq_core::bijections::{all_shifted_pairs, bridge_to_path, phi_inverse, phi_shift};
use gseq_core::bridges::{
    all_bridges, count_bridges_sigma_mod, count_graphical_b, enumerate_graphical_bridges,
    graphical_counts, irreducible_decomposition, is_irreducible,
};
use gseq_core::constants::{c_prefactor, rho_exact, xi, Constants, DEFAULT_TERMS};
use gseq_core::graphseq::{count_graphical_sequences, graph_degree_oracle, ratio_table};
use gseq_core::series::{log_transform_defect, tv_to_negative_binomial, BridgeSeries, IntSeqTable};
use gseq_core::trees::{count_paths_n, path_area, walkup_t};
use gseq_core::walks_mc::estimate_rho;
use gseq_core::{BigInt, BigUint, Bridge, CountMode, ExactRational};

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn twice_t(n: usize) -> BigUint {
    if n == 0 {
        // 2 T_0 is tabulated as 0 by convention.
        return BigUint::ZERO;
    }
    walkup_t(n as u64).unwrap() * 2u32
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn table_one() -> Verdict {
    let t: Vec<u64> = vec![0, 2, 4, 8, 20, 52, 160, 492, 1620, 5408];
    let b: Vec<u64> = vec![1, 2, 4, 8, 17, 38, 92, 236, 643, 1834];
    for n in 0..=9 {
        ensure(
            twice_t(n) == BigUint::from(t[n]),
            format!("2 T_{n} = {}", twice_t(n)),
        )?;
        let bn = count_graphical_b(n).map_err(e)?;
        ensure(bn == BigUint::from(b[n]), format!("B_{n} = {bn}"))?;
    }
    Ok("2 T_n and B_n match for n = 0..9".into())
}

fn log_transform() -> Verdict {
    let b = IntSeqTable::from_unsigned(0, graphical_counts(60).map_err(e)?);
    for n in 1..=60 {
        let d = log_transform_defect(&b, n).map_err(e)?;
        ensure(d == BigInt::ZERO, format!("defect {d} at n = {n}"))?;
    }
    Ok(format!(
        "n B_n = sum 2 T_i B_(n-i) for n <= 60 (B_60 has {} digits)",
        b.get(60).unwrap().to_string().len()
    ))
}

fn lattice_paths() -> Verdict {
    for n in 1..=12 {
        ensure(
            count_paths_n(n, CountMode::Exhaustive).map_err(e)? == twice_t(n),
            format!("exhaustive N_{n}"),
        )?;
    }
    for n in 1..=100 {
        ensure(
            count_paths_n(n, CountMode::Dp).map_err(e)? == twice_t(n),
            format!("DP N_{n}"),
        )?;
    }
    Ok("exhaustive n <= 12, DP n <= 100".into())
}

fn bridge_paths() -> Verdict {
    for n in 1..=10 {
        ensure(
            count_bridges_sigma_mod(n, CountMode::Exhaustive).map_err(e)?
                == count_paths_n(n, CountMode::Dp).map_err(e)?,
            format!("N'_{n} != N_{n}"),
        )?;
    }
    let mut checked = 0usize;
    for n in 0..=8 {
        for b in all_bridges(n) {
            let (path, ell) = bridge_to_path(&b);
            ensure(
                path_area(&path) as i64 == b.sigma() + (ell * n) as i64,
                format!("area identity fails for {b}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "N'_n = N_n for n <= 10; area identity on {checked} bridges of length <= 16"
    ))
}

fn cyclic_shift() -> Verdict {
    for n in 1..=8 {
        let pairs = all_shifted_pairs(n).map_err(e)?;
        ensure(
            BigUint::from(pairs.len()) == twice_t(n),
            format!("pair count at n = {n}"),
        )?;
        let image: HashSet<Bridge> = pairs.iter().map(phi_shift).collect();
        ensure(
            image.len() == pairs.len(),
            format!("not injective at n = {n}"),
        )?;
        let target: HashSet<Bridge> = all_bridges(n)
            .into_iter()
            .filter(|b| b.sigma().rem_euclid(n as i64) == 0)
            .collect();
        ensure(image == target, format!("image mismatch at n = {n}"))?;
        for w in &target {
            let pair = phi_inverse(w).map_err(e)?;
            ensure(&phi_shift(&pair) == w, format!("inverse fails for {w}"))?;
        }
    }
    Ok("bijection onto sigma = 0 mod n for n <= 8".into())
}

fn mean_inverse_and_irreducibles() -> Verdict {
    let series = BridgeSeries::new(40).map_err(e)?;
    for n in 1..=40 {
        let lhs = series.mean_inverse_parts(n).map_err(e)?
            * BigInt::from(n)
            * series.graphical().get(n).unwrap();
        ensure(
            lhs == ExactRational::from_integer(twice_t(n).into()),
            format!("E[1/I_n] identity at n = {n}"),
        )?;
    }
    for n in 1..=10 {
        let direct = enumerate_graphical_bridges(n)
            .map_err(e)?
            .iter()
            .filter(|b| is_irreducible(b))
            .count();
        ensure(
            series.irreducible().get(n) == Some(&BigInt::from(direct)),
            format!("irreducible count at n = {n}"),
        )?;
    }
    ensure(
        series.irreducible().get(5) == Some(&BigInt::from(2)),
        "i_5 != 2",
    )?;
    Ok("identity exact for n <= 40; irreducibles agree for n <= 10, i_5 = 2".into())
}

fn constants() -> Verdict {
    let k = Constants::evaluate(DEFAULT_TERMS);
    ensure((k.c.value - 0.09910).abs() < 5e-5, format!("C = {}", k.c))?;
    let lhs = k.c * k.rho.one_minus().sqrt();
    ensure(
        lhs.overlaps(&c_prefactor()),
        format!("C sqrt(1 - rho) = {lhs}"),
    )?;
    let x = xi(10_000);
    ensure(
        x.bound < 1e-6,
        format!("xi bound at 1e4 terms = {:e}", x.bound),
    )?;
    Ok(format!(
        "C = {}, rho = {}, xi(1e4) bound = {:.1e}",
        k.c, k.rho, x.bound
    ))
}

fn monte_carlo() -> Verdict {
    let mc = estimate_rho(100_000, 1_000_000, 42, 8);
    let rho = rho_exact().value;
    let est = mc.estimate.ok_or("every run capped")?;
    let tol = f64::max(0.01, 4.0 * mc.std_error + mc.capped_fraction);
    let diff = (est - rho).abs();
    ensure(
        diff <= tol,
        format!("|{est:.5} - {rho:.5}| = {diff:.5} > {tol:.5}"),
    )?;
    Ok(format!(
        "estimate {est:.5}, |diff| {diff:.5} <= tol {tol:.5} (se {:.5}, capped {:.4})",
        mc.std_error, mc.capped_fraction
    ))
}

fn degree_sequences() -> Verdict {
    for n in 1..=6 {
        let count = count_graphical_sequences(n).map_err(e)?;
        let oracle = graph_degree_oracle(n).map_err(e)?.len() as u64;
        ensure(
            count == oracle,
            format!("G_{n}: {count} vs oracle {oracle}"),
        )?;
    }
    let rows = ratio_table(12).map_err(e)?;
    for r in rows.iter().filter(|r| r.n >= 8) {
        ensure(
            r.ratio > 0.03 && r.ratio < 0.3,
            format!("ratio at n = {} is {}", r.n, r.ratio),
        )?;
    }
    Ok("dual oracle n <= 6; ratio band n = 8..12".into())
}

fn negative_binomial() -> Verdict {
    let series = BridgeSeries::new(40).map_err(e)?;
    let rho = rho_exact().value;
    let tv10 = tv_to_negative_binomial(&series, 10, rho).map_err(e)?;
    let tv40 = tv_to_negative_binomial(&series, 40, rho).map_err(e)?;
    ensure(tv40 < tv10, format!("TV(40) = {tv40} >= TV(10) = {tv10}"))?;
    Ok(format!("TV(10) = {tv10:.5}, TV(40) = {tv40:.5}"))
}

fn length_ten_facts() -> Verdict {
    let all = enumerate_graphical_bridges(5).map_err(e)?;
    ensure(all.len() == 38, format!("{} graphical bridges", all.len()))?;
    let flat: Vec<&Bridge> = all
        .iter()
        .filter(|b| b.prefix_sigmas().iter().all(|&s| s == 0))
        .collect();
    ensure(flat.len() == 32, format!("{} diamond-bound", flat.len()))?;
    let irreducible = all.iter().filter(|b| is_irreducible(b)).count();
    ensure(irreducible == 2, format!("{irreducible} irreducible"))?;
    let rest: Vec<&Bridge> = all
        .iter()
        .filter(|b| !b.prefix_sigmas().iter().all(|&s| s == 0) && !is_irreducible(b))
        .collect();
    ensure(rest.len() == 4, format!("{} remaining", rest.len()))?;
    for b in rest {
        let parts = irreducible_decomposition(b).map_err(e)?.len();
        ensure(parts == 2, format!("{b} has {parts} parts"))?;
    }
    Ok("38 = 32 diamond-bound + 2 irreducible + 4 with two parts".into())
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Verdict,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "initial values of 2 T_n and B_n",
            limit: secs(1),
            run: table_one,
        },
        Criterion {
            id: 2,
            name: "log transform identity",
            limit: secs(120),
            run: log_transform,
        },
        Criterion {
            id: 3,
            name: "lattice paths N_n = 2 T_n",
            limit: secs(60),
            run: lattice_paths,
        },
        Criterion {
            id: 4,
            name: "bridges N'_n = N_n, area identity",
            limit: secs(120),
            run: bridge_paths,
        },
        Criterion {
            id: 5,
            name: "cyclic shift bijection",
            limit: secs(120),
            run: cyclic_shift,
        },
        Criterion {
            id: 6,
            name: "mean inverse parts, irreducibles",
            limit: None,
            run: mean_inverse_and_irreducibles,
        },
        Criterion {
            id: 7,
            name: "constants C, rho, xi",
            limit: None,
            run: constants,
        },
        Criterion {
            id: 8,
            name: "Monte Carlo rho",
            limit: secs(300),
            run: monte_carlo,
        },
        Criterion {
            id: 9,
            name: "graphical sequences dual oracle",
            limit: secs(60),
            run: degree_sequences,
        },
        Criterion {
            id: 10,
            name: "negative binomial limit",
            limit: None,
            run: negative_binomial,
        },
        Criterion {
            id: 11,
            name: "length-10 bridge facts",
            limit: None,
            run: length_ten_facts,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (verdict, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {:.2?}, limit {:.0?}", elapsed, limit))
            }
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("PASS {:>2} {} [{:.2?}]: {detail}", c.id, c.name, elapsed),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {} [{:.2?}]: {detail}", c.id, c.name, elapsed);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
