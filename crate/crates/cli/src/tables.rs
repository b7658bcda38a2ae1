use std::io::Write;

use anyhow::{bail, Result};
use clap::ValueEnum;

use gseq_core::bridges::{
    enumerate_graphical_bridges, graphical_counts, irreducible_decomposition,
};
use gseq_core::constants::{xi, DEFAULT_TERMS};
use gseq_core::graphseq::count_graphical_sequences;
use gseq_core::series::{convergence_table, irreducible_counts, IntSeqTable};
use gseq_core::trees::{count_paths_n, multiset_count_m, walkup_t};
use gseq_core::walks_mc::sample_graphical_bridges;
use gseq_core::{bridges, CountMode};

use crate::output::Format;

pub const WALKUP_CAP: usize = 1000;
pub const MULTISET_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum Sequence {
    /// Plane trees `T_n`, from n = 1.
    T,
    /// Graphical bridges `B_n`, from n = 0.
    B,
    /// Submultiset counts `M_{n,k}`, rows `n,k,value`.
    M,
    /// Lattice paths with area divisible by n.
    N,
    /// Bridges with diamond area divisible by n.
    Nprime,
    /// Graphical degree sequences `G_n`.
    G,
    /// Irreducible graphical bridges.
    #[value(name = "irreducible")]
    Irreducible,
}

/// One table row; `k` is set only for the two-index `M` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub k: Option<usize>,
    pub value: String,
}

fn row(n: usize, value: impl ToString) -> Row {
    Row {
        n,
        k: None,
        value: value.to_string(),
    }
}

pub fn table(which: Sequence, n_max: usize) -> Result<Vec<Row>> {
    let rows = match which {
        Sequence::T => {
            if n_max > WALKUP_CAP {
                bail!("T: n_max = {n_max} exceeds the cap of {WALKUP_CAP}");
            }
            (1..=n_max)
                .map(|n| Ok(row(n, walkup_t(n as u64)?)))
                .collect::<Result<_>>()?
        }
        Sequence::B => graphical_counts(n_max)?
            .into_iter()
            .enumerate()
            .map(|(n, v)| row(n, v))
            .collect(),
        Sequence::Irreducible => {
            let b = IntSeqTable::from_unsigned(0, graphical_counts(n_max)?);
            irreducible_counts(&b)?
                .iter()
                .skip(1)
                .map(|(n, v)| row(n, v))
                .collect()
        }
        Sequence::M => {
            if n_max > MULTISET_CAP {
                bail!("M: n_max = {n_max} exceeds the cap of {MULTISET_CAP}");
            }
            let mut rows = Vec::new();
            for n in 1..=n_max {
                for k in 0..=n {
                    rows.push(Row {
                        n,
                        k: Some(k),
                        value: multiset_count_m(n as u64, k as u64)?.to_string(),
                    });
                }
            }
            rows
        }
        Sequence::N => (1..=n_max)
            .map(|n| Ok(row(n, count_paths_n(n, CountMode::Dp)?)))
            .collect::<Result<_>>()?,
        Sequence::Nprime => (1..=n_max)
            .map(|n| Ok(row(n, bridges::count_bridges_sigma_mod(n, CountMode::Dp)?)))
            .collect::<Result<_>>()?,
        Sequence::G => (1..=n_max)
            .map(|n| Ok(row(n, count_graphical_sequences(n)?)))
            .collect::<Result<_>>()?,
    };
    Ok(rows)
}

pub fn write_convergence(out: &mut impl Write, n_max: usize, format: Format) -> Result<()> {
    let limit = (-2.0 * xi(DEFAULT_TERMS).value).exp();
    let rows = convergence_table(n_max, limit)?;
    match format {
        Format::Csv => {
            writeln!(out, "n,ratio,decimal,distance")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{:.10},{:.3e}",
                    r.n, r.ratio, r.decimal, r.distance
                )?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n,
                        "ratio": r.ratio.to_string(),
                        "decimal": r.decimal,
                        "distance": r.distance,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "limit": limit, "rows": rows });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn write_bridges(
    out: &mut impl Write,
    n: usize,
    samples: Option<usize>,
    seed: u64,
) -> Result<()> {
    let list = match samples {
        Some(count) => sample_graphical_bridges(n, count, seed)?,
        None => enumerate_graphical_bridges(n)?,
    };
    writeln!(out, "bridge,parts")?;
    for b in list {
        writeln!(out, "{},{}", b, irreducible_decomposition(&b)?.len())?;
    }
    Ok(())
}
