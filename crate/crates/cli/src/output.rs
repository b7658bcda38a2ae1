use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::json;

use gseq_core::constants::Constants;

use crate::tables::{Row, Sequence};
use crate::verify::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn write_table(
    out: &mut impl Write,
    which: Sequence,
    rows: &[Row],
    format: Format,
) -> Result<()> {
    let two_index = which == Sequence::M;
    match format {
        Format::Csv => {
            writeln!(out, "{}", if two_index { "n,k,value" } else { "n,value" })?;
            for r in rows {
                match r.k {
                    Some(k) => writeln!(out, "{},{},{}", r.n, k, r.value)?,
                    None => writeln!(out, "{},{}", r.n, r.value)?,
                }
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| match r.k {
                    Some(k) => json!({ "n": r.n, "k": k, "value": r.value }),
                    None => json!({ "n": r.n, "value": r.value }),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn write_report(out: &mut impl Write, report: &Report, format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "check,passed,detail")?;
            for c in &report.checks {
                writeln!(
                    out,
                    "{},{},\"{}\"",
                    c.name,
                    c.passed,
                    c.detail.replace('"', "'")
                )?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn write_constants(out: &mut impl Write, k: &Constants, digits: usize) -> Result<()> {
    let doc = json!({
        "terms": k.terms,
        "digits": digits,
        "xi": k.xi.format_value(digits),
        "C": k.c.format_value(digits),
        "rho": k.rho.format_value(digits),
        "gamma34": k.gamma34.format_value(digits),
        "bounds": {
            "xi": k.xi.format_bound(),
            "C": k.c.format_bound(),
            "rho": k.rho.format_bound(),
            "gamma34": k.gamma34.format_bound(),
        },
    });
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}
