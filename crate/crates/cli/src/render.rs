//! JSON lines, CSV, and aligned text.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

use crate::plan::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn params(p: &BTreeMap<String, u32>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

pub fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn reports(out: &mut dyn Write, format: Format, reports: &[Report]) -> io::Result<()> {
    match format {
        Format::Json => reports.iter().try_for_each(|r| json_line(out, r)),
        Format::Csv => csv_reports(out, reports),
        Format::Table => {
            for r in reports {
                table_report(out, r)?;
            }
            let bad = reports.iter().filter(|r| !r.ok()).count();
            if bad == 0 {
                writeln!(out, "all {} reports match", reports.len())
            } else {
                writeln!(out, "{bad} of {} reports have mismatches", reports.len())
            }
        }
    }
}

fn csv_reports(out: &mut dyn Write, reports: &[Report]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    let mut header = None;
    for r in reports {
        let kind = std::mem::discriminant(r);
        if header != Some(kind) {
            header = Some(kind);
            match r {
                Report::Csp(_) => w.write_record(["theorem", "params", "k", "count", "evaluation", "match"])?,
                Report::Check(_) => w.write_record(["check", "params", "checked", "failures", "counterexample"])?,
                Report::Conjecture(_) => {
                    w.write_record(["conjecture", "params", "k", "direct", "embedded", "evaluation", "match"])?
                }
            }
        }
        match r {
            Report::Csp(c) => {
                for row in &c.rows {
                    w.write_record([
                        c.theorem.clone(),
                        params(&c.params),
                        row.k.to_string(),
                        row.count.to_string(),
                        row.evaluation.to_string(),
                        row.matched.to_string(),
                    ])?;
                }
            }
            Report::Check(c) => w.write_record([
                c.check.clone(),
                params(&c.params),
                c.checked.to_string(),
                c.failures.to_string(),
                c.counterexample.clone().unwrap_or_default(),
            ])?,
            Report::Conjecture(c) => {
                for row in &c.rows {
                    w.write_record([
                        c.conjecture.clone(),
                        params(&c.params),
                        row.k.to_string(),
                        row.direct.to_string(),
                        row.embedded.to_string(),
                        row.evaluation.to_string(),
                        row.matched.to_string(),
                    ])?;
                }
            }
        }
    }
    w.flush()
}

fn elapsed(ms: Option<u64>) -> String {
    ms.map(|t| format!("  {t} ms")).unwrap_or_default()
}

fn table_report(out: &mut dyn Write, r: &Report) -> io::Result<()> {
    match r {
        Report::Csp(c) => {
            let burnside = match c.burnside {
                Some(b) => format!("  burnside {}", yes(b)),
                None => String::new(),
            };
            writeln!(
                out,
                "{}  {}  order {}{burnside}{}",
                c.theorem,
                params(&c.params),
                c.order,
                elapsed(c.elapsed_ms)
            )?;
            writeln!(out, "  {:>4}  {:>10}  {:>12}  match", "k", "count", "evaluation")?;
            for row in &c.rows {
                writeln!(
                    out,
                    "  {:>4}  {:>10}  {:>12}  {}",
                    row.k,
                    row.count,
                    row.evaluation.to_string(),
                    yes(row.matched)
                )?;
            }
            let orbits: Vec<String> = c.orbits.iter().map(|o| format!("{}x{}", o.orbits, o.size)).collect();
            writeln!(out, "  orbits: {}", orbits.join(" "))
        }
        Report::Check(c) => {
            write!(
                out,
                "{}  {}  {} checked, {} failures{}",
                c.check,
                params(&c.params),
                c.checked,
                c.failures,
                elapsed(c.elapsed_ms)
            )?;
            match &c.counterexample {
                Some(x) => writeln!(out, "\n  first failure: {x}"),
                None => writeln!(out),
            }
        }
        Report::Conjecture(c) => {
            writeln!(
                out,
                "{}  {}  order {}  {}{}",
                c.conjecture,
                params(&c.params),
                c.order,
                c.outcome,
                elapsed(c.elapsed_ms)
            )?;
            writeln!(out, "  {:>4}  {:>10}  {:>10}  {:>12}  match", "k", "direct", "embedded", "evaluation")?;
            for row in &c.rows {
                writeln!(
                    out,
                    "  {:>4}  {:>10}  {:>10}  {:>12}  {}",
                    row.k,
                    row.direct,
                    row.embedded,
                    row.evaluation.to_string(),
                    yes(row.matched)
                )?;
            }
            Ok(())
        }
    }
}
