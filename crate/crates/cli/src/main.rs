mod plan;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use ppsieve::plane::enumerate;
use ppsieve::qpoly::{
    corner_formula, cyclotomic_polynomial, mac_formula, q_binomial, symmac_formula, symmac_prime_formula, wide_formula,
};
use ppsieve::sieve::{Evaluation, SuiteLimits, SCHEMA};
use ppsieve::tableau::enumerate_ssyt;
use ppsieve::{Conjecture, IntPolynomial, Partition};

use plan::{Item, Ranges, Report, Selector};
use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "ppsieve",
    version,
    about = "Enumerate plane partitions and check sieving statements about their dynamics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Refuse work items predicted to enumerate more objects than this.
    #[arg(long, env = "PPSIEVE_CAP", default_value_t = 3_000_000, global = true)]
    cap: u64,

    /// Add elapsed_ms to reports.
    #[arg(long, global = true)]
    timing: bool,

    /// Write to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream plane partitions, P-partitions or tableaux in canonical order.
    Enumerate(EnumerateArgs),
    /// Run exhaustive checks and report matches.
    Verify(VerifyArgs),
    /// Expand a product formula and evaluate it at roots of unity.
    Poly(PolyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Triangle {
    Tall,
    Wide,
    Corner,
}

impl From<Triangle> for Conjecture {
    fn from(t: Triangle) -> Self {
        match t {
            Triangle::Tall => Conjecture::Tall,
            Triangle::Wide => Conjecture::Wide,
            Triangle::Corner => Conjecture::Corner,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("set").required(true).args(["pp", "poset", "ssyt"])))]
struct EnumerateArgs {
    /// Plane partitions in the A x B box.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pp: Option<Vec<usize>>,
    /// P-partitions of a triangular poset of size --n.
    #[arg(long, value_enum)]
    poset: Option<Triangle>,
    /// Semistandard tableaux of this shape with entries up to --k.
    #[arg(long, num_args = 1.., value_name = "PART")]
    ssyt: Option<Vec<u32>>,
    #[arg(long)]
    n: Option<u32>,
    /// Height bound.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    selector: Selector,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long, default_value_t = 3)]
    a_max: usize,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, default_value_t = 3)]
    b_max: usize,
    /// Side of a square box or size of a triangle.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    /// Half the height, for the triangular arrays.
    #[arg(long = "M")]
    half: Option<u32>,
    #[arg(long = "M-max")]
    half_max: Option<u32>,
    /// Skip boxes with a + b above this.
    #[arg(long)]
    sum_max: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormulaName {
    Mac,
    Symmac,
    SymmacPrime,
    Qbinom,
    Tall,
    Wide,
    Corner,
    Cyclotomic,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(value_enum)]
    formula: FormulaName,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Order of the cyclotomic polynomial.
    #[arg(long)]
    d: Option<u32>,
    /// Evaluate at every power of a primitive root of unity of this order.
    #[arg(long, value_name = "D")]
    eval: Option<u32>,
}

enum Failure {
    Usage(String),
    Cap(String),
    Mismatch,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<ppsieve::Error> for Failure {
    fn from(e: ppsieve::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn need<T>(v: Option<T>, what: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{what}")))
}

fn check_cap(size: &BigInt, cap: u64, what: &str) -> Outcome {
    if *size > BigInt::from(cap) {
        return Err(Failure::Cap(format!(
            "{what}: predicted {size} objects exceeds the cap of {cap} (raise it with --cap or PPSIEVE_CAP)"
        )));
    }
    Ok(())
}

/// `∏ (k + c(u)) / h(u)` over the cells of the shape.
fn ssyt_count(shape: &Partition, k: u32) -> BigInt {
    let parts = shape.parts();
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            let leg = parts[i + 1..].iter().filter(|&&p| p as usize > j).count();
            num *= (k as i64 + content).max(0);
            den *= row as usize - j + leg;
        }
    }
    num / den
}

fn enumerate_cmd(args: &EnumerateArgs, cli: &Cli, out: &mut dyn Write) -> Outcome {
    if let Some(pp) = &args.pp {
        let (a, b, m) = (pp[0], pp[1], need(args.m, "m")?);
        check_cap(&ppsieve::PlanePartition::box_count(a, b, m).into(), cli.cap, "enumerate")?;
        let items = enumerate(a, b, m)?;
        match cli.format {
            Format::Json => {
                for pi in items {
                    render::json_line(out, &pi)?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["index", "size", "rows"]).map_err(io::Error::from)?;
                for (i, pi) in items.enumerate() {
                    w.write_record([i.to_string(), pi.size().to_string(), pi.to_string()]).map_err(io::Error::from)?;
                }
                w.flush()?;
            }
            Format::Table => {
                let mut count = 0u64;
                for pi in items {
                    writeln!(out, "{pi}")?;
                    count += 1;
                }
                writeln!(out, "{count} objects")?;
            }
        }
        return Ok(());
    }
    if let Some(tri) = args.poset {
        let (n, m) = (need(args.n, "n")?, need(args.m, "m")?);
        if n == 0 {
            return Err(Failure::Usage("--n must be positive".into()));
        }
        let which = Conjecture::from(tri);
        check_cap(&which.formula(n, m).value_at_one()?, cli.cap, "enumerate")?;
        let poset = which.poset(n);
        let ids: Vec<String> = poset.ids().iter().map(ToString::to_string).collect();
        let mut count = 0u64;
        match cli.format {
            Format::Json => {
                for p in poset.ppartitions(m) {
                    render::json_line(out, &p)?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&ids).map_err(io::Error::from)?;
                for p in poset.ppartitions(m) {
                    w.write_record(p.values.iter().map(u32::to_string)).map_err(io::Error::from)?;
                }
                w.flush()?;
            }
            Format::Table => {
                writeln!(out, "{}", ids.join(" "))?;
                for p in poset.ppartitions(m) {
                    let cells: Vec<String> =
                        p.values.iter().zip(&ids).map(|(v, id)| format!("{v:>width$}", width = id.len())).collect();
                    writeln!(out, "{}", cells.join(" "))?;
                    count += 1;
                }
                writeln!(out, "{count} objects")?;
            }
        }
        return Ok(());
    }
    let shape = Partition::new(args.ssyt.clone().unwrap_or_default())?;
    let k = need(args.k, "k")?;
    check_cap(&ssyt_count(&shape, k), cli.cap, "enumerate")?;
    let tabs = enumerate_ssyt(&shape, k);
    match cli.format {
        Format::Json => tabs.iter().try_for_each(|t| render::json_line(out, t))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["index", "rows"]).map_err(io::Error::from)?;
            for (i, t) in tabs.iter().enumerate() {
                w.write_record([i.to_string(), t.to_string()]).map_err(io::Error::from)?;
            }
            w.flush()?;
        }
        Format::Table => {
            for t in &tabs {
                writeln!(out, "{t}")?;
            }
            writeln!(out, "{} objects", tabs.len())?;
        }
    }
    Ok(())
}

fn bounds<T: Copy + PartialOrd + std::fmt::Display>(
    exact: Option<T>,
    lo: T,
    hi: T,
    name: &str,
) -> Result<(T, T), Failure> {
    let r = exact.map_or((lo, hi), |v| (v, v));
    if r.0 > r.1 {
        return Err(Failure::Usage(format!("empty range for {name}: {}..={}", r.0, r.1)));
    }
    Ok(r)
}

fn verify_cmd(args: &VerifyArgs, cli: &Cli, out: &mut dyn Write) -> Outcome {
    let ranges = Ranges {
        a: bounds(args.a, 1, args.a_max, "a")?,
        b: bounds(args.b, 1, args.b_max, "b")?,
        n: bounds(args.n, 1, args.n_max.unwrap_or(3), "n")?,
        m: bounds(args.m, 0, args.m_max.unwrap_or(2), "m")?,
        half: bounds(args.half, 0, args.half_max.unwrap_or(2), "M")?,
        sum_max: args.sum_max,
    };
    if ranges.a.0 == 0 || ranges.b.0 == 0 || ranges.n.0 == 0 {
        return Err(Failure::Usage("sides must be positive".into()));
    }
    let defaults = SuiteLimits::default();
    let limits = SuiteLimits {
        max_sum: args.sum_max.unwrap_or(defaults.max_sum),
        max_m: args.m_max.unwrap_or(defaults.max_m),
        cy_n: args.n_max.unwrap_or(defaults.cy_n),
        cy_half: args.half_max.unwrap_or(defaults.cy_half),
        ..defaults
    };
    let items = plan::plan(args.selector, &ranges, limits);
    if items.is_empty() {
        return Err(Failure::Usage("no work items in the given ranges".into()));
    }
    for item in &items {
        check_cap(&item.predicted_size(), cli.cap, &item.describe())?;
    }
    let results: Vec<Vec<Report>> =
        items.par_iter().map(|item: &Item| item.run(cli.timing)).collect::<ppsieve::Result<_>>()?;
    let reports: Vec<Report> = results.into_iter().flatten().collect();
    render::reports(out, cli.format, &reports)?;
    out.flush()?;
    match reports.iter().find(|r| !r.ok()) {
        None => Ok(()),
        Some(bad) => {
            let json = serde_json::to_string(bad).map_err(io::Error::from)?;
            eprintln!("first mismatch: {json}");
            Err(Failure::Mismatch)
        }
    }
}

#[derive(Serialize)]
struct EvalRow {
    k: i64,
    value: Evaluation,
}

#[derive(Serialize)]
struct PolyDump {
    schema: u32,
    formula: String,
    params: std::collections::BTreeMap<String, u32>,
    polynomial: String,
    coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    evaluations: Vec<EvalRow>,
}

fn poly_cmd(args: &PolyArgs, cli: &Cli, out: &mut dyn Write) -> Outcome {
    let mut params = std::collections::BTreeMap::new();
    let mut take = |name: &str, v: Option<u32>| -> Result<u32, Failure> {
        let v = need(v, name)?;
        params.insert(name.to_string(), v);
        Ok(v)
    };
    let poly: IntPolynomial = match args.formula {
        FormulaName::Mac => {
            let (a, b, m) = (take("a", args.a)?, take("b", args.b)?, take("m", args.m)?);
            mac_formula(a, b, m).expand()?
        }
        FormulaName::Symmac => {
            let (n, m) = (take("n", args.n)?, take("m", args.m)?);
            symmac_formula(n, m).expand()?
        }
        FormulaName::SymmacPrime | FormulaName::Tall => {
            let (n, m) = (take("n", args.n)?, take("m", args.m)?);
            symmac_prime_formula(n, m).expand()?
        }
        FormulaName::Qbinom => {
            let (n, a) = (take("n", args.n)?, take("a", args.a)?);
            if a > n {
                return Err(Failure::Usage(format!("--a {a} exceeds --n {n}")));
            }
            q_binomial(n, a).expand()?
        }
        FormulaName::Wide => {
            let (n, m) = (take("n", args.n)?, take("m", args.m)?);
            wide_formula(n, m).expand()?
        }
        FormulaName::Corner => {
            let (n, m) = (take("n", args.n)?, take("m", args.m)?);
            corner_formula(n, m).expand()?
        }
        FormulaName::Cyclotomic => {
            let d = take("d", args.d)?;
            if d == 0 {
                return Err(Failure::Usage("--d must be positive".into()));
            }
            cyclotomic_polynomial(d)
        }
    };
    let evaluations: Vec<EvalRow> = match args.eval {
        Some(0) => return Err(Failure::Usage("--eval must be positive".into())),
        Some(d) => (0..d as i64).map(|k| EvalRow { k, value: Evaluation::at_root(&poly, d, k) }).collect(),
        None => Vec::new(),
    };
    let name = args.formula.to_possible_value().expect("no skipped variants").get_name().to_string();
    let dump = PolyDump {
        schema: SCHEMA,
        formula: name,
        params,
        polynomial: poly.to_string(),
        coefficients: poly.coeffs().iter().map(ToString::to_string).collect(),
        order: args.eval,
        evaluations,
    };
    match cli.format {
        Format::Json => render::json_line(out, &dump)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["kind", "index", "value"]).map_err(io::Error::from)?;
            for (e, c) in dump.coefficients.iter().enumerate() {
                w.write_record(["coefficient", &e.to_string(), c]).map_err(io::Error::from)?;
            }
            for r in &dump.evaluations {
                w.write_record(["evaluation", &r.k.to_string(), &r.value.to_string()]).map_err(io::Error::from)?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{}", dump.polynomial)?;
            if let Some(d) = dump.order {
                for r in &dump.evaluations {
                    writeln!(out, "  at z^{} (z of order {d}): {}", r.k, r.value)?;
                }
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Failure::Usage("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = match &cli.command {
        Command::Enumerate(a) => enumerate_cmd(a, cli, &mut *out),
        Command::Verify(a) => verify_cmd(a, cli, &mut *out),
        Command::Poly(a) => poly_cmd(a, cli, &mut *out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
