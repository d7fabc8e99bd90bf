//! Command-line front end. [`run`] takes the argument list and output
//! streams and returns the process exit code: 0 on success, 1 when an
//! identity fails or computation paths disagree, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::asym::{
    self, asym_coeff, c_ir, c_ir_explicit, c_ir_recurrence, DirectionVector, ShiftVector,
};
use crate::cache;
use crate::exact::{decimal_approx, parse_rational, to_pq, Rational};
use crate::stirling::{stirling_first, stirling_poly_first, stirling_poly_second, stirling_second};
use crate::values::{self, mzf_rev_stirling, mzsf_rev_stirling, IndexTuple, ValueKind};
use crate::verify::{self, Bounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mzv",
    version,
    about = "Exact multiple zeta values at non-positive integers"
)]
struct Cli {
    /// Emit JSON (rationals as "p/q" strings).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Also show an approximate decimal with N digits.
    #[arg(long, global = true, value_name = "N")]
    decimal: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ValuePath {
    Recurrence,
    Stirling,
    Gregory,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CoeffPath {
    Definition,
    Recurrence,
    Explicit,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StirlingKind {
    #[value(name = "s")]
    First,
    #[value(name = "S")]
    Second,
    #[value(name = "s-poly")]
    FirstPoly,
    #[value(name = "S-poly")]
    SecondPoly,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Value of a multiple zeta (star) function at the point -l.
    Value {
        #[arg(long, value_parser = parse_kind)]
        kind: ValueKind,
        /// Comma-separated l, e.g. 1,1 for the point (-1,-1).
        #[arg(long, value_parser = parse_index)]
        index: IndexTuple,
        #[arg(long, value_enum, default_value = "recurrence")]
        path: ValuePath,
    },
    /// Asymptotic coefficient C^(d)(-l; a), or C_{i,r} with --i.
    Coeff {
        #[arg(long, value_parser = parse_index)]
        index: IndexTuple,
        /// Direction vector, e.g. 1,0 (empty for depth 1).
        #[arg(long, conflicts_with = "i", required_unless_present = "i")]
        d: Option<String>,
        /// Staircase index i of C_{i,r}.
        #[arg(long)]
        i: Option<usize>,
        /// Shift vector, e.g. 1,1/2 (defaults to all ones).
        #[arg(long)]
        a: Option<String>,
        #[arg(long, value_enum, default_value = "definition", requires = "i")]
        path: CoeffPath,
    },
    /// Table of generalized Gregory coefficients G_{m,n}.
    Gregory {
        #[arg(long, num_args = 2, value_names = ["M", "N"], default_values_t = [4u32, 4])]
        max: Vec<u32>,
    },
    /// Stirling numbers or polynomials.
    Stirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Evaluate a polynomial at this rational.
        #[arg(long, value_parser = parse_rat)]
        y: Option<Rational>,
    },
    /// Run identity suites.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        max_r: Option<usize>,
        /// Seed for extra randomized spot checks.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Values of one kind over all tuples up to the given depth and weight.
    Table {
        #[arg(long, value_parser = parse_kind)]
        kind: ValueKind,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
    },
}

fn parse_kind(s: &str) -> Result<ValueKind, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}
fn parse_index(s: &str) -> Result<IndexTuple, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}
fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}
fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        format!(
            "unknown suite {s:?}; expected one of {}",
            Suite::NAMES.join(", ")
        )
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// One line of output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub query: String,
    pub value: RecordValue,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordValue {
    Rational(Rational),
    Text(String),
}

impl RecordValue {
    fn render(&self) -> String {
        match self {
            RecordValue::Rational(r) => to_pq(r, false),
            RecordValue::Text(t) => t.clone(),
        }
    }
}

impl OutputRecord {
    fn rat(query: String, v: Rational, provenance: &str) -> Self {
        OutputRecord {
            query,
            value: RecordValue::Rational(v),
            provenance: provenance.into(),
        }
    }

    fn to_json(&self, decimal: Option<usize>) -> Value {
        let mut o = json!({
            "query": self.query,
            "value": self.value.render(),
            "provenance": self.provenance,
        });
        if let (Some(n), RecordValue::Rational(r)) = (decimal, &self.value) {
            o["decimal_approx"] = json!(decimal_approx(r, n));
        }
        o
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Ctx<'a> {
    fmt: Format,
    decimal: Option<usize>,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn csv_field(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }

    fn emit(&mut self, records: &[OutputRecord], verdict: Option<&str>) -> std::io::Result<()> {
        match self.fmt {
            Format::Json => {
                let mut o = json!({
                    "records": records.iter().map(|r| r.to_json(self.decimal)).collect::<Vec<_>>(),
                });
                if let Some(v) = verdict {
                    o["verdict"] = json!(v);
                }
                writeln!(
                    self.out,
                    "{}",
                    serde_json::to_string_pretty(&o).expect("valid json")
                )
            }
            Format::Csv => {
                let dec = self.decimal.is_some();
                writeln!(
                    self.out,
                    "query,value,provenance{}",
                    if dec { ",decimal_approx" } else { "" }
                )?;
                for r in records {
                    let mut line = format!(
                        "{},{},{}",
                        Self::csv_field(&r.query),
                        Self::csv_field(&r.value.render()),
                        Self::csv_field(&r.provenance)
                    );
                    if let (Some(n), RecordValue::Rational(x)) = (self.decimal, &r.value) {
                        line.push(',');
                        line.push_str(&decimal_approx(x, n));
                    } else if dec {
                        line.push(',');
                    }
                    writeln!(self.out, "{line}")?;
                }
                if let Some(v) = verdict {
                    writeln!(self.out, "verdict,{v},")?;
                }
                Ok(())
            }
            Format::Text => {
                for r in records {
                    let mut line = format!("{} = {}", r.query, r.value.render());
                    if let (Some(n), RecordValue::Rational(x)) = (self.decimal, &r.value) {
                        line.push_str(&format!("  (approx {})", decimal_approx(x, n)));
                    }
                    line.push_str(&format!("  [{}]", r.provenance));
                    writeln!(self.out, "{line}")?;
                }
                if let Some(v) = verdict {
                    writeln!(self.out, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let cache_dir = std::env::var_os(cache::ENV_VAR).map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        match cache::load(dir) {
            Ok((_, bad)) if bad > 0 => {
                let _ = writeln!(err, "warning: skipped {bad} malformed cache lines");
            }
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(err, "warning: cannot read cache in {}: {e}", dir.display());
            }
        }
    }
    let fmt = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let mut ctx = Ctx {
        fmt,
        decimal: cli.decimal,
        out,
    };
    let code = match execute(cli.cmd, &mut ctx) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        // a closed downstream pipe is not an error worth reporting
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    };
    if let Some(dir) = &cache_dir {
        if let Err(e) = cache::save(dir) {
            let _ = writeln!(err, "warning: cannot write cache in {}: {e}", dir.display());
        }
    }
    code
}

fn value_paths(kind: ValueKind, path: ValuePath) -> Result<Vec<ValuePath>, Failure> {
    let available: &[ValuePath] = match kind {
        ValueKind::MzfReverse => &[
            ValuePath::Recurrence,
            ValuePath::Stirling,
            ValuePath::Gregory,
        ],
        ValueKind::MzsfReverse => &[ValuePath::Recurrence, ValuePath::Stirling],
        _ => &[ValuePath::Recurrence],
    };
    if path == ValuePath::All {
        return Ok(available.to_vec());
    }
    if !available.contains(&path) {
        return Err(Failure::Usage(
            format!("path {path:?} is not available for {kind}").to_lowercase(),
        ));
    }
    Ok(vec![path])
}

fn execute(cmd: Cmd, ctx: &mut Ctx<'_>) -> Result<i32, Failure> {
    match cmd {
        Cmd::Value { kind, index, path } => {
            let paths = value_paths(kind, path)?;
            let records: Vec<OutputRecord> = paths
                .iter()
                .map(|p| {
                    let (v, name) = match p {
                        ValuePath::Recurrence => (values::value(kind, &index), "recurrence"),
                        ValuePath::Stirling if kind.is_star() => {
                            (mzsf_rev_stirling(&index), "stirling")
                        }
                        ValuePath::Stirling => (mzf_rev_stirling(&index), "stirling"),
                        _ => (asym::rev_via_gregory(&index), "gregory"),
                    };
                    OutputRecord::rat(format!("{kind}({index})"), v, name)
                })
                .collect();
            let agree = records.windows(2).all(|w| w[0].value == w[1].value);
            let verdict =
                (path == ValuePath::All).then_some(if agree { "AGREE" } else { "DISAGREE" });
            ctx.emit(&records, verdict)?;
            Ok(if agree { EXIT_OK } else { EXIT_FAILURE })
        }
        Cmd::Coeff {
            index,
            d,
            i,
            a,
            path,
        } => {
            let r = index.depth();
            let a = match a {
                Some(s) => s.parse::<ShiftVector>()?,
                None => ShiftVector::ones(r),
            };
            if let Some(d) = d {
                let d: DirectionVector = d.parse()?;
                let v = asym_coeff(&index, &d, &a)?;
                ctx.emit(
                    &[OutputRecord::rat(
                        format!("C^{d}({index}; {a})"),
                        v,
                        "definition",
                    )],
                    None,
                )?;
                return Ok(EXIT_OK);
            }
            let i = i.expect("clap enforces --d or --i");
            let paths = match path {
                CoeffPath::All if r >= 3 && i < r => {
                    vec![
                        CoeffPath::Definition,
                        CoeffPath::Recurrence,
                        CoeffPath::Explicit,
                    ]
                }
                CoeffPath::All => vec![CoeffPath::Definition, CoeffPath::Recurrence],
                p => vec![p],
            };
            let mut records = Vec::new();
            for p in &paths {
                let (v, name) = match p {
                    CoeffPath::Definition => (c_ir(i, &index, &a)?, "definition"),
                    CoeffPath::Recurrence => (c_ir_recurrence(i, &index, &a)?, "recurrence"),
                    _ => (c_ir_explicit(i, &index, &a)?, "explicit"),
                };
                records.push(OutputRecord::rat(
                    format!("C_{{{i},{r}}}({index}; {a})"),
                    v,
                    name,
                ));
            }
            let agree = records.windows(2).all(|w| w[0].value == w[1].value);
            let verdict =
                (path == CoeffPath::All).then_some(if agree { "AGREE" } else { "DISAGREE" });
            ctx.emit(&records, verdict)?;
            Ok(if agree { EXIT_OK } else { EXIT_FAILURE })
        }
        Cmd::Gregory { max } => {
            let (mm, nn) = (max[0], max[1]);
            let table = asym::gregory_table(mm + nn);
            if ctx.fmt == Format::Json {
                let mut records = Vec::new();
                for m in 0..=mm {
                    for n in 0..=nn {
                        records.push(OutputRecord::rat(
                            format!("G({m},{n})"),
                            table.coeff(m, n),
                            "series",
                        ));
                    }
                }
                ctx.emit(&records, None)?;
                return Ok(EXIT_OK);
            }
            let sep = if ctx.fmt == Format::Csv { "," } else { "\t" };
            let mut head = vec!["m\\n".to_string()];
            head.extend((0..=nn).map(|n| n.to_string()));
            writeln!(ctx.out, "{}", head.join(sep))?;
            for m in 0..=mm {
                let mut row = vec![m.to_string()];
                row.extend((0..=nn).map(|n| to_pq(&table.coeff(m, n), false)));
                writeln!(ctx.out, "{}", row.join(sep))?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Stirling { kind, n, m, y } => {
            let (query, value) = match (kind, &y) {
                (StirlingKind::First, _) => (
                    format!("s({n},{m})"),
                    RecordValue::Rational(crate::exact::big(&stirling_first(n, m))),
                ),
                (StirlingKind::Second, _) => (
                    format!("S({n},{m})"),
                    RecordValue::Rational(crate::exact::big(&stirling_second(n, m))),
                ),
                (StirlingKind::FirstPoly, None) => (
                    format!("s({n},{m},Y)"),
                    RecordValue::Text(stirling_poly_first(n, m).to_string()),
                ),
                (StirlingKind::SecondPoly, None) => (
                    format!("S({n},{m},Y)"),
                    RecordValue::Text(stirling_poly_second(n, m).to_string()),
                ),
                (StirlingKind::FirstPoly, Some(y)) => (
                    format!("s({n},{m},{y})"),
                    RecordValue::Rational(stirling_poly_first(n, m).eval(y)),
                ),
                (StirlingKind::SecondPoly, Some(y)) => (
                    format!("S({n},{m},{y})"),
                    RecordValue::Rational(stirling_poly_second(n, m).eval(y)),
                ),
            };
            let rec = OutputRecord {
                query,
                value,
                provenance: "triangle recurrence".into(),
            };
            ctx.emit(&[rec], None)?;
            Ok(EXIT_OK)
        }
        Cmd::Verify {
            suite,
            max_depth,
            max_weight,
            max_r,
            seed,
            samples,
        } => {
            let b = Bounds {
                max_depth,
                max_weight,
                max_r,
                seed,
                samples,
            };
            let reports = verify::run(suite, &b);
            let ok = reports.iter().all(verify::Report::passed);
            let total: usize = reports.iter().map(|r| r.checked).sum();
            match ctx.fmt {
                Format::Json => {
                    let o = json!({
                        "ok": ok,
                        "checked": total,
                        "suites": reports.iter().map(|r| json!({
                            "suite": r.suite.name(),
                            "checked": r.checked,
                            "failures": r.failures,
                            "first_counterexample": r.first_failure,
                        })).collect::<Vec<_>>(),
                    });
                    writeln!(
                        ctx.out,
                        "{}",
                        serde_json::to_string_pretty(&o).expect("valid json")
                    )?;
                }
                Format::Csv => {
                    writeln!(ctx.out, "suite,checked,failures,first_counterexample")?;
                    for r in &reports {
                        let c = r.first_failure.clone().unwrap_or_default();
                        writeln!(
                            ctx.out,
                            "{},{},{},{}",
                            r.suite,
                            r.checked,
                            r.failures,
                            Ctx::csv_field(&c)
                        )?;
                    }
                }
                Format::Text => {
                    for r in &reports {
                        writeln!(ctx.out, "{r}")?;
                    }
                    if ok {
                        writeln!(ctx.out, "{total} identities verified")?;
                    }
                }
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
        }
        Cmd::Table {
            kind,
            max_depth,
            max_weight,
        } => {
            if max_depth == 0 {
                return Err(Failure::Usage("--max-depth must be >= 1".into()));
            }
            let records: Vec<_> = IndexTuple::all_up_to(max_depth, max_weight)
                .into_iter()
                .map(|l| {
                    OutputRecord::rat(
                        format!("{kind}({l})"),
                        values::value(kind, &l),
                        "recurrence",
                    )
                })
                .collect();
            ctx.emit(&records, None)?;
            Ok(EXIT_OK)
        }
    }
}
