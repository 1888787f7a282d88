//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 when everything requested passed, 1 when a verification
//! failed, 2 for bad arguments or configuration.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::FactorBudget;
use crate::gfmatrix::{
    diff_fixture, even_conjecture_evidence, odd_conjecture_evidence, parse_fixture, singer_scan, ConjectureEvidence,
    FixtureMismatch, ScanOptions, SingerReport,
};
use crate::pathtable::{PathTable, DEFAULT_NODE_BUDGET};
use crate::recurrence::{
    default_probe, det_reduced, equivalence_report, row_constant_combinations, EquivalenceReport, Parity,
    RowComboReport,
};
use crate::serde_big::{bigint_str, biguint_str, biguint_str_vec};
use crate::verify::{run_suite, SuiteConfig, SuiteReport};

pub const MAX_M: usize = 64;
pub const MAX_N: usize = 10_000;
pub const MAX_SINGER_N: u32 = 200;
pub const BUDGET_ENV: &str = "LATTICE_TABLE_FACTOR_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "E", alias = "e", alias = "even")]
    E,
    #[value(name = "O", alias = "o", alias = "odd")]
    O,
}

impl From<FamilyArg> for Parity {
    fn from(f: FamilyArg) -> Parity {
        match f {
            FamilyArg::E => Parity::Even,
            FamilyArg::O => Parity::Odd,
        }
    }
}

/// Inclusive range written `a..b`; a single number `a` means `a..a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl std::str::FromStr for NRange {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad range bound {t:?}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if start == 0 || start > end {
            return Err(format!("range {s:?} must satisfy 1 <= a <= b"));
        }
        Ok(NRange { start, end })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lattice-table",
    version,
    about = "Lattice paths in m-row tables: counts, recurrences and Singer-cycle scans"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Lift the built-in size ceilings.
    #[arg(long, global = true)]
    pub no_limits: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Path counts C(x,y) for columns 1..n and the column sums.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Minimal recurrence and the three-polynomial comparison.
    Recurrence {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Run the identity suite.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Node budget for the brute-force path oracle.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        oracle_budget: u64,
        /// Report wall time per check (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Constant linear combinations of the rows.
    Rows {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Number of columns probed; defaults to m + 5.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_probe: Option<u64>,
    },
    /// Order of E_n or O_n over GF(q) for a range of n.
    Singer {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        /// Inclusive range `a..b`.
        #[arg(long)]
        n: NRange,
        /// Pollard-rho iterations per factorization.
        #[arg(long, env = BUDGET_ENV, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        trial_bound: Option<u32>,
        /// Expected verdicts, one `n,verdict` line each.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableColumn {
    pub n: usize,
    #[serde(with = "biguint_str_vec")]
    pub cells: Vec<BigUint>,
    #[serde(with = "biguint_str")]
    pub sum: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub m: usize,
    pub n_max: usize,
    pub columns: Vec<TableColumn>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    #[serde(flatten)]
    pub equivalence: EquivalenceReport,
    /// `det T*_m`
    #[serde(with = "bigint_str")]
    pub det: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingerOutput {
    pub report: SingerReport,
    pub evidence: ConjectureEvidence,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture_mismatches: Option<Vec<FixtureMismatch>>,
}

/// Everything the CLI can print as a structured document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Document {
    Table(TableReport),
    Recurrence(RecurrenceReport),
    Verify(SuiteReport),
    Rows(RowComboReport),
    Singer(SingerOutput),
}

impl Document {
    /// Whether every verification carried by the document passed.
    pub fn passed(&self) -> bool {
        match self {
            Document::Table(_) | Document::Rows(_) => true,
            Document::Recurrence(r) => r.equivalence.all_equal,
            Document::Verify(r) => r.passed,
            Document::Singer(s) => s.fixture_mismatches.as_ref().is_none_or(Vec::is_empty),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json() + "\n",
            Format::Plain => self.plain(),
            Format::Csv => self.csv(),
        }
    }

    fn plain(&self) -> String {
        let mut s = String::new();
        match self {
            Document::Table(t) => {
                let width = t.columns.last().map_or(1, |c| c.sum.to_string().len());
                let line = |label: String, vals: Vec<String>| {
                    let cells: Vec<String> = vals.iter().map(|v| format!("{v:>width$}")).collect();
                    format!("{label:<6}{}\n", cells.join(" "))
                };
                let _ = writeln!(s, "m = {}, columns 1..{}", t.m, t.n_max);
                for y in 0..t.m {
                    s += &line(format!("y={}", y + 1), t.columns.iter().map(|c| c.cells[y].to_string()).collect());
                }
                s += &line("sum".into(), t.columns.iter().map(|c| c.sum.to_string()).collect());
            }
            Document::Recurrence(r) => {
                let e = &r.equivalence;
                let _ = writeln!(s, "m = {}, k = {}", e.m, e.k);
                let _ = writeln!(s, "recurrence:            {}", e.recurrence);
                let _ = writeln!(s, "det(xI - T*):          {}", e.charpoly);
                let _ = writeln!(s, "M_m(k) at Δ = x - 1:   {}", e.multiplier);
                let _ = writeln!(s, "recurrence polynomial: {}", e.recurrence_poly);
                let _ = writeln!(s, "det T*:                {}", r.det);
                let _ = writeln!(s, "all equal:             {}", if e.all_equal { "yes" } else { "NO" });
            }
            Document::Verify(r) => {
                let _ = writeln!(s, "identity suite, m <= {}, n <= {}", r.m_max, r.n_max);
                for c in &r.checks {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    let _ = write!(s, "{status}  {:<24} {:>7} cases", c.name, c.cases);
                    if let Some(ms) = c.elapsed_ms {
                        let _ = write!(s, "  {ms:>6} ms");
                    }
                    if let Some(f) = &c.first_failure {
                        let _ = write!(s, "  {} failed, first: {f}", c.failures);
                    }
                    s.push('\n');
                }
                let _ = writeln!(s, "{}", if r.passed { "all checks passed" } else { "SOME CHECKS FAILED" });
            }
            Document::Rows(r) => {
                let _ = writeln!(s, "m = {}, probed {} columns", r.m, r.verified_up_to);
                let _ = writeln!(s, "nontrivial constant combination: {}", r.exists);
                if r.exists {
                    let _ = writeln!(s, "alphas: {}", join(&r.alphas));
                    let _ = writeln!(s, "constant: {}", r.lambda);
                    let _ = writeln!(s, "matches alternating witness: {}", r.matches_witness);
                }
                let _ =
                    writeln!(s, "solution space dimension {}, antisymmetric part {}", r.solution_dim, r.trivial_dim);
            }
            Document::Singer(o) => {
                let r = &o.report;
                let _ = writeln!(s, "{}_n over GF({}), n = {}..{}", r.family, r.q, r.n_start, r.n_end);
                for e in &r.entries {
                    let _ = write!(s, "{:>4}  {}", e.n, e.verdict.as_str());
                    if let Some(f) = &e.factorization {
                        let _ = write!(s, "{:pad$}  {f}", "", pad = 14 - e.verdict.as_str().len());
                    }
                    if let Some(ms) = e.elapsed_ms {
                        let _ = write!(s, "  ({ms} ms)");
                    }
                    s.push('\n');
                }
                let _ = writeln!(s, "full order at: {}", join(&r.full_order_at()));
                let ev = &o.evidence;
                let _ = writeln!(s, "conjecture: {}", ev.statement);
                let _ = writeln!(s, "  predicted (n >= 2): {}", join(&ev.predicted));
                for (n, v) in &ev.boundary {
                    let _ = writeln!(s, "  boundary n = {n}: {v}");
                }
                if !ev.unknown.is_empty() {
                    let _ = writeln!(s, "  undecided: {}", join(&ev.unknown));
                }
                let _ = writeln!(s, "  consistent: {}", ev.consistent);
                if let Some(ms) = &o.fixture_mismatches {
                    if ms.is_empty() {
                        let _ = writeln!(s, "fixture: all verdicts match");
                    }
                    for mm in ms {
                        let actual = mm.actual.map_or("missing".to_string(), |v| v.to_string());
                        let _ = writeln!(s, "fixture MISMATCH n = {}: expected {}, got {actual}", mm.n, mm.expected);
                    }
                }
            }
        }
        s
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |rec: Vec<String>| w.write_record(rec).expect("in-memory write");
        match self {
            Document::Table(t) => {
                put(std::iter::once("row".to_string()).chain(t.columns.iter().map(|c| c.n.to_string())).collect());
                for y in 0..t.m {
                    put(std::iter::once((y + 1).to_string())
                        .chain(t.columns.iter().map(|c| c.cells[y].to_string()))
                        .collect());
                }
                put(std::iter::once("sum".to_string()).chain(t.columns.iter().map(|c| c.sum.to_string())).collect());
            }
            Document::Recurrence(r) => {
                let e = &r.equivalence;
                put(["m", "k", "recurrence", "charpoly", "multiplier", "recurrence_poly", "det", "all_equal"]
                    .map(String::from)
                    .into());
                put(vec![
                    e.m.to_string(),
                    e.k.to_string(),
                    e.recurrence.to_string(),
                    e.charpoly.clone(),
                    e.multiplier.clone(),
                    e.recurrence_poly.clone(),
                    r.det.to_string(),
                    e.all_equal.to_string(),
                ]);
            }
            Document::Verify(r) => {
                put(["check", "cases", "failures", "passed", "elapsed_ms", "first_failure"].map(String::from).into());
                for c in &r.checks {
                    put(vec![
                        c.name.clone(),
                        c.cases.to_string(),
                        c.failures.to_string(),
                        c.passed().to_string(),
                        c.elapsed_ms.map(|v| v.to_string()).unwrap_or_default(),
                        c.first_failure.clone().unwrap_or_default(),
                    ]);
                }
            }
            Document::Rows(r) => {
                put(["m", "exists", "lambda", "alphas", "solution_dim", "trivial_dim", "matches_witness", "probe"]
                    .map(String::from)
                    .into());
                put(vec![
                    r.m.to_string(),
                    r.exists.to_string(),
                    r.lambda.to_string(),
                    join_with(&r.alphas, " "),
                    r.solution_dim.to_string(),
                    r.trivial_dim.to_string(),
                    r.matches_witness.to_string(),
                    r.verified_up_to.to_string(),
                ]);
            }
            Document::Singer(o) => {
                put(["n", "verdict", "factorization", "complete", "elapsed_ms"].map(String::from).into());
                for e in &o.report.entries {
                    put(vec![
                        e.n.to_string(),
                        e.verdict.to_string(),
                        e.factorization.as_ref().map(|f| f.to_string()).unwrap_or_default(),
                        e.factorization.as_ref().map(|f| f.complete.to_string()).unwrap_or_default(),
                        e.elapsed_ms.map(|v| v.to_string()).unwrap_or_default(),
                    ]);
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    join_with(v, ", ")
}

fn join_with<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn ceiling(value: u64, max: u64, what: &str, no_limits: bool) -> Result<usize> {
    if !no_limits && value > max {
        return Err(Error::Domain(format!("{what} = {value} exceeds the ceiling {max}; pass --no-limits to override")));
    }
    usize::try_from(value).map_err(|_| Error::Domain(format!("{what} = {value} is too large")))
}

/// Computes the document for a parsed command line. Errors are
/// configuration problems (exit code 2).
pub fn execute(cli: &Cli) -> Result<Document> {
    let nl = cli.no_limits;
    match &cli.command {
        Command::Table { m, n } => {
            let m = ceiling(*m, MAX_M as u64, "m", nl)?;
            let n = ceiling(*n, MAX_N as u64, "n", nl)?;
            let table = PathTable::build(m, n)?;
            let columns = (1..=n)
                .map(|x| Ok(TableColumn { n: x, cells: table.column(x)?.to_vec(), sum: table.column_sum(x)? }))
                .collect::<Result<_>>()?;
            Ok(Document::Table(TableReport { m, n_max: n, columns }))
        }
        Command::Recurrence { m } => {
            let m = ceiling(*m, MAX_M as u64, "m", nl)?;
            Ok(Document::Recurrence(RecurrenceReport { equivalence: equivalence_report(m)?, det: det_reduced(m)? }))
        }
        Command::Verify { m_max, n_max, oracle_budget, timings } => {
            let mut cfg = SuiteConfig::new(
                ceiling(*m_max, MAX_M as u64, "m-max", nl)?,
                ceiling(*n_max, MAX_N as u64, "n-max", nl)?,
            );
            cfg.oracle_budget = *oracle_budget;
            cfg.timings = *timings;
            Ok(Document::Verify(run_suite(cfg)))
        }
        Command::Rows { m, n_probe } => {
            let m = ceiling(*m, MAX_M as u64, "m", nl)?;
            let probe = match n_probe {
                Some(p) => ceiling(*p, MAX_N as u64, "n-probe", nl)?,
                None => default_probe(m),
            };
            Ok(Document::Rows(row_constant_combinations(m, probe)?))
        }
        Command::Singer { family, q, n, budget, trial_bound, fixture, timings } => {
            let mut b = FactorBudget::default();
            if let Some(r) = budget {
                b.rho_iterations = *r;
            }
            if let Some(t) = trial_bound {
                b.trial_bound = *t;
            }
            let opts = ScanOptions { budget: b, max_n: if nl { u32::MAX } else { MAX_SINGER_N }, timings: *timings };
            let expected = fixture
                .as_ref()
                .map(|p| {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| Error::Domain(format!("cannot read fixture {}: {e}", p.display())))?;
                    parse_fixture(&text)
                })
                .transpose()?;
            let parity = Parity::from(*family);
            let report = singer_scan(parity, *q, n.start, n.end, opts)?;
            let evidence = match parity {
                Parity::Odd => odd_conjecture_evidence(&report),
                Parity::Even => even_conjecture_evidence(&report),
            };
            let fixture_mismatches = expected.map(|e| diff_fixture(&report, &e));
            Ok(Document::Singer(SingerOutput { report, evidence, fixture_mismatches }))
        }
    }
}

/// Parses `args` (including the program name), writes the rendered output
/// to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_CONFIG
                }
            };
        }
    };
    let doc = match execute(&cli) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_CONFIG;
        }
    };
    if out.write_all(doc.render(cli.format).as_bytes()).is_err() {
        return EXIT_CONFIG;
    }
    if doc.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}
