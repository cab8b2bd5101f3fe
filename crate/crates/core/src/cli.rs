//! Command-line driver. Output is deterministic: every listing is sorted.
//!
//! Exit codes: 0 success, 1 failed invariant, 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::burnside::{idempotents, BurnsideElement, GroupLevel};
use crate::classifying::{
    bgs1_presentation, bsigma2_consistency, collapse, fixed_point_data, gm_assemble, torus_check_su2, torus_check_u,
    Space, WeylModel,
};
use crate::compare::{compare_methods, StemMethods};
use crate::error::Error;
use crate::graded::GradedTable;
use crate::rolattice::parse_degree;
use crate::scalar;
use crate::selftest::{self, Status};
use crate::stems::{self, decode, point_presentation, StemMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lie {
    Um,
    Su2,
}

#[derive(Debug, Parser)]
#[command(name = "ratmackey", about = "Exact rational C_{2^n}-equivariant computations", version)]
pub struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report to PATH instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct LevelArg {
    /// The group is C_{2^n}.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
    /// Degree bound for Poincaré series.
    #[arg(long, default_value_t = 20)]
    pub maxdeg: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The RO(G)-graded stem H^G_V of a point.
    Stems {
        #[arg(long)]
        n: usize,
        /// Degree expression, e.g. "2 - l0" or "1 - sigma".
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        #[arg(long, default_value = "closed")]
        method: StemMethod,
    },
    /// Integer-graded homology of the representation sphere S^V.
    Sphere {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
    },
    /// Generators of the point ring, grouped in families.
    PointPresentation(LevelArg),
    /// Orbit basis, marks and idempotents of A_Q(C_{2^level}).
    Burnside {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        level: Option<usize>,
    },
    /// H^*_G(B_G S^1): ring presentation and graded table.
    Bgs1(TableArgs),
    /// H^*_G(B_G Sigma_2) from its fixed points.
    Bgsigma2(TableArgs),
    /// H^*_G(B_G U(m)) from its fixed points.
    Bgu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        maxdeg: usize,
    },
    /// Compare a classifying space with its maximal torus.
    TorusCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        lie: Lie,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        maxdeg: usize,
        /// Weyl action on the torus fixed points (su2 only).
        #[arg(long, default_value = "paper")]
        weyl: WeylModel,
    },
    /// Side-by-side computations that should agree.
    Consistency {
        #[command(subcommand)]
        which: Consistency,
    },
    /// Run all three stem methods over a box of degrees.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Orthogonal idempotents versus a single generator.
    Collapse {
        #[arg(long)]
        s: usize,
    },
    /// Run the invariant suite.
    Selftest {
        /// Smaller parameter ranges.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Consistency {
    /// B_G Sigma_2: fixed points versus the quotient of B_G S^1 by w.
    Bsigma2(TableArgs),
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Invariant(e.to_string())
        }
    }
}

type CmdResult = std::result::Result<Report, Failure>;

/// Text and records for one invocation; `ok == false` means exit 1.
struct Report {
    text: String,
    records: Vec<serde_json::Value>,
    ok: bool,
}

impl Report {
    fn new(text: String, records: Vec<serde_json::Value>) -> Self {
        Report { text, records, ok: true }
    }
}

fn record<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("records serialize")
}

fn need_n(n: usize) -> std::result::Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn dims_text(dims: &[u64]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

fn table_text(table: &GradedTable, lo: i64, hi: i64) -> String {
    let mut out = format!("{:>6}  {:<20} {}\n", "degree", "dims h=0..n", "class");
    for k in lo..=hi {
        let c = table.get(k);
        let _ = writeln!(out, "{:>6}  {:<20} {}", k, dims_text(&c.level_dims()), c);
    }
    out
}

fn table_records(table: &GradedTable, lo: i64, hi: i64) -> Vec<serde_json::Value> {
    table.records(lo, hi).iter().map(record).collect()
}

fn cmd_stems(n: usize, degree: &str, method: StemMethod) -> CmdResult {
    need_n(n)?;
    let v = parse_degree(n, degree)?;
    let class = stems::stem_by(method, &v)?;
    let mut text = format!("{class}\n");
    let dec = decode(&v);
    if !dec.is_unique() {
        let tuples: Vec<String> = dec.tuples.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(text, "note: {} admissible tuples share degree {}: {}; the stem is their sum", tuples.len(), v, tuples.join(", "));
    }
    let rec = json!({
        "n": n,
        "degree": v.to_text(),
        "method": format!("{method:?}").to_lowercase(),
        "mackey_class": class.to_text(),
        "level_dims": class.level_dims(),
        "tuples": dec.tuples.len(),
    });
    Ok(Report::new(text, vec![rec]))
}

fn cmd_sphere(n: usize, rep: &str) -> CmdResult {
    need_n(n)?;
    let v = parse_degree(n, rep)?;
    let t = stems::sphere_homology(&v)?;
    let (lo, hi) = match (t.degrees().next(), t.degrees().last()) {
        (Some(a), Some(b)) => (a, b),
        _ => (0, 0),
    };
    let text = format!("reduced homology of S^({v}):\n{}", table_text(&t, lo, hi));
    Ok(Report::new(text, table_records(&t, lo, hi)))
}

fn cmd_point_presentation(n: usize) -> CmdResult {
    need_n(n)?;
    let p = point_presentation(n);
    let records = p.generators().map(|g| json!({
        "name": g.name,
        "level": g.level,
        "degree": g.degree.to_text(),
        "spans": g.spans.to_string(),
    }));
    Ok(Report::new(p.to_text(), records.collect()))
}

fn cmd_burnside(n: usize, level: Option<usize>) -> CmdResult {
    need_n(n)?;
    let lv = GroupLevel::new(n, level.unwrap_or(n))?;
    let mut text = format!("A_Q({lv}) orbit basis 1, x[{i},0..{i}]\n", i = lv.i);
    let _ = writeln!(text, "marks (subgroup levels 0..={}):", lv.i);
    let mut records = Vec::new();
    for j in (0..=lv.i).rev() {
        let x = BurnsideElement::orbit(lv, j);
        let marks: Vec<String> = x.marks().iter().map(scalar::format).collect();
        let _ = writeln!(text, "  {:<10} {}", x.to_text(), marks.join(" "));
    }
    let _ = writeln!(text, "primitive idempotents:");
    for (h, e) in idempotents(lv).iter().enumerate() {
        let _ = writeln!(text, "  e_{h} = {e}");
        records.push(json!({ "name": format!("e_{h}"), "element": e.to_record() }));
    }
    let y = BurnsideElement::y(lv);
    let _ = writeln!(text, "y_{} = {}", lv.i, y);
    if lv.i > 0 {
        let _ = writeln!(text, "Res(y_{}) = {}", lv.i, y.res(lv.i - 1)?);
    }
    records.push(json!({ "name": format!("y_{}", lv.i), "element": y.to_record() }));
    Ok(Report::new(text, records))
}

fn cmd_bgs1(n: usize, maxdeg: usize) -> CmdResult {
    need_n(n)?;
    let p = bgs1_presentation(n)?;
    let table = p.table(maxdeg);
    let gm = gm_assemble(&fixed_point_data(Space::BS1, n, maxdeg)?)?;
    let agree = gm == table;
    let mut text = p.to_text();
    text.push_str(&table_text(&table, 0, maxdeg as i64));
    let _ = writeln!(text, "fixed-point assembly agrees: {}", if agree { "yes" } else { "NO" });
    let _ = writeln!(text, "top-level Poincare series: {}", table.poincare_series(n, maxdeg));
    let mut r = Report::new(text, table_records(&table, 0, maxdeg as i64));
    r.ok = agree && p.unit_decomposes;
    Ok(r)
}

fn cmd_space(space: Space, n: usize, maxdeg: usize) -> CmdResult {
    need_n(n)?;
    let diag = fixed_point_data(space, n, maxdeg)?;
    let table = gm_assemble(&diag)?;
    let mut text = format!("H^*_G({space}), n={n}\ncomponents per level: ");
    text.push_str(&dims_text(&diag.levels.iter().map(|l| l.components.len() as u64).collect::<Vec<_>>()));
    text.push('\n');
    text.push_str(&table_text(&table, 0, maxdeg as i64));
    let _ = writeln!(text, "top-level Poincare series: {}", table.poincare_series(n, maxdeg));
    Ok(Report::new(text, table_records(&table, 0, maxdeg as i64)))
}

fn cmd_torus(n: usize, lie: Lie, m: usize, maxdeg: usize, weyl: WeylModel) -> CmdResult {
    need_n(n)?;
    match lie {
        Lie::Su2 => {
            let r = torus_check_su2(n, weyl)?;
            Ok(Report::new(format!("{}\n", r.to_text()), vec![record(&r)]))
        }
        Lie::Um => {
            if m == 0 {
                return Err(Failure::Usage("--m must be at least 1".into()));
            }
            let r = torus_check_u(n, m, maxdeg)?;
            let mut rep = Report::new(r.to_text(), r.levels.iter().map(record).collect());
            rep.ok = r.passes();
            Ok(rep)
        }
    }
}

fn cmd_bsigma2(n: usize, maxdeg: usize) -> CmdResult {
    need_n(n)?;
    let r = bsigma2_consistency(n, maxdeg)?;
    let mut records = Vec::new();
    for k in 0..=maxdeg {
        for h in 0..=n {
            records.push(json!({
                "degree": k,
                "level": h,
                "fixed_points": r.fixed_points.get(k as i64).level_dim(h),
                "quotient": r.quotient.get(k as i64).level_dim(h),
            }));
        }
    }
    Ok(Report::new(r.to_text(), records))
}

fn cmd_compare(n: usize, bound: i64) -> CmdResult {
    need_n(n)?;
    if bound < 0 {
        return Err(Failure::Usage("--bound must be nonnegative".into()));
    }
    let r = compare_methods(n, bound, &StemMethods::default());
    let mut rep = Report::new(r.to_text(), r.disagreements.iter().map(record).collect());
    rep.ok = r.is_empty();
    Ok(rep)
}

fn cmd_collapse(s: usize) -> CmdResult {
    if s == 0 {
        return Err(Failure::Usage("--s must be at least 1".into()));
    }
    let c = collapse(s);
    Ok(Report::new(c.to_text(), vec![record(&c.to_record())]))
}

fn cmd_selftest(quick: bool) -> CmdResult {
    let checks = selftest::run_all(quick);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{c}");
    }
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    let _ = writeln!(text, "{} checks, {failed} failed", checks.len());
    let records = checks
        .iter()
        .map(|c| json!({ "check": c.name, "status": format!("{:?}", c.status).to_lowercase(), "detail": c.detail }))
        .collect();
    let mut rep = Report::new(text, records);
    rep.ok = selftest::all_passed(&checks);
    Ok(rep)
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Stems { n, degree, method } => cmd_stems(*n, degree, *method),
        Command::Sphere { n, rep } => cmd_sphere(*n, rep),
        Command::PointPresentation(a) => cmd_point_presentation(a.n),
        Command::Burnside { n, level } => cmd_burnside(*n, *level),
        Command::Bgs1(a) => cmd_bgs1(a.n, a.maxdeg),
        Command::Bgsigma2(a) => cmd_space(Space::BSigma2, a.n, a.maxdeg),
        Command::Bgu { n, m, maxdeg } => {
            if *m == 0 {
                return Err(Failure::Usage("--m must be at least 1".into()));
            }
            cmd_space(Space::BU(*m), *n, *maxdeg)
        }
        Command::TorusCheck { n, lie, m, maxdeg, weyl } => cmd_torus(*n, *lie, *m, *maxdeg, *weyl),
        Command::Consistency { which: Consistency::Bsigma2(a) } => cmd_bsigma2(a.n, a.maxdeg),
        Command::Compare { n, bound } => cmd_compare(*n, *bound),
        Command::Collapse { s } => cmd_collapse(*s),
        Command::Selftest { quick } => cmd_selftest(*quick),
    }
}

/// Runs one invocation without touching the process streams. `args`
/// excludes the program name.
pub fn execute<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("ratmackey")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: msg, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    let (code, body, stderr) = match dispatch(&cli.command) {
        Ok(rep) => {
            let body = match cli.format {
                Format::Text => rep.text,
                Format::Records => rep.records.iter().map(|r| format!("{r}\n")).collect(),
            };
            let code = if rep.ok { 0 } else { 1 };
            let err = if rep.ok { String::new() } else { "invariant check failed\n".to_string() };
            (code, body, err)
        }
        Err(Failure::Usage(m)) => (2, String::new(), format!("error: {m}\n")),
        Err(Failure::Invariant(m)) => (1, String::new(), format!("error: {m}\n")),
    };
    match &cli.out {
        Some(path) if !body.is_empty() => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: format!("{stderr}wrote {}\n", path.display()) },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
        },
        _ => Outcome { code, stdout: body, stderr },
    }
}

/// Entry point for the binary: runs, prints and returns the exit code.
pub fn run() -> i32 {
    let out = execute(std::env::args_os().skip(1));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stems_golden() {
        let o = execute(["stems", "--n", "2", "--degree", "1 - 1*sigma"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "M0- + M1-\n"));
        let o = execute(["stems", "--n", "3", "--degree", "1"]);
        assert_eq!(o.stdout, "0\n");
    }

    #[test]
    fn usage_errors() {
        let o = execute(["stems", "--n", "2", "--degree", "1 + tau"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("line 1, column 5"), "{}", o.stderr);
        assert_eq!(execute(["frobnicate"]).code, 2);
    }
}
