//! Command-line front end.
//!
//! Results go to stdout. Lines meant for scripts start with a tag (`#RESULT`,
//! `#CERT`, `#VIOLATION`, `#WITNESS`, `#PASS`, `#FAIL`); the rest is prose.
//! Timings go to stderr so stdout is identical for any `--jobs`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fs;
use std::io::{self, BufRead, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::bounds::bound_table;
use crate::constructions::{Family, FamilySpec};
use crate::enumerate::levels;
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::mp::{mp, mp_oracle, mp_witness, ORACLE_MAX_VERTICES};
use crate::saturation::{is_k_saturated, is_saturated, k_saturated_fast, saturated_fast};
use crate::search::h_search_with_jobs;
use crate::verify::{verify, Verifier};

/// Source tag for table values produced by exhaustive search.
pub const EXPLORATORY_TAG: &str = "computed(exploratory)";

/// Largest `n` searched by `table --no-known-k`.
pub const EXPLORATORY_MAX_N: usize = 9;

#[derive(Parser, Debug)]
#[command(name = "dmpsat", version, about = "Degree-monotone path saturation toolkit")]
pub struct Cli {
    /// Print timings and progress to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Longest degree-monotone path of each input graph.
    Mp(InputArgs),
    /// Saturation report for each input graph.
    Saturated(SaturatedArgs),
    /// Exhaustive minimum edge count of a k-saturated graph on n vertices.
    SearchH(SearchArgs),
    /// Emit a construction as graph6.
    Construct(ConstructArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Compare the solver with the brute-force oracle on all small graphs.
    OracleCheck(OracleArgs),
    /// Bound table as TSV.
    Table(TableArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// graph6 string, file with one graph6 per line, or `-` for stdin.
    pub input: String,
}

#[derive(Args, Debug)]
pub struct SaturatedArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Test k-saturation instead of plain saturation.
    #[arg(long)]
    pub k: Option<usize>,
    /// Stop at the first failing non-edge and skip certificates.
    #[arg(long)]
    pub fast: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Write certificates here, one graph6 per line.
    #[arg(long)]
    pub certs: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// One of: star, matching, matching-p3, triangles, k4-e, bowtie, k5-e,
    /// complete, path, cycle, p3xkt, g-counterexample, h4-extremal, five-sat-mix.
    pub family: String,
    /// Clique size for p3xkt.
    #[arg(long, conflicts_with = "n")]
    pub t: Option<usize>,
    /// Size parameter for the other families.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub copies: usize,
    /// Cone each copy before taking the disjoint union.
    #[arg(long)]
    pub cone: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Verifier id, or `all`.
    pub id: String,
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Inclusive, e.g. `4..8`.
    #[arg(long, value_parser = parse_range)]
    pub k_range: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    pub n_range: RangeInclusive<usize>,
    /// Fill the `computed` column by exhaustive search where no exact value
    /// is known (n <= 9).
    #[arg(long)]
    pub no_known_k: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Lib(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

type Out<'a> = &'a mut dyn Write;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: Out, stderr: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(&cli, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn BufRead, out: Out, err: Out) -> Result<i32, CliError> {
    let start = Instant::now();
    let code = match &cli.command {
        Command::Mp(a) => cmd_mp(&read_input(&a.input, stdin)?, out)?,
        Command::Saturated(a) => cmd_saturated(a, &read_input(&a.input.input, stdin)?, out)?,
        Command::SearchH(a) => cmd_search(a, out, err)?,
        Command::Construct(a) => cmd_construct(a, out)?,
        Command::Verify(a) => cmd_verify(a, out)?,
        Command::OracleCheck(a) => cmd_oracle(a, out)?,
        Command::Table(a) => cmd_table(a, out)?,
    };
    out.flush()?;
    if cli.verbose {
        writeln!(err, "elapsed {:.3}s", start.elapsed().as_secs_f64())?;
    }
    Ok(code)
}

fn read_input(arg: &str, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, CliError> {
    let text = if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else if Path::new(arg).is_file() {
        fs::read_to_string(arg)?
    } else {
        arg.to_string()
    };
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(graph6::decode)
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(CliError::Usage(format!("no graphs in input `{arg}`")));
    }
    Ok(graphs)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_mp(graphs: &[Graph], out: Out) -> Result<i32, CliError> {
    for g in graphs {
        let w = mp_witness(g);
        writeln!(out, "{}", w.len())?;
        writeln!(
            out,
            "#RESULT graph={} mp={} witness={} degrees={}",
            graph6::encode(g),
            w.len(),
            join(w.vertices()),
            join(w.degrees())
        )?;
    }
    Ok(0)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_saturated(a: &SaturatedArgs, graphs: &[Graph], out: Out) -> Result<i32, CliError> {
    if let Some(k) = a.k {
        if k < 2 {
            return Err(CliError::Usage(format!("--k must be at least 2, got {k}")));
        }
    }
    for g in graphs {
        let g6 = graph6::encode(g);
        if a.fast {
            let holds = match a.k {
                Some(k) => k_saturated_fast(g, k),
                None => saturated_fast(g),
            };
            let what = a.k.map_or("saturated".to_string(), |k| format!("{k}-saturated"));
            writeln!(out, "{g6}: {what} {}", yes(holds))?;
            match a.k {
                Some(k) => writeln!(out, "#RESULT graph={g6} k={k} k_saturated={holds}")?,
                None => writeln!(out, "#RESULT graph={g6} saturated={holds}")?,
            }
            continue;
        }
        let r = match a.k {
            Some(k) => is_k_saturated(g, k),
            None => is_saturated(g),
        };
        writeln!(out, "graph {g6}: {} vertices, {} edges, mp {}", g.n(), g.edge_count(), r.mp_value)?;
        writeln!(out, "saturated: {}", yes(r.saturated))?;
        if let (Some(k), Some(ks)) = (r.k, r.k_saturated) {
            writeln!(out, "{k}-saturated: {}", yes(ks))?;
        }
        let mut line = format!("#RESULT graph={g6} mp={} saturated={}", r.mp_value, r.saturated);
        if let (Some(k), Some(ks)) = (r.k, r.k_saturated) {
            line += &format!(" k={k} k_saturated={ks}");
        }
        writeln!(out, "{line} violations={}", r.violations.len())?;
        for v in &r.violations {
            let (x, y) = v.non_edge;
            writeln!(out, "#VIOLATION edge={x},{y} mp_after={}", v.mp_after)?;
        }
        for ((x, y), p) in &r.witnesses {
            writeln!(out, "#WITNESS edge={x},{y} mp_after={} path={}", p.len(), join(p.vertices()))?;
        }
    }
    Ok(0)
}

fn cmd_search(a: &SearchArgs, out: Out, err: Out) -> Result<i32, CliError> {
    let r = h_search_with_jobs(a.n, a.k, a.jobs)?;
    let certs = r.certificate_graph6();
    match r.h_value {
        Some(h) => writeln!(out, "{h}")?,
        None => writeln!(out, "none")?,
    }
    writeln!(
        out,
        "#RESULT n={} k={} h={} certificates={} classes={}",
        r.n,
        r.k,
        r.h_value.map_or("none".to_string(), |h| h.to_string()),
        certs.len(),
        r.classes_examined
    )?;
    for c in &certs {
        writeln!(out, "#CERT {c}")?;
    }
    if let Some(path) = &a.certs {
        let mut body = certs.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        fs::write(path, body)?;
    }
    writeln!(err, "search-h n={} k={} took {:.3}s", a.n, a.k, r.elapsed.as_secs_f64())?;
    Ok(0)
}

fn cmd_construct(a: &ConstructArgs, out: Out) -> Result<i32, CliError> {
    let family: Family = a.family.parse()?;
    let param = a.t.or(a.n);
    if family == Family::P3BoxKt && a.n.is_some() {
        return Err(CliError::Usage("p3xkt takes --t, not --n".into()));
    }
    if family != Family::P3BoxKt && a.t.is_some() {
        return Err(CliError::Usage(format!("{family} takes --n, not --t")));
    }
    if !family.takes_param() && param.is_some() {
        return Err(CliError::Usage(format!("{family} takes no size parameter")));
    }
    let spec = FamilySpec {
        family,
        param,
        cone: a.cone,
        copies: a.copies,
    };
    writeln!(out, "{}", graph6::encode(&spec.build()?))?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, out: Out) -> Result<i32, CliError> {
    let targets: Vec<Verifier> = if a.id == "all" {
        Verifier::ALL.to_vec()
    } else {
        vec![a.id.parse()?]
    };
    let mut failed = 0;
    for v in targets {
        let r = verify(v, a.max_n)?;
        if r.passed() {
            writeln!(out, "#PASS {v} checked={}", r.checked)?;
        } else {
            failed += 1;
            writeln!(out, "#FAIL {v} checked={} counterexamples={}", r.checked, r.counterexamples.len())?;
            for c in &r.counterexamples {
                writeln!(out, "#FAIL {v} {} {}", c.graph6, c.detail)?;
            }
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_oracle(a: &OracleArgs, out: Out) -> Result<i32, CliError> {
    if a.max_n == 0 || a.max_n > ORACLE_MAX_VERTICES {
        return Err(Error::VertexCount {
            n: a.max_n,
            min: 1,
            max: ORACLE_MAX_VERTICES,
        }
        .into());
    }
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=a.max_n {
        for (_, level) in levels(n)? {
            total += level.len();
            let mismatches: Vec<(Graph, usize, usize)> = level
                .par_iter()
                .filter_map(|f| {
                    let g = f.to_graph();
                    let (fast, slow) = (mp(&g), mp_oracle(&g).expect("n within oracle limit"));
                    (fast != slow).then_some((g, fast, slow))
                })
                .collect();
            bad.extend(mismatches);
        }
    }
    for (g, fast, slow) in &bad {
        writeln!(out, "#FAIL {} mp={fast} oracle={slow}", graph6::encode(g))?;
    }
    writeln!(out, "#RESULT oracle-check max_n={} graphs={total} mismatches={}", a.max_n, bad.len())?;
    Ok(if bad.is_empty() { 0 } else { 1 })
}

fn cmd_table(a: &TableArgs, out: Out) -> Result<i32, CliError> {
    let mut table = bound_table(a.n_range.clone(), a.k_range.clone())?;
    if a.no_known_k {
        for row in table.rows.iter_mut() {
            if row.exact.is_none() && row.n <= EXPLORATORY_MAX_N {
                row.computed = h_search_with_jobs(row.n, row.k, a.jobs)?.h_value;
                row.sources.push(EXPLORATORY_TAG);
            }
        }
    }
    write!(out, "{}", table.to_tsv())?;
    Ok(0)
}
