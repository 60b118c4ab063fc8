//! The `tff` command line.
//!
//! Exit codes: 0 success or a positive answer, 1 a negative answer, 2 a usage
//! or input error, 3 an internal or convergence failure.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use nalgebra::DMatrix;
use serde::Serialize;
use serde_json::json;

use crate::configmat::{count_configs, find_config, render_stages, render_tableaux, ConfigMatrix};
use crate::duality::{
    alpha_reduce, dual_certificate, naimark_dual, recur_strip, spatial_dual, DualKind,
};
use crate::error::Error;
use crate::partition::Partition;
use crate::rational::{parse_rational, ratio, Rational};
use crate::realize::{
    realize_tff, two_projection_sum, verify_tff, MultiplicityFn, ProjectionSet,
    DEFAULT_MAX_RESTARTS, DEFAULT_TOL,
};
use crate::tff::{self, first3_check, k_block_bound, maximal_elements, MaximalTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tff",
    version,
    about = "Tight fusion frame sequences: decide, count, enumerate, realize"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Instance {
    /// Ambient dimension N.
    #[arg(long)]
    dim: usize,
    /// Comma-separated ranks, e.g. 4,2,2,2,1.
    #[arg(long)]
    ranks: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CertificateSource {
    /// Certificate JSON file, or - for standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Use the lexicographically first certificate for these ranks.
    #[arg(long, requires = "dim")]
    ranks: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is the rank sequence a TFF sequence?
    Decide(Instance),
    /// Number of certificates.
    Count(Instance),
    /// The lexicographically first certificate.
    Certificate(Instance),
    /// A certificate drawn as a union of skew tableaux.
    Tableau {
        #[command(flatten)]
        source: CertificateSource,
        #[arg(long)]
        dim: Option<usize>,
        /// Print the union after each block.
        #[arg(long)]
        stages: bool,
    },
    /// Dominance-maximal TFF sequences.
    Maximal {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        alpha: Option<String>,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        dim: Option<usize>,
        /// Every alpha in [1, 2] for N = 1..=max-dim.
        #[arg(long, requires = "max_dim")]
        all: bool,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Every TFF sequence for (alpha, N).
    Enumerate {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        dim: usize,
    },
    /// Sequence-level dualities.
    Dual(DualArgs),
    /// Certificate-level dualities.
    DualConfig {
        #[command(flatten)]
        source: CertificateSource,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, conflicts_with = "naimark", required_unless_present = "naimark")]
        spatial: bool,
        #[arg(long)]
        naimark: bool,
    },
    /// Numerical projections with ΣP_k = αI.
    Realize {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_RESTARTS)]
        max_restarts: usize,
        /// Also write the concatenated basis as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check a projection set against ΣP_k = αI.
    Verify {
        /// Projection set JSON, or - for standard input.
        #[arg(long, conflicts_with = "csv", required_unless_present = "csv")]
        input: Option<PathBuf>,
        /// Concatenated basis matrix as CSV; needs --ranks.
        #[arg(long, requires = "ranks")]
        csv: Option<PathBuf>,
        #[arg(long)]
        ranks: Option<String>,
        /// Defaults to the bound recorded in the input, or M/N for CSV.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Necessary conditions: first-three-ranks bounds and the k-block bound.
    CheckBounds(Instance),
    /// Projections P, Q with a prescribed spectrum of P + Q.
    TwoProj {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        dim: usize,
        /// Eigenvalue:multiplicity pairs, e.g. 3/2:1,1/2:1.
        #[arg(long)]
        spectrum: String,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group = ArgGroup::new("kind").required(true).multiple(false))]
struct DualArgs {
    #[arg(long, group = "kind")]
    spatial: bool,
    #[arg(long, group = "kind")]
    naimark: bool,
    #[arg(long, group = "kind")]
    alpha_reduce: bool,
    #[arg(long, group = "kind")]
    strip: bool,
    #[arg(long)]
    dim: usize,
    /// Required except with --alpha-reduce.
    #[arg(long, required_unless_present = "alpha_reduce")]
    ranks: Option<String>,
    /// Required with --alpha-reduce.
    #[arg(long, required_if_eq("alpha_reduce", "true"))]
    alpha: Option<String>,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConvergenceFailure { .. } => EXIT_FAILURE,
            Error::NotATffSequence { .. } | Error::Degenerate(_) => EXIT_NO,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("bad JSON: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn emit_json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        let text = serde_json::to_string(value).map_err(io::Error::other)?;
        writeln!(self.out, "{text}")
    }
}

/// Caps the global rayon pool at `TFF_THREADS` threads, if set.
fn configure_threads() {
    if let Some(n) = std::env::var("TFF_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a pool may already exist when run is called more than once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    configure_threads();
    let mut io = Io {
        out,
        err,
        json: cli.json,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_ranks(text: &str, err: &mut dyn Write) -> std::result::Result<Partition, Failure> {
    let parts = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("cannot parse ranks {text:?}")))?;
    if parts.is_empty() || parts.contains(&0) {
        return Err(usage(format!(
            "ranks must be positive integers, got {text:?}"
        )));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        let _ = writeln!(
            err,
            "warning: ranks {text} are not decreasing; sorting them"
        );
    }
    Ok(Partition::from_unsorted(parts))
}

fn parse_alpha(text: &str) -> std::result::Result<Rational, Failure> {
    Ok(parse_rational(text)?)
}

fn read_input(path: &PathBuf) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn load_certificate(
    source: &CertificateSource,
    dim: Option<usize>,
    io: &mut Io,
) -> std::result::Result<ConfigMatrix, Failure> {
    if let Some(path) = &source.input {
        return Ok(serde_json::from_str(&read_input(path)?)?);
    }
    let ranks = parse_ranks(source.ranks.as_deref().unwrap_or_default(), io.err)?;
    let dim = dim.ok_or_else(|| usage("--ranks needs --dim"))?;
    find_config(ranks.parts(), dim)?.ok_or_else(|| Failure {
        code: EXIT_NO,
        message: format!("{ranks} is not a TFF sequence in dimension {dim}"),
    })
}

fn dispatch(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::Decide(inst) => decide(inst, io),
        Command::Count(inst) => count(inst, io),
        Command::Certificate(inst) => certificate(inst, io),
        Command::Tableau {
            source,
            dim,
            stages,
        } => tableau(&source, dim, stages, io),
        Command::Maximal {
            alpha,
            dim,
            all,
            max_dim,
        } => maximal(alpha, dim, all, max_dim, io),
        Command::Enumerate { alpha, dim } => enumerate(&alpha, dim, io),
        Command::Dual(args) => dual(args, io),
        Command::DualConfig {
            source,
            dim,
            spatial,
            ..
        } => dual_config(&source, dim, spatial, io),
        Command::Realize {
            instance,
            seed,
            tol,
            max_restarts,
            csv,
        } => realize(instance, seed, tol, max_restarts, csv, io),
        Command::Verify {
            input,
            csv,
            ranks,
            alpha,
            tol,
        } => verify(input, csv, ranks, alpha, tol, io),
        Command::CheckBounds(inst) => check_bounds(inst, io),
        Command::TwoProj {
            p,
            q,
            dim,
            spectrum,
        } => two_proj(p, q, dim, &spectrum, io),
    }
}

fn decide(inst: Instance, io: &mut Io) -> Outcome {
    let ranks = parse_ranks(&inst.ranks, io.err)?;
    let cert = tff::decide_with_certificate(&ranks, inst.dim)?;
    let alpha = ratio(ranks.size(), inst.dim);
    if io.json {
        io.emit_json(&json!({
            "ranks": ranks,
            "dim": inst.dim,
            "alpha": alpha.to_string(),
            "tff": cert.is_some(),
            "certificate": cert,
        }))?;
    } else if let Some(a) = &cert {
        writeln!(
            io.out,
            "yes: {ranks} is a TFF sequence in dimension {} (alpha = {alpha})",
            inst.dim
        )?;
        writeln!(io.out, "certificate:")?;
        write!(io.out, "{a}")?;
    } else {
        writeln!(
            io.out,
            "no: {ranks} is not a TFF sequence in dimension {} (alpha = {alpha})",
            inst.dim
        )?;
    }
    Ok(if cert.is_some() { EXIT_OK } else { EXIT_NO })
}

fn count(inst: Instance, io: &mut Io) -> Outcome {
    let ranks = parse_ranks(&inst.ranks, io.err)?;
    let n = count_configs(ranks.parts(), inst.dim)?;
    if io.json {
        io.emit_json(&json!({ "ranks": ranks, "dim": inst.dim, "count": n }))?;
    } else {
        writeln!(io.out, "{n}")?;
    }
    Ok(EXIT_OK)
}

fn certificate(inst: Instance, io: &mut Io) -> Outcome {
    let ranks = parse_ranks(&inst.ranks, io.err)?;
    match find_config(ranks.parts(), inst.dim)? {
        Some(a) => {
            if io.json {
                io.emit_json(&a)?;
            } else {
                write!(io.out, "{a}")?;
            }
            Ok(EXIT_OK)
        }
        None => {
            writeln!(
                io.err,
                "{ranks} is not a TFF sequence in dimension {}",
                inst.dim
            )?;
            Ok(EXIT_NO)
        }
    }
}

fn tableau(source: &CertificateSource, dim: Option<usize>, stages: bool, io: &mut Io) -> Outcome {
    let a = load_certificate(source, dim, io)?;
    let tableaux = if stages {
        render_stages(&a)?
    } else {
        vec![render_tableaux(&a)?]
    };
    let texts: Vec<String> = tableaux.iter().map(|t| t.to_string()).collect();
    if io.json {
        io.emit_json(&texts)?;
    } else {
        writeln!(io.out, "{}", texts.join("\n\n"))?;
    }
    Ok(EXIT_OK)
}

fn format_list(seqs: &[Partition]) -> String {
    seqs.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn maximal(
    alpha: Option<String>,
    dim: Option<usize>,
    all: bool,
    max_dim: Option<usize>,
    io: &mut Io,
) -> Outcome {
    let tables = if all {
        tff::maximal_tables(max_dim.ok_or_else(|| usage("--all needs --max-dim"))?)?
    } else {
        let alpha = parse_alpha(alpha.as_deref().ok_or_else(|| usage("missing --alpha"))?)?;
        let dim = dim.ok_or_else(|| usage("missing --dim"))?;
        vec![MaximalTable {
            alpha,
            dim,
            maximal: maximal_elements(alpha, dim)?,
        }]
    };
    if io.json {
        if all {
            io.emit_json(&tables)?;
        } else {
            io.emit_json(&tables[0])?;
        }
    } else {
        for t in &tables {
            writeln!(
                io.out,
                "N = {}, alpha = {}: {}",
                t.dim,
                t.alpha,
                format_list(&t.maximal)
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn enumerate(alpha: &str, dim: usize, io: &mut Io) -> Outcome {
    let alpha = parse_alpha(alpha)?;
    let sequences = tff::enumerate_tff(alpha, dim)?;
    if io.json {
        io.emit_json(&tff::Enumeration {
            alpha,
            dim,
            sequences,
        })?;
    } else {
        for s in &sequences {
            writeln!(io.out, "{s}")?;
        }
    }
    Ok(EXIT_OK)
}

fn dual(args: DualArgs, io: &mut Io) -> Outcome {
    if args.alpha_reduce {
        let alpha = parse_alpha(
            args.alpha
                .as_deref()
                .ok_or_else(|| usage("--alpha-reduce needs --alpha"))?,
        )?;
        let (reduced, dim) = alpha_reduce(alpha, args.dim)?;
        if io.json {
            io.emit_json(&json!({ "alpha": reduced.to_string(), "dim": dim }))?;
        } else {
            writeln!(io.out, "alpha = {reduced}, N = {dim}")?;
        }
        return Ok(EXIT_OK);
    }
    let ranks = parse_ranks(args.ranks.as_deref().unwrap_or_default(), io.err)?;
    let (kind, result) = if args.spatial {
        ("spatial", spatial_dual(&ranks, args.dim))
    } else if args.naimark {
        ("naimark", naimark_dual(&ranks, args.dim))
    } else {
        ("strip", recur_strip(&ranks, args.dim))
    };
    let (dual_ranks, dim) = result?;
    let alpha = ratio(dual_ranks.size(), dim);
    if io.json {
        io.emit_json(&json!({
            "dual": kind,
            "source_ranks": ranks,
            "ranks": dual_ranks,
            "dim": dim,
            "alpha": alpha.to_string(),
        }))?;
    } else {
        writeln!(io.out, "{dual_ranks} in dimension {dim} (alpha = {alpha})")?;
    }
    Ok(EXIT_OK)
}

fn dual_config(
    source: &CertificateSource,
    dim: Option<usize>,
    spatial: bool,
    io: &mut Io,
) -> Outcome {
    let a = load_certificate(source, dim, io)?;
    let kind = if spatial {
        DualKind::Spatial
    } else {
        DualKind::Naimark
    };
    let d = dual_certificate(&a, kind)?;
    if io.json {
        io.emit_json(&d)?;
    } else {
        writeln!(
            io.out,
            "{:?} dual of ranks {:?} in dimension {}:",
            d.dual,
            d.source_ranks,
            a.dim()
        )?;
        write!(io.out, "{}", d.certificate)?;
    }
    Ok(EXIT_OK)
}

fn realize(
    inst: Instance,
    seed: u64,
    tol: f64,
    max_restarts: usize,
    csv: Option<PathBuf>,
    io: &mut Io,
) -> Outcome {
    let ranks = parse_ranks(&inst.ranks, io.err)?;
    let set = realize_tff(&ranks, inst.dim, seed, tol, max_restarts)?;
    if let Some(path) = csv {
        fs::write(&path, set.to_csv()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if io.json {
        io.emit_json(&set)?;
    } else {
        writeln!(io.out, "residual {:e}", set.residual)?;
        write!(io.out, "{}", set.to_csv())?;
    }
    Ok(EXIT_OK)
}

fn parse_csv(text: &str) -> std::result::Result<DMatrix<f64>, Failure> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| usage(format!("bad CSV: {e}")))?;
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || rows.iter().any(|r| r.len() != ncols) {
        return Err(usage("CSV rows must be nonempty and of equal length"));
    }
    Ok(DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]))
}

fn verify(
    input: Option<PathBuf>,
    csv: Option<PathBuf>,
    ranks: Option<String>,
    alpha: Option<String>,
    tol: f64,
    io: &mut Io,
) -> Outcome {
    let set = match (input, csv) {
        (Some(path), _) => serde_json::from_str::<ProjectionSet>(&read_input(&path)?)?,
        (None, Some(path)) => {
            let matrix = parse_csv(&read_input(&path)?)?;
            let ranks = parse_ranks(ranks.as_deref().unwrap_or_default(), io.err)?;
            let alpha = ratio(matrix.ncols(), matrix.nrows());
            ProjectionSet::from_matrix(&matrix, ranks.parts(), alpha)?
        }
        (None, None) => return Err(usage("need --input or --csv")),
    };
    let alpha = match alpha {
        Some(a) => parse_alpha(&a)?,
        None => set.alpha,
    };
    let report = verify_tff(&set, alpha, tol);
    if io.json {
        io.emit_json(&report)?;
    } else {
        writeln!(io.out, "{}", if report.pass { "pass" } else { "fail" })?;
        writeln!(io.out, "sum residual {:e}", report.sum_residual)?;
        for (k, ((o, i), (r, e))) in report
            .orthonormality
            .iter()
            .zip(&report.idempotence)
            .zip(report.numerical_ranks.iter().zip(&report.expected_ranks))
            .enumerate()
        {
            writeln!(
                io.out,
                "block {}: rank {r}/{e}, orthonormality {o:e}, idempotence {i:e}",
                k + 1
            )?;
        }
    }
    Ok(if report.pass { EXIT_OK } else { EXIT_NO })
}

fn check_bounds(inst: Instance, io: &mut Io) -> Outcome {
    let ranks = parse_ranks(&inst.ranks, io.err)?;
    let alpha = ratio(ranks.size(), inst.dim);
    let first3 = match first3_check(ranks.part(0), ranks.part(1), ranks.part(2), alpha, inst.dim) {
        Ok(ok) => Some(ok),
        Err(Error::AlphaOutOfRange(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let k_block = k_block_bound(&ranks, inst.dim, alpha);
    let pass = first3.unwrap_or(true) && k_block;
    if io.json {
        io.emit_json(&json!({
            "ranks": ranks,
            "dim": inst.dim,
            "alpha": alpha.to_string(),
            "first3": first3,
            "k_block": k_block,
            "pass": pass,
        }))?;
    } else {
        let f = match first3 {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "not applicable",
        };
        writeln!(io.out, "first three ranks: {f}")?;
        writeln!(
            io.out,
            "k-block bound: {}",
            if k_block { "pass" } else { "fail" }
        )?;
    }
    Ok(if pass { EXIT_OK } else { EXIT_NO })
}

fn parse_spectrum(text: &str) -> std::result::Result<Vec<(Rational, usize)>, Failure> {
    text.split(',')
        .map(|pair| {
            let (l, m) = pair
                .split_once(':')
                .ok_or_else(|| usage(format!("expected eigenvalue:multiplicity, got {pair:?}")))?;
            let m = m
                .trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad multiplicity in {pair:?}")))?;
            Ok((parse_alpha(l)?, m))
        })
        .collect()
}

fn two_proj(p: usize, q: usize, dim: usize, spectrum: &str, io: &mut Io) -> Outcome {
    let m = MultiplicityFn::new(p, q, dim, parse_spectrum(spectrum)?);
    let (pm, qm) = two_projection_sum(p, q, dim, &m)?;
    let mut eigenvalues: Vec<f64> = (&pm + &qm)
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    let rows = |x: &DMatrix<f64>| -> Vec<Vec<f64>> {
        x.row_iter().map(|r| r.iter().copied().collect()).collect()
    };
    if io.json {
        io.emit_json(&json!({
            "multiplicity": m,
            "p_matrix": rows(&pm),
            "q_matrix": rows(&qm),
            "eigenvalues": eigenvalues,
        }))?;
    } else {
        writeln!(
            io.out,
            "P =\n{pm}Q =\n{qm}eigenvalues of P + Q: {eigenvalues:?}"
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tff").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn definitions_are_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["decide", "--dim", "6", "--ranks", "4,2,2,2,1"]).0,
            EXIT_OK
        );
        assert_eq!(call(&["decide", "--dim", "5", "--ranks", "3,3"]).0, EXIT_NO);
        assert_eq!(call(&["decide", "--dim", "5"]).0, EXIT_USAGE);
        assert_eq!(
            call(&[
                "dual",
                "--dim",
                "4",
                "--ranks",
                "2,1",
                "--spatial",
                "--naimark"
            ])
            .0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["decide", "--dim", "4", "--ranks", "5"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["dual", "--dim", "4", "--ranks", "2,2,2,1", "--spatial"]).0,
            EXIT_OK
        );
        assert_eq!(
            call(&["dual", "--dim", "4", "--ranks", "2,2,2,1"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn unsorted_ranks_warn() {
        let (code, _, err) = call(&["decide", "--dim", "4", "--ranks", "1,2,2,2"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.contains("warning"));
    }

    #[test]
    fn maximal_json() {
        let (code, out, _) = call(&["--json", "maximal", "--alpha", "11/6", "--dim", "6"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["alpha"], "11/6");
        assert_eq!(
            v["maximal"],
            json!([[5, 1, 1, 1, 1, 1, 1], [4, 2, 2, 2, 1], [3, 3, 3, 2]])
        );
    }
}
