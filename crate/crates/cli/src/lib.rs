//! The `pairmds` command line.
//!
//! Exit codes: 0 verified, 1 claim mismatch, 2 usage or input error.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use pairmds::code::{CodeError, CodeSpec};
use pairmds::distance::{self, DistanceError};
use pairmds::families::{FamilyError, FamilyName, FamilySpec};
use pairmds::pairsearch::{
    self, ClassStats, PairDistanceCertificate, PairSearchError, SearchOptions,
};
use pairmds::ConstacyclicCode;
use thiserror::Error;

pub use report::{
    BruteForce, CodeIdentity, FamilyInfo, HammingSection, Mismatch, Report, TableReport, TableRow,
    Timing, Verdicts, SCHEMA,
};

#[derive(Debug, Parser)]
#[command(
    name = "pairmds",
    version,
    about = "Exact Hamming and symbol-pair distances of repeated-root cyclic codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunFlags {
    /// Worker threads for the pair search; 1 runs sequentially [default: available parallelism]
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
    /// Also write the JSON report to PATH ("-" prints it instead of the text report)
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Do not print per-class progress on stderr
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named construction and check its claimed parameters
    Family {
        #[arg(long, value_parser = parse_family)]
        name: FamilyName,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Certify that a code-spec file describes an MDS symbol-pair code with the given d_p
    Verify {
        spec: PathBuf,
        #[arg(long)]
        dp: usize,
        /// Cross-check against full codeword enumeration
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Minimum Hamming distance of a code-spec file
    Dh {
        spec: PathBuf,
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Minimum symbol-pair distance of a code-spec file
    Dp {
        spec: PathBuf,
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Check every construction at a fixed list of primes
    Table {
        /// Only p in {3, 5, 11}
        #[arg(long)]
        quick: bool,
        #[command(flatten)]
        flags: RunFlags,
    },
}

fn parse_family(s: &str) -> Result<FamilyName, String> {
    s.parse().map_err(|e: FamilyError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed code spec {path}: {source}")]
    Spec {
        path: String,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error(transparent)]
    Search(#[from] PairSearchError),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Mismatch,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Mismatch => 1,
        }
    }
}

pub type Out<'a> = &'a mut (dyn Write + Send);

/// Runs one command; returns the process exit code.
pub fn run(cli: Cli, out: Out<'_>, err: Out<'_>) -> i32 {
    match execute(cli.command, out, err) {
        Ok(status) => status.code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: Command, out: Out<'_>, err: Out<'_>) -> Result<Status, CliError> {
    match cmd {
        Command::Family { name, p, flags } => {
            let runner = Runner::new(&flags)?;
            let report = family_report(name, p, &runner, flags.quiet, err)?;
            emit(&report, &flags, out)
        }
        Command::Verify {
            spec,
            dp,
            brute_force,
            flags,
        } => {
            let runner = Runner::new(&flags)?;
            let code = load_spec(&spec)?;
            let report = verify_report(&code, dp, brute_force, &runner, flags.quiet, err)?;
            emit(&report, &flags, out)
        }
        Command::Dh {
            spec,
            brute_force,
            flags,
        } => {
            let code = load_spec(&spec)?;
            let start = Instant::now();
            let (hamming, hamming_us) = timed(|| hamming_section(&code))?;
            let mut report = base_report("dh", &code, hamming);
            report.timing.hamming_us = hamming_us;
            if brute_force {
                let (d, us) = timed(|| distance::dh_bruteforce(&code))?;
                report.brute_force = Some(BruteForce {
                    d_h: Some(d),
                    d_p: None,
                });
                report.timing.brute_force_us = Some(us);
                check(
                    &mut report.mismatches,
                    "d_H (brute force)",
                    report.hamming.d_h,
                    d.finite(),
                );
            }
            report.timing.total_us = micros(start);
            emit(&report, &flags, out)
        }
        Command::Dp {
            spec,
            brute_force,
            flags,
        } => {
            let runner = Runner::new(&flags)?;
            let code = load_spec(&spec)?;
            let start = Instant::now();
            let (hamming, hamming_us) = timed(|| hamming_section(&code))?;
            let mut report = base_report("dp", &code, hamming);
            report.timing.hamming_us = hamming_us;
            let (cert, pair_us) = timed(|| runner.exact(&code, flags.quiet, err))?;
            attach_pair(&mut report, &cert);
            report.timing.pair_us = Some(pair_us);
            if brute_force {
                brute_force_pair(&code, &mut report)?;
            }
            report.timing.total_us = micros(start);
            emit(&report, &flags, out)
        }
        Command::Table { quick, flags } => {
            let runner = Runner::new(&flags)?;
            let rows = if quick { QUICK_ROWS } else { FULL_ROWS };
            let mut table = TableReport {
                schema: SCHEMA,
                rows: Vec::new(),
            };
            for &(name, p) in rows {
                let start = Instant::now();
                let report = family_report(name, p, &runner, flags.quiet, err)?;
                table.rows.push(TableRow {
                    family: name,
                    p,
                    n: report.code.n,
                    k: report.code.k,
                    d_h: report.hamming.d_h,
                    d_p: report.d_p(),
                    pair_mds: report.verdicts.pair_mds,
                    pass: report.mismatches.is_empty() && report.verdicts.pair_mds == Some(true),
                    elapsed_us: micros(start),
                });
            }
            let status = if table.rows.iter().all(|r| r.pass) {
                Status::Verified
            } else {
                Status::Mismatch
            };
            write_output(&table.to_json(), &table.render_text(), &flags, out)?;
            Ok(status)
        }
    }
}

const FULL_ROWS: &[(FamilyName, u64)] = &[
    (FamilyName::Thm1, 3),
    (FamilyName::Thm1, 5),
    (FamilyName::Thm1, 13),
    (FamilyName::Thm2, 11),
    (FamilyName::Thm2, 31),
    (FamilyName::Thm3, 11),
    (FamilyName::Thm3, 31),
];

const QUICK_ROWS: &[(FamilyName, u64)] = &[
    (FamilyName::Thm1, 3),
    (FamilyName::Thm1, 5),
    (FamilyName::Thm2, 11),
    (FamilyName::Thm3, 11),
];

/// Thread configuration for the pair search.
struct Runner {
    pool: Option<rayon::ThreadPool>,
}

impl Runner {
    fn new(flags: &RunFlags) -> Result<Self, CliError> {
        let threads = match flags.threads {
            Some(0) => return Err(CliError::Usage("--threads must be at least 1".into())),
            Some(t) => t,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        let pool = if threads > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()?,
            )
        } else {
            None
        };
        Ok(Self { pool })
    }

    fn options(&self) -> SearchOptions {
        if self.pool.is_some() {
            SearchOptions::parallel()
        } else {
            SearchOptions::sequential()
        }
    }

    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }

    fn exact(
        &self,
        code: &ConstacyclicCode,
        quiet: bool,
        err: Out<'_>,
    ) -> Result<PairDistanceCertificate, PairSearchError> {
        let opts = self.options();
        self.install(|| {
            pairsearch::exact_pair_distance_with(code, opts, |c| progress(quiet, err, c))
        })
    }

    fn verify(
        &self,
        code: &ConstacyclicCode,
        target: usize,
        quiet: bool,
        err: Out<'_>,
    ) -> Result<PairDistanceCertificate, PairSearchError> {
        let opts = self.options();
        self.install(|| {
            pairsearch::verify_mds_pair(code, target, opts, |c| progress(quiet, err, c))
        })
    }
}

fn progress(quiet: bool, err: Out<'_>, c: &ClassStats) {
    if !quiet {
        let verdict = if c.solvable == 0 {
            "excluded"
        } else {
            "codeword found"
        };
        let _ = writeln!(
            err,
            "class w={} r={}: {} patterns, {verdict}",
            c.w, c.r, c.patterns
        );
    }
}

fn family_report(
    name: FamilyName,
    p: u64,
    runner: &Runner,
    quiet: bool,
    err: Out<'_>,
) -> Result<Report, CliError> {
    let spec = FamilySpec::new(name, p)?;
    let start = Instant::now();
    let code = spec.build()?;
    let (hamming, hamming_us) = timed(|| hamming_section(&code))?;
    let mut report = base_report("family", &code, hamming);
    report.family = Some(FamilyInfo {
        name,
        p,
        claimed: spec.claimed,
    });
    report.timing.hamming_us = hamming_us;
    let (cert, pair_us) = timed(|| runner.exact(&code, quiet, err))?;
    attach_pair(&mut report, &cert);
    report.timing.pair_us = Some(pair_us);
    let claimed = spec.claimed;
    let m = &mut report.mismatches;
    check(m, "n", claimed.n, Some(code.n()));
    check(m, "k", claimed.k, Some(code.k()));
    check(m, "d_H", claimed.d_h, Some(cert.d_h));
    check(m, "d_p", claimed.d_p, Some(cert.d_p));
    report.timing.total_us = micros(start);
    Ok(report)
}

fn verify_report(
    code: &ConstacyclicCode,
    target: usize,
    brute_force: bool,
    runner: &Runner,
    quiet: bool,
    err: Out<'_>,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let (hamming, hamming_us) = timed(|| hamming_section(code))?;
    let mut report = base_report("verify", code, hamming);
    report.target_dp = Some(target);
    report.timing.hamming_us = hamming_us;
    let (result, pair_us) = timed(|| Ok::<_, CliError>(runner.verify(code, target, quiet, err)))?;
    match result {
        Ok(cert) => {
            attach_pair(&mut report, &cert);
            report.timing.pair_us = Some(pair_us);
        }
        Err(PairSearchError::DimensionMismatch { k, expected, .. }) => {
            let _ = writeln!(
                err,
                "DimensionMismatch: k = {k}, but n - d_p + 2 = {expected} for d_p = {target}"
            );
            check(&mut report.mismatches, "k", expected, Some(k));
        }
        Err(PairSearchError::TargetMismatch {
            found, certificate, ..
        }) => {
            attach_pair(&mut report, &certificate);
            report.timing.pair_us = Some(pair_us);
            check(&mut report.mismatches, "d_p", target, Some(found));
        }
        Err(PairSearchError::DegenerateCode { k, d_h }) => {
            let _ = writeln!(
                err,
                "cannot certify a degenerate code (k = {k}, d_H = {d_h})"
            );
            check(&mut report.mismatches, "d_H >= 2", 2, Some(d_h));
        }
        Err(e @ PairSearchError::TargetOutOfRange { .. }) => {
            return Err(CliError::Usage(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    }
    if brute_force {
        brute_force_pair(code, &mut report)?;
        let found = report.brute_force.as_ref().and_then(|b| b.d_p);
        if report.pair.is_none() {
            check(
                &mut report.mismatches,
                "d_p (brute force)",
                target,
                found.and_then(|d| d.finite()),
            );
        }
    }
    report.timing.total_us = micros(start);
    Ok(report)
}

/// Adds the enumeration value of `d_p` and flags disagreement with the structured search.
fn brute_force_pair(code: &ConstacyclicCode, report: &mut Report) -> Result<(), CliError> {
    let (d, us) = timed(|| pairsearch::dp_bruteforce(code))?;
    report.brute_force = Some(BruteForce {
        d_h: None,
        d_p: Some(d),
    });
    report.timing.brute_force_us = Some(us);
    if let Some(dp) = report.d_p() {
        check(&mut report.mismatches, "d_p (brute force)", dp, d.finite());
    }
    Ok(())
}

fn check(out: &mut Vec<Mismatch>, quantity: &str, expected: usize, computed: Option<usize>) {
    let computed = computed.unwrap_or(usize::MAX);
    if expected != computed {
        out.push(Mismatch {
            quantity: quantity.to_string(),
            expected,
            computed,
        });
    }
}

fn hamming_section(code: &ConstacyclicCode) -> Result<HammingSection, DistanceError> {
    if code.is_cyclic() && code.e() > 0 {
        let cert = distance::dh_repeated_root(code)?;
        Ok(HammingSection {
            d_h: cert.d_h,
            witness_t: Some(cert.witness_t),
            levels: cert.levels,
        })
    } else {
        Ok(HammingSection {
            d_h: distance::minimum_distance(code)?,
            witness_t: None,
            levels: Vec::new(),
        })
    }
}

fn base_report(command: &str, code: &ConstacyclicCode, hamming: HammingSection) -> Report {
    let verdicts = Verdicts::compute(code.n(), code.k(), hamming.d_h, None);
    Report {
        schema: SCHEMA,
        command: command.to_string(),
        family: None,
        target_dp: None,
        code: CodeIdentity::of(code),
        hamming,
        pair: None,
        brute_force: None,
        verdicts,
        mismatches: Vec::new(),
        timing: Timing::default(),
    }
}

fn attach_pair(report: &mut Report, cert: &PairDistanceCertificate) {
    report.verdicts = Verdicts::compute(cert.n, cert.k, cert.d_h, Some(cert.d_p));
    report.pair = Some(cert.to_json());
}

pub fn load_spec(path: &Path) -> Result<ConstacyclicCode, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let spec: CodeSpec = serde_json::from_str(&text).map_err(|source| CliError::Spec {
        path: path.display().to_string(),
        source,
    })?;
    Ok(spec.build()?)
}

fn emit(report: &Report, flags: &RunFlags, out: Out<'_>) -> Result<Status, CliError> {
    write_output(&report.to_json(), &report.render_text(), flags, out)?;
    Ok(if report.mismatches.is_empty() {
        Status::Verified
    } else {
        Status::Mismatch
    })
}

fn write_output(json: &str, text: &str, flags: &RunFlags, out: Out<'_>) -> Result<(), CliError> {
    let stdout_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    match &flags.json {
        Some(path) if path.as_os_str() == "-" => out.write_all(json.as_bytes()).map_err(stdout_err),
        Some(path) => {
            std::fs::write(path, json).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            out.write_all(text.as_bytes()).map_err(stdout_err)
        }
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn timed<T, E>(f: impl FnOnce() -> Result<T, E>) -> Result<(T, u64), E> {
    let start = Instant::now();
    let value = f()?;
    Ok((value, micros(start)))
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}
