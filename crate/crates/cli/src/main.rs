use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use wilf::asymptotics::{monotone_scan, ratio_series, write_ratio_csv};
use wilf::bfile::{parse_bfile, verify, BFile, BFileError, OEIS_URL};
use wilf::bounds::{
    certificate_terms, n_min, r_max, sample_construction, DivisorTable, LowerBoundParams,
};
use wilf::count::{Algorithm, CountError, DualCounter, Limits, PartitionTable};
use wilf::enumerate::{fixed_points, wilf_partitions};
use wilf::WilfPartition;

/// Exact counting and checking of Wilf partitions (OEIS A098859).
#[derive(Debug, Parser)]
#[command(name = "wilf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print f(n) as "n value" rows.
    Count {
        /// A single n.
        #[arg(long, conflicts_with = "upto", required_unless_present = "upto")]
        n: Option<u64>,
        /// Every n from 0 to this value.
        #[arg(long)]
        upto: Option<u64>,
        /// Also print f(n, r), the count with exactly r terms (needs --n).
        #[arg(long, requires = "n")]
        by_r: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// Stream T(n) as JSON Lines.
    Enumerate {
        #[arg(long)]
        n: u64,
    },
    /// Read partitions as JSON (one per line) and print their images.
    Involution,
    /// Stream the self-dual members of T(n) as JSON Lines.
    FixedPoints {
        #[arg(long)]
        n: u64,
    },
    /// Write the normalized growth ratio as CSV.
    Ratio {
        #[arg(long, default_value_t = 31)]
        from: u64,
        #[arg(long, default_value_t = 508)]
        to: u64,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        engine: Engine,
    },
    /// Look for n with f(n + 1) < f(n).
    Monotone {
        #[arg(long, default_value_t = 500)]
        upto: u64,
        #[command(flatten)]
        engine: Engine,
    },
    /// Term-count bracket and the divisor upper bound for one n.
    Bounds {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        engine: Engine,
    },
    /// Sample the block-reversal construction and report as JSON.
    LowerBound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Recompute a b-file and compare row by row.
    Verify {
        /// b-file to check; the bundled copy when absent.
        #[arg(long, conflicts_with = "fetch")]
        bfile: Option<PathBuf>,
        /// Download the b-file from OEIS instead.
        #[arg(long)]
        fetch: bool,
        /// Last index to check; defaults to the end of the file.
        #[arg(long)]
        upto: Option<u64>,
        #[command(flatten)]
        engine: Engine,
    },
}

#[derive(Debug, Args)]
struct Engine {
    #[arg(long, default_value = "dp")]
    algorithm: Algorithm,
    /// Entry budget for the memo table (dp: stored coefficients).
    #[arg(long)]
    memo_cap: Option<usize>,
    /// Largest n the dual engine accepts.
    #[arg(long)]
    dual_limit: Option<u64>,
    /// Most partitions the brute engine may visit.
    #[arg(long)]
    brute_cap: Option<u64>,
}

impl Engine {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            memo_entries: self.memo_cap.unwrap_or(d.memo_entries),
            dual_max_n: self.dual_limit.unwrap_or(d.dual_max_n),
            brute_yields: self.brute_cap.unwrap_or(d.brute_yields),
        }
    }

    fn counter(&self) -> Box<dyn wilf::WilfCounter> {
        self.algorithm.counter(self.limits())
    }
}

/// Outcome that maps to exit code 1.
#[derive(Debug)]
struct Mismatch;

fn json_line(out: &mut impl Write, w: &WilfPartition) -> Result<()> {
    serde_json::to_writer(&mut *out, w)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn run(cli: Cli) -> Result<Option<Mismatch>> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Count { n, upto, by_r, engine } => {
            let mut counter = engine.counter();
            match (n, upto) {
                (Some(n), _) => {
                    writeln!(out, "{n} {}", counter.count(n)?)?;
                    if by_r {
                        if n == 0 {
                            bail!("--by-r needs n >= 1");
                        }
                        let split = DualCounter::new(engine.limits()).by_r(n)?;
                        for (r, v) in split {
                            writeln!(out, "# r={r} {v}")?;
                        }
                    }
                }
                (None, Some(upto)) => {
                    for (i, v) in counter.count_upto(upto)?.iter().enumerate() {
                        writeln!(out, "{i} {v}")?;
                    }
                }
                (None, None) => unreachable!("clap requires one of --n/--upto"),
            }
        }
        Command::Enumerate { n } => {
            require_positive(n)?;
            for w in wilf_partitions(n) {
                json_line(&mut out, &w)?;
            }
        }
        Command::Involution => {
            for (i, line) in io::stdin().lock().lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let w: WilfPartition = serde_json::from_str(&line)
                    .with_context(|| format!("input line {}", i + 1))?;
                json_line(&mut out, &w.involution())?;
            }
        }
        Command::FixedPoints { n } => {
            require_positive(n)?;
            for w in fixed_points(n) {
                json_line(&mut out, &w)?;
            }
        }
        Command::Ratio { from, to, out: path, engine } => {
            if from == 0 || from > to {
                bail!("need 1 <= --from <= --to");
            }
            let points = ratio_series(from, to, engine.counter().as_mut())?;
            match path {
                Some(p) => {
                    let file = File::create(&p).with_context(|| format!("creating {}", p.display()))?;
                    let mut w = BufWriter::new(file);
                    write_ratio_csv(&points, &mut w)?;
                    w.flush()?;
                }
                None => write_ratio_csv(&points, &mut out)?,
            }
        }
        Command::Monotone { upto, engine } => {
            let violations = monotone_scan(upto, engine.counter().as_mut())?;
            for v in &violations {
                writeln!(out, "violation at n={}: f(n)={} > f(n+1)={}", v.n, v.f_n, v.f_next)?;
            }
            writeln!(out, "{} violations for n <= {upto}", violations.len())?;
            if !violations.is_empty() {
                out.flush()?;
                return Ok(Some(Mismatch));
            }
        }
        Command::Bounds { n, engine } => {
            require_positive(n)?;
            let r = r_max(n);
            let f = engine.counter().count(n)?;
            let divisors = DivisorTable::new(n as usize);
            let terms = certificate_terms(n, &divisors, &PartitionTable::new(n as usize));
            let cert: wilf::BigCount = terms.iter().sum();
            writeln!(out, "r_max {r}")?;
            writeln!(out, "n_min({r}) = {} <= {n} < n_min({}) = {}", n_min(r), r + 1, n_min(r + 1))?;
            writeln!(out, "Dmax {}", divisors.dmax(n as usize))?;
            writeln!(out, "f {f}")?;
            writeln!(out, "cert {cert}")?;
            writeln!(out, "{f} <= {cert}")?;
            if f > cert {
                out.flush()?;
                return Ok(Some(Mismatch));
            }
        }
        Command::LowerBound { n, k, epsilon, samples, seed } => {
            let params = LowerBoundParams::new(n, k, epsilon, seed)?;
            let report = sample_construction(&params, samples)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Command::Verify { bfile, fetch, upto, engine } => {
            let file = load_bfile(bfile, fetch)?;
            let upto = upto.unwrap_or(file.last_index());
            let report = verify(&file, upto, engine.counter().as_mut())?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            if !report.passed() {
                out.flush()?;
                return Ok(Some(Mismatch));
            }
        }
    }
    out.flush()?;
    Ok(None)
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    Ok(())
}

fn load_bfile(path: Option<PathBuf>, fetch: bool) -> Result<BFile> {
    if fetch {
        let text = ureq::get(OEIS_URL)
            .call()
            .and_then(|mut r| r.body_mut().read_to_string())
            .with_context(|| format!("downloading {OEIS_URL}"))?;
        return Ok(parse_bfile(&text, OEIS_URL)?);
    }
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
            Ok(parse_bfile(&text, &p.display().to_string())?)
        }
        None => Ok(wilf::bfile::bundled()),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let count = err
        .downcast_ref::<CountError>()
        .or_else(|| match err.downcast_ref::<BFileError>() {
            Some(BFileError::Count(e)) => Some(e),
            _ => None,
        });
    if count.is_some() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Mismatch)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
