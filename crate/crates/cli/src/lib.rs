//! `halfline` command line.
//!
//! Exit codes: 0 success, 1 a check found a violation (or output could not
//! be written), 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use halfline::cyclicity::{build_block, verify_rhythm, CANONICAL_GROUPS, CANONICAL_PARCELS};
use halfline::geometry::{polar_coordinates, PolarPoint, RayKind};
use halfline::oracle::sieve;
use halfline::plot::{render_cycle_strip, render_rays, write_points_csv, PlotConfig, StripMode};
use halfline::spectrum::{
    aperiodicity_check, candidate_gaps, dominant_share, indicator, power_spectrum, smallest_period,
    write_spectrum_csv,
};
use halfline::twins::{twin_positions, verify_twin_necessity};
use halfline::verify::{check_conclusions, check_density, ray_coverage};
use halfline::{bench, classify, is_prime, Error, WheelClass};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "halfline",
    about = "Mod-30 wheel classification, ray geometry and oracle checks"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Wheel class, decomposition, polar position and primality of one number.
    Classify { n: u64 },
    /// Check the wheel claims against the sieve up to a bound.
    Verify {
        #[arg(long, default_value_t = 1_000_000)]
        max: u64,
    },
    /// Check the parcel and candidate-group rhythms over cycle blocks.
    Rhythm {
        #[arg(long, default_value_t = 1000)]
        blocks: u64,
    },
    /// List twin-candidate positions and mark realized twin primes.
    Twins {
        #[arg(long, default_value_t = 1000)]
        max: u64,
    },
    /// Power spectrum of the prime indicator over candidates.
    Spectrum {
        #[arg(long, default_value_t = 50)]
        start: u64,
        #[arg(long, default_value_t = 4096)]
        count: usize,
        #[arg(long, default_value_t = 512)]
        max_period: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Render a figure as SVG (or the point table as CSV with --kind points).
    Plot {
        #[arg(long, value_enum)]
        kind: PlotKind,
        /// Largest n for rays and points.
        #[arg(long, default_value_t = 3600)]
        max: u64,
        /// First number of a cycle or primes strip.
        #[arg(long, default_value_t = 50)]
        start: u64,
        /// Length of a cycle or primes strip.
        #[arg(long, default_value_t = 60)]
        count: u64,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 800)]
        height: u32,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Time plain sieve, wheel sieve and candidate filter.
    Bench {
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotKind {
    Rays,
    Cycle,
    Primes,
    Points,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Failure::Runtime(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
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
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Classify { n } => cmd_classify(n, json, out),
        Command::Verify { max } => cmd_verify(max, json, out),
        Command::Rhythm { blocks } => cmd_rhythm(blocks, json, out),
        Command::Twins { max } => cmd_twins(max, json, out),
        Command::Spectrum {
            start,
            count,
            max_period,
            output,
        } => cmd_spectrum(start, count, max_period, &output, json, out),
        Command::Plot {
            kind,
            max,
            start,
            count,
            width,
            height,
            output,
        } => {
            let config = PlotConfig {
                max_n: max,
                width_px: width,
                height_px: height,
                ..PlotConfig::default()
            };
            cmd_plot(kind, &config, start, count, &output, json, out)
        }
        Command::Bench { limit } => cmd_bench(limit, json, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_VIOLATION
        }
    }
}

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::other)?;
    writeln!(out)
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))
}

#[derive(Serialize)]
struct ClassifyOutput {
    n: u64,
    class: WheelClass,
    residue30: u64,
    point: PolarPoint,
    ray_kind: RayKind,
    prime: bool,
}

fn cmd_classify(n: u64, json: bool, out: &mut impl Write) -> Outcome {
    let class = classify(n)?;
    let point = polar_coordinates(n);
    let report = ClassifyOutput {
        n,
        class,
        residue30: n % 30,
        point,
        ray_kind: point.kind(),
        prime: is_prime(n),
    };
    if json {
        emit_json(out, &report)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "n          {n}")?;
    writeln!(out, "class      {class}")?;
    match class {
        WheelClass::Candidate { base, multiplier } => writeln!(
            out,
            "wheel      ({n} - {base}) / 30 = {multiplier}, satisfies pn = pn0 + 30n"
        )?,
        WheelClass::SpecialPrime { value } => {
            writeln!(out, "wheel      {value} divides 30; prime outside the wheel")?
        }
        WheelClass::CertainComposite => writeln!(
            out,
            "wheel      does not satisfy pn = pn0 + 30n for any base residue; definitely a composite number"
        )?,
    }
    writeln!(out, "polar      ({:.2}; {:.2})", point.x, point.y)?;
    writeln!(
        out,
        "ray        {} degrees, {}",
        point.ray_degree,
        point.kind().as_str()
    )?;
    let verdict = match (n, report.prime) {
        (1, _) => "neither prime nor composite",
        (_, true) => "prime",
        (_, false) => "composite",
    };
    writeln!(out, "oracle     {verdict}")?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyOutput {
    max: u64,
    conclusions: halfline::verify::ConclusionReport,
    density: halfline::verify::DensityReport,
    rays: halfline::verify::RayCoverage,
    twins: halfline::twins::TwinReport,
    violations: u64,
}

fn cmd_verify(max: u64, json: bool, out: &mut impl Write) -> Outcome {
    let primes = sieve(max.max(2).saturating_add(2))?;
    let conclusions = check_conclusions(max, &primes);
    let windows = max.saturating_sub(29) / 30;
    let density = check_density(windows, &primes);
    let rays = ray_coverage(primes.iter(), max);
    let twins = verify_twin_necessity(max, &primes);
    let violations = (conclusions.necessity_violations.len()
        + conclusions.compositeness_violations.len()
        + density.candidate_violations.len()
        + density.prime_violations.len()
        + rays.hit_thin.len()
        + twins.violations.len()) as u64;
    let code = if violations == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };

    if json {
        emit_json(
            out,
            &VerifyOutput {
                max,
                conclusions,
                density,
                rays,
                twins,
                violations,
            },
        )?;
        return Ok(code);
    }
    writeln!(out, "checked 1..={max} against the sieve")?;
    writeln!(
        out,
        "primes above 5 on the wheel      {} checked, {} violations",
        conclusions.primes_checked,
        conclusions.necessity_violations.len()
    )?;
    writeln!(
        out,
        "certain composites not prime     {} checked, {} violations",
        conclusions.certain_composites,
        conclusions.compositeness_violations.len()
    )?;
    writeln!(
        out,
        "windows of 30 with 8 candidates  {} checked, {} violations, at most {} primes",
        density.windows_checked,
        density.candidate_violations.len() + density.prime_violations.len(),
        density.max_primes_in_window
    )?;
    writeln!(
        out,
        "prime rays                       {} of 96 thick hit, {} thin hit",
        96 - rays.missed_thick.len(),
        rays.hit_thin.len()
    )?;
    writeln!(
        out,
        "twin pairs on formula positions  {} pairs, {} covered, {} exceptions, {} violations",
        twins.pairs_found,
        twins.covered,
        twins.exceptions.len(),
        twins.violations.len()
    )?;
    writeln!(
        out,
        "{}",
        if violations == 0 {
            "OK: zero violations"
        } else {
            "FAIL: violations found"
        }
    )?;
    Ok(code)
}

#[derive(Serialize)]
struct RhythmOutput {
    canonical_parcels: [u32; 8],
    canonical_groups: [u32; 5],
    report: halfline::cyclicity::RhythmReport,
    candidates: u64,
    prime_candidates: u64,
}

fn cmd_rhythm(blocks: u64, json: bool, out: &mut impl Write) -> Outcome {
    let report = verify_rhythm(blocks);
    let mut candidates = 0u64;
    let mut prime_candidates = 0u64;
    for b in 0..report.blocks_checked.min(blocks.saturating_add(1)) {
        let block = build_block(b)?;
        candidates += block.candidates.len() as u64;
        prime_candidates += block.candidates.iter().filter(|&&c| is_prime(c)).count() as u64;
    }
    let code = if report.holds() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    if json {
        emit_json(
            out,
            &RhythmOutput {
                canonical_parcels: CANONICAL_PARCELS,
                canonical_groups: CANONICAL_GROUPS,
                report,
                candidates,
                prime_candidates,
            },
        )?;
        return Ok(code);
    }
    let dashed = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join("-");
    writeln!(out, "composite parcels  {}", dashed(&CANONICAL_PARCELS))?;
    writeln!(out, "candidate groups   {}", dashed(&CANONICAL_GROUPS))?;
    writeln!(
        out,
        "blocks checked     {} (from 50)",
        report.blocks_checked
    )?;
    writeln!(
        out,
        "candidates         {candidates}, of which prime {prime_candidates}"
    )?;
    match &report.first_violation {
        None => writeln!(out, "violations         none")?,
        Some(v) => writeln!(
            out,
            "violation          block {}: parcels {} groups {}",
            v.block_index,
            dashed(&v.parcels),
            dashed(&v.candidate_groups)
        )?,
    }
    Ok(code)
}

#[derive(Serialize)]
struct TwinRow {
    p: u64,
    n: u64,
    k: u64,
    twin_prime: bool,
}

fn cmd_twins(max: u64, json: bool, out: &mut impl Write) -> Outcome {
    let rows: Vec<TwinRow> = twin_positions(max)
        .into_iter()
        .map(|t| TwinRow {
            p: t.p,
            n: t.n,
            k: t.k,
            twin_prime: is_prime(t.p) && is_prime(t.upper()),
        })
        .collect();
    if json {
        emit_json(out, &rows)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{:>12} {:>10} {:>3}  twin prime", "p", "n", "k")?;
    for r in &rows {
        writeln!(
            out,
            "{:>12} {:>10} {:>3}  {}",
            r.p,
            r.n,
            r.k,
            if r.twin_prime { "yes" } else { "no" }
        )?;
    }
    let realized = rows.iter().filter(|r| r.twin_prime).count();
    writeln!(
        out,
        "{} positions, {} realized twin primes",
        rows.len(),
        realized
    )?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SpectrumOutput {
    start: u64,
    count: usize,
    bins: usize,
    zeros: usize,
    dominant_share: f64,
    max_period: usize,
    indicator_period: Option<usize>,
    candidate_gap_period: Option<usize>,
    output: PathBuf,
}

fn cmd_spectrum(
    start: u64,
    count: usize,
    max_period: usize,
    path: &Path,
    json: bool,
    out: &mut impl Write,
) -> Outcome {
    let seq = indicator(start, count, &halfline::MillerRabin)?;
    let bins = power_spectrum(&seq)?;
    let period = aperiodicity_check(&seq, max_period)?;
    let gap_period = smallest_period(&candidate_gaps(start, count), max_period)?;
    let mut file = create(path)?;
    write_spectrum_csv(&bins, &mut file)
        .map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))?;

    let report = SpectrumOutput {
        start,
        count,
        bins: bins.len(),
        zeros: seq.zeros().count(),
        dominant_share: dominant_share(&bins),
        max_period,
        indicator_period: period,
        candidate_gap_period: gap_period,
        output: path.to_path_buf(),
    };
    if json {
        emit_json(out, &report)?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "indicator over {count} candidates from {start}: {} composite",
        report.zeros
    )?;
    writeln!(
        out,
        "largest non-DC bin share  {:.4}",
        report.dominant_share
    )?;
    match period {
        None => writeln!(out, "aperiodic: no exact period <= {max_period}")?,
        Some(p) => writeln!(out, "periodic with period {p}")?,
    }
    match gap_period {
        Some(p) => writeln!(out, "candidate gaps repeat with period {p}")?,
        None => writeln!(out, "candidate gaps show no period <= {max_period}")?,
    }
    writeln!(out, "wrote {} bins to {}", bins.len(), path.display())?;
    Ok(EXIT_OK)
}

fn cmd_plot(
    kind: PlotKind,
    config: &PlotConfig,
    start: u64,
    count: u64,
    path: &Path,
    json: bool,
    out: &mut impl Write,
) -> Outcome {
    let (what, items) = match kind {
        PlotKind::Points => ("points", write_points_csv(config.max_n, path)?),
        PlotKind::Rays => {
            let primes = sieve(config.max_n.max(2))?;
            let svg = render_rays(config, &primes)?;
            write_file(path, &svg)?;
            ("rays", config.max_n)
        }
        PlotKind::Cycle | PlotKind::Primes => {
            let mode = if kind == PlotKind::Cycle {
                StripMode::All
            } else {
                StripMode::PrimesOnly
            };
            let svg = render_cycle_strip(start, count, &halfline::MillerRabin, config, mode)?;
            write_file(path, &svg)?;
            (
                if kind == PlotKind::Cycle {
                    "cycle"
                } else {
                    "primes"
                },
                count,
            )
        }
    };
    if json {
        emit_json(
            out,
            &serde_json::json!({ "kind": what, "numbers": items, "output": path }),
        )?;
    } else {
        writeln!(
            out,
            "wrote {what} plot of {items} numbers to {}",
            path.display()
        )?;
    }
    Ok(EXIT_OK)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    let mut file = create(path)?;
    file.write_all(contents.as_bytes())
        .and_then(|_| file.flush())
        .map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))
}

fn cmd_bench(limit: u64, json: bool, out: &mut impl Write) -> Outcome {
    let report = bench::run_bench(limit)?;
    let code = if report.sieves_agree {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    if json {
        emit_json(out, &report)?;
        return Ok(code);
    }
    writeln!(out, "limit {limit}")?;
    writeln!(
        out,
        "{:<17} {:>10} {:>14} {:>12} {:>12} {:>10}",
        "method", "seconds", "numbers/s", "positions", "crossings", "output"
    )?;
    for r in &report.rows {
        writeln!(
            out,
            "{:<17} {:>10.4} {:>14.0} {:>12} {:>12} {:>10}",
            r.method, r.seconds, r.throughput, r.positions, r.crossings, r.output
        )?;
    }
    let wheel = report.row("wheel_sieve").expect("wheel row");
    writeln!(
        out,
        "wheel sieve positions: {:.4} of range (bound 8/30 = {:.4})",
        wheel.positions as f64 / (limit + 1) as f64,
        8.0 / 30.0
    )?;
    writeln!(
        out,
        "sieves agree: {}",
        if report.sieves_agree { "yes" } else { "NO" }
    )?;
    Ok(code)
}
