//! Command-line front end for `wpvol`.
//!
//! [`run`] executes a parsed [`RunConfig`] against an output stream and
//! returns the process exit code: 0 on success, 1 when a verification
//! fails, 2 for usage errors and 3 for I/O errors.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wpvol::asympt::{default_n_min, fit_growth, predicted_c, GrowthReport};
use wpvol::genexp::{
    build_phi0, build_phi_g, check_base_values, check_derivative_formula, check_genus_zero,
    check_induction_all, check_lemma, check_lemma_constants, check_reversion, check_theorem,
    CheckReport, GenexpError, GenusExpansionContext,
};
use wpvol::kappavol::{volume, wp_volume_display, VolumeRecord};
use wpvol::qseries::format_rational;
use wpvol::taucalc::{load_cache, save_cache, MemoStore, TauEngine, TauKey};
use wpvol::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma,
    Theorem1,
    Derivative,
    Induction,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print one correlator <tau_d1 ... tau_dn>_G.
    Tau {
        #[arg(long)]
        genus: u32,
        /// Comma-separated indices, e.g. `1` or `2,0,0`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        ds: Vec<u32>,
    },
    /// Print V_{G,N}, or the table for N..=N_MAX.
    Volume {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, value_name = "N_MAX")]
        table: Option<u32>,
    },
    /// Print the generating function phi_G to the given order.
    Series {
        #[arg(long)]
        phi: u32,
        #[arg(long)]
        order: usize,
    },
    /// Run verification suites; exit code 1 on any failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        order: usize,
    },
    /// Fit the large-n growth of v_{G,n}.
    Asympt {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n_max: u32,
        /// Defaults to the upper half of the range.
        #[arg(long)]
        n_min: Option<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "wpvol", version, about = "Exact Weil-Petersson volumes")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Load the correlator memo table from PATH (if present) and save it back.
    #[arg(long, value_name = "PATH", global = true)]
    pub cache: Option<PathBuf>,
    /// Also print decimal renderings with this many fractional digits.
    #[arg(long, global = true)]
    pub digits: Option<usize>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

enum Failure {
    Usage(String),
    Io(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<GenexpError> for Failure {
    fn from(e: GenexpError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs `config`, writing results to `out` and diagnostics to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let engine = match &config.cache {
        Some(path) if path.exists() => match load_cache(path) {
            Ok(store) => TauEngine::from_store(store),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_IO;
            }
        },
        _ => TauEngine::new(),
    };
    let code = match dispatch(config, &engine, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_IO;
        }
    };
    if let Some(path) = &config.cache {
        let store: MemoStore = engine.snapshot();
        if let Err(e) = save_cache(&store, path) {
            let _ = writeln!(err, "error: {e}");
            return EXIT_IO;
        }
    }
    code
}

fn dispatch(config: &RunConfig, engine: &TauEngine, out: &mut dyn Write) -> Result<i32, Failure> {
    match &config.command {
        Command::Tau { genus, ds } => tau(config, engine, *genus, ds, out),
        Command::Volume { genus, n, table } => volumes(config, engine, *genus, *n, *table, out),
        Command::Series { phi, order } => series(config, engine, *phi, *order, out),
        Command::Verify {
            suite,
            genus,
            order,
        } => verify(config, engine, *suite, *genus, *order, out),
        Command::Asympt {
            genus,
            n_max,
            n_min,
        } => asympt(config, engine, *genus, *n_max, *n_min, out),
    }
}

fn tau(
    config: &RunConfig,
    engine: &TauEngine,
    genus: u32,
    ds: &[u32],
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let key = TauKey::new(genus, ds.to_vec());
    let value = format_rational(&engine.tau(&key));
    match config.format {
        Format::Plain => writeln!(out, "{value}")?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({"g": genus, "ds": key.indices(), "value": value})
        )?,
        Format::Csv => {
            let ds: Vec<String> = key.indices().iter().map(u32::to_string).collect();
            writeln!(out, "g,ds,value")?;
            writeln!(out, "{genus},{},{value}", ds.join(";"))?;
        }
    }
    Ok(EXIT_OK)
}

fn volumes(
    config: &RunConfig,
    engine: &TauEngine,
    genus: u32,
    n: u32,
    table: Option<u32>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let last = table.unwrap_or(n);
    if last < n {
        return Err(Failure::Usage(format!("--table {last} is below --n {n}")));
    }
    let records: Vec<VolumeRecord> = (n..=last).map(|k| volume(engine, genus, k)).collect();
    let decimals: Vec<Option<String>> = records
        .iter()
        .map(|r| {
            config
                .digits
                .map(|d| wp_volume_display(engine, r.g, r.n, d).decimal)
        })
        .collect();
    match config.format {
        Format::Plain => {
            for (r, dec) in records.iter().zip(&decimals) {
                write!(
                    out,
                    "V_{{{},{}}} = {}  v = {}",
                    r.g,
                    r.n,
                    format_rational(&r.volume),
                    format_rational(&r.normalized)
                )?;
                if let Some(d) = dec {
                    write!(out, "  Vol_WP = {d}")?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = records
                .iter()
                .zip(&decimals)
                .map(|(r, dec)| {
                    let mut v = serde_json::to_value(r).expect("record serializes");
                    if let Some(d) = dec {
                        v["vol_wp"] = json!(d);
                    }
                    v
                })
                .collect();
            if table.is_some() {
                writeln!(out, "{}", serde_json::Value::Array(values))?;
            } else {
                writeln!(out, "{}", values[0])?;
            }
        }
        Format::Csv => {
            let with_dec = config.digits.is_some();
            write!(out, "{}", VolumeRecord::csv_header())?;
            writeln!(out, "{}", if with_dec { ",vol_wp" } else { "" })?;
            for (r, dec) in records.iter().zip(&decimals) {
                write!(out, "{}", r.csv_row())?;
                match dec {
                    Some(d) => writeln!(out, ",{d}")?,
                    None => writeln!(out)?,
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn series(
    config: &RunConfig,
    engine: &TauEngine,
    genus: u32,
    order: usize,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let phi: Series = match genus {
        0 => build_phi0(order)?,
        1 => {
            return Err(Failure::Usage(
                "no genus-expansion formula for genus 1; use --phi 0 or --phi G with G >= 2".into(),
            ))
        }
        g => {
            let ctx = GenusExpansionContext::for_genus(g, order)?;
            build_phi_g(g, &ctx, engine, order)?
        }
    };
    match config.format {
        Format::Plain => {
            for (k, c) in phi.coeffs().iter().enumerate() {
                writeln!(out, "x^{k}: {}", format_rational(c))?;
            }
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&phi).expect("series serializes")
        )?,
        Format::Csv => {
            writeln!(out, "power,coeff")?;
            for (k, c) in phi.coeffs().iter().enumerate() {
                writeln!(out, "{k},{}", format_rational(c))?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Largest `n` used by the derivative and induction suites.
const PROOF_N_MAX: u32 = 4;

fn verify(
    config: &RunConfig,
    engine: &TauEngine,
    suite: Suite,
    genus: u32,
    order: usize,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if genus < 2 {
        return Err(Failure::Usage(format!(
            "verification suites need --genus >= 2, got {genus}"
        )));
    }
    let top = 3 * genus as usize - 2;
    let ctx = GenusExpansionContext::new(order, top + PROOF_N_MAX as usize)?;
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut reports: Vec<CheckReport> = Vec::new();

    if suite == Suite::All {
        reports.push(check_base_values(engine));
        reports.extend(check_reversion(&ctx)?);
        if order >= 3 {
            reports.extend(check_genus_zero(engine, order)?);
        }
    }
    if wants(Suite::Lemma) {
        reports.push(check_lemma_constants(&ctx));
        for i in 2..=top {
            reports.push(check_lemma(i, &ctx)?);
        }
    }
    if wants(Suite::Theorem1) {
        reports.extend(check_theorem(genus, &ctx, engine, order)?);
    }
    if wants(Suite::Derivative) {
        for n in 0..=PROOF_N_MAX.min(order as u32) {
            reports.push(check_derivative_formula(genus, n, &ctx, engine)?);
        }
    }
    if wants(Suite::Induction) {
        for n in 1..=PROOF_N_MAX {
            reports.push(check_induction_all(engine, genus, n)?);
        }
    }

    for r in &reports {
        match config.format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string(r).expect("report serializes")
            )?,
            Format::Plain | Format::Csv => {
                let status = if r.pass { "PASS" } else { "FAIL" };
                write!(out, "{status} {} g={} n={}", r.check, r.g, r.n)?;
                if let Some(m) = &r.first_mismatch {
                    write!(
                        out,
                        " first mismatch at {}: {} != {}",
                        m.power, m.lhs, m.rhs
                    )?;
                }
                writeln!(out)?;
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    if config.format == Format::Plain {
        writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
    }
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn asympt(
    config: &RunConfig,
    engine: &TauEngine,
    genus: u32,
    n_max: u32,
    n_min: Option<u32>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let n_min = n_min.unwrap_or_else(|| default_n_min(genus, n_max));
    if n_min > n_max {
        return Err(Failure::Usage(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    let fit = fit_growth(engine, genus, n_min, n_max).map_err(|e| Failure::Usage(e.to_string()))?;
    let predicted = predicted_c().c;
    let report = GrowthReport::new(&fit, &predicted);
    match config.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        )?,
        Format::Plain => {
            writeln!(out, "g = {}", report.g)?;
            writeln!(
                out,
                "n_range = [{}, {}]",
                report.n_range[0], report.n_range[1]
            )?;
            writeln!(out, "C_est = {}", report.c_est)?;
            writeln!(out, "exponent_est = {}", report.exponent_est)?;
            writeln!(out, "predicted_C = {}", report.predicted_c)?;
            writeln!(out, "rel_dev = {}", report.rel_dev)?;
        }
        Format::Csv => {
            writeln!(out, "g,n_min,n_max,C_est,exponent_est,predicted_C,rel_dev")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                report.g,
                report.n_range[0],
                report.n_range[1],
                report.c_est,
                report.exponent_est,
                report.predicted_c,
                report.rel_dev
            )?;
        }
    }
    Ok(EXIT_OK)
}
