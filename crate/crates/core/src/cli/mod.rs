//! Command-line front end: flag and config-file handling, the five commands,
//! and rendering as prose or `key=value` lines.
//!
//! Exit codes: 0 success, 2 invalid input, 3 missing code-table data,
//! 4 numerical failure.

mod commands;
mod config;
mod report;

pub use commands::{
    cmd_asymptotic, cmd_density, cmd_field, cmd_tables, cmd_verify, load_field, load_table,
    run_suites, select_prime, SuiteResult,
};
pub use config::{
    parse_config, parse_gens, read_config, Format, PrimeSelector, RunConfig, Settings,
    CONFIG_KEYS, DEFAULT_LLL_DELTA, DEFAULT_N, DEFAULT_POLY, DEFAULT_PRIME,
};
pub use report::Report;

use crate::error::Result;
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "idealpack", version, about = "Sphere packings from prime ideals and codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Degree, signature, discriminant, maximality, and the prime's factors.
    Field,
    /// Center-density bound for one code length.
    Density,
    /// Asymptotic density exponent of the family.
    Asymptotic,
    /// Recompute the reference table rows.
    Tables,
    /// Run the seeded property suites.
    Verify,
}

/// Flags shared by every command. Each one may also come from `--config`.
#[derive(Args, Debug, Default, Clone)]
pub struct Flags {
    /// Coefficients of f, constant term first, e.g. "1,1,-1,-1,1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Rational prime under the chosen prime ideal.
    #[arg(long, global = true)]
    pub prime: Option<String>,
    /// Which factor of the prime, in the deterministic ordering.
    #[arg(long, global = true)]
    pub index: Option<String>,
    /// Prime ideal as "p:c0,c1,..", the second generator in power-basis coordinates.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub gens: Option<String>,
    /// Code length.
    #[arg(long, global = true)]
    pub n: Option<String>,
    /// Packing dimension m*n, instead of --n.
    #[arg(long, global = true)]
    pub dimension: Option<String>,
    /// Working precision in bits (default: chosen per level).
    #[arg(long, global = true)]
    pub precision_bits: Option<String>,
    /// LLL parameter in (0.25, 1).
    #[arg(long, global = true)]
    pub lll_delta: Option<String>,
    /// Number of levels for the asymptotic exponent.
    #[arg(long, global = true)]
    pub lmax: Option<String>,
    /// Use 1000 levels (overrides --lmax).
    #[arg(long, global = true)]
    pub deep: bool,
    /// Code table file replacing the bundled snapshot.
    #[arg(long, global = true)]
    pub code_table: Option<PathBuf>,
    /// Output format: human or kv.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Seed for factorization splitting and random test instances.
    #[arg(long, global = true)]
    pub seed: Option<String>,
    /// Flat key = value file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Perturb one root by 2^-BITS before embedding (testing hook).
    #[arg(long, global = true, value_name = "BITS")]
    pub inject_precision_fault: Option<String>,
    /// Accept f without a modular irreducibility certificate.
    #[arg(long, global = true)]
    pub assume_irreducible: bool,
}

impl Flags {
    pub fn settings(&self) -> Settings {
        let mut s = Settings::default();
        let pairs = [
            ("poly", &self.poly),
            ("prime", &self.prime),
            ("index", &self.index),
            ("gens", &self.gens),
            ("n", &self.n),
            ("dimension", &self.dimension),
            ("precision_bits", &self.precision_bits),
            ("lll_delta", &self.lll_delta),
            ("lmax", &self.lmax),
            ("format", &self.format),
            ("seed", &self.seed),
            ("inject_precision_fault", &self.inject_precision_fault),
        ];
        for (k, v) in pairs {
            if let Some(v) = v {
                s.set(k, v.clone());
            }
        }
        if let Some(p) = &self.code_table {
            s.set("code_table", p.to_string_lossy());
        }
        if self.deep {
            s.set("deep", "true");
        }
        if self.assume_irreducible {
            s.set("assume_irreducible", "true");
        }
        s
    }

    /// Defaults, then the config file, then flags.
    pub fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => read_config(path)?,
            None => Settings::default(),
        };
        RunConfig::from_settings(&file.overlay(&self.settings()))
    }
}

pub fn execute(command: Command, cfg: &RunConfig) -> Result<Report> {
    match command {
        Command::Field => cmd_field(cfg),
        Command::Density => cmd_density(cfg),
        Command::Asymptotic => cmd_asymptotic(cfg),
        Command::Tables => cmd_tables(cfg),
        Command::Verify => cmd_verify(cfg),
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = cli.flags.resolve().and_then(|cfg| {
        let report = execute(cli.command, &cfg)?;
        Ok((cfg.format, report))
    });
    match result {
        Ok((format, report)) => {
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = out.write_all(report.render(format).as_bytes());
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
