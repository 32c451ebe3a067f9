//! Command-line front end: config and preset loading, subcommand dispatch,
//! output formatting and exit codes.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or an
//! internal invariant breaks, 2 on bad input (unknown subcommand, bad
//! config, non-generic point, and so on).

pub mod commands;
pub mod render;
pub mod words;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use commands::{dispatch, Ctx, OPERATIONS};
use gaugealg::config::RunConfig;
use gaugealg::Error;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "gaugealg", version, about = "Exact computations with Higgs and Coulomb presentations of gauge data")]
pub struct Cli {
    /// JSON or TOML run configuration
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Shipped datum: gl2-running, rank1-dmodule, hypertoric-c2, klr-a2, jordan-k13
    #[arg(long, global = true, value_name = "NAME")]
    pub preset: Option<String>,
    /// Write the output here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for probe polynomials and sampled chamber pairs
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// Degree bound of probe polynomials
    #[arg(long = "probe-degree", global = true, value_name = "N")]
    pub probe_degree: Option<u32>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct KeyValues {
    /// Command arguments as KEY=VALUE
    #[arg(value_name = "KEY=VALUE")]
    pub args: Vec<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// List sign vectors (variant=I|I'|K|K'|compat, flavor=given|trivial)
    Chambers(KeyValues),
    /// Classify sign vectors as unsteady (variant=, xi=)
    Unsteady(KeyValues),
    /// Compose a generator word and print its normal form (side=higgs|coulomb, word=, object=, point=)
    Multiply(KeyValues),
    /// Verify the Higgs relations and grading (probes=)
    VerifyHiggs(KeyValues),
    /// Verify the Coulomb relations on an alcove roster (radius=, probes=, point=)
    VerifyCoulomb(KeyValues),
    /// Check the tilde-wall basis of every Hom space (spanning=true|false)
    Basis(KeyValues),
    /// Check the functor between the two sides at a point (rho=, pairs=)
    GammaCheck(KeyValues),
    /// Expand a quiver by classes of the z parameters (eps=)
    QuiverExpand(KeyValues),
    /// Draw a 2D slice of the arrangement (view=plain|unrolled, window=lo,hi, origin=, u=, v=, cols=, rows=)
    Render(KeyValues),
}

impl Command {
    fn split(self) -> (&'static str, Vec<String>) {
        match self {
            Command::Chambers(a) => ("chambers", a.args),
            Command::Unsteady(a) => ("unsteady", a.args),
            Command::Multiply(a) => ("multiply", a.args),
            Command::VerifyHiggs(a) => ("verify-higgs", a.args),
            Command::VerifyCoulomb(a) => ("verify-coulomb", a.args),
            Command::Basis(a) => ("basis", a.args),
            Command::GammaCheck(a) => ("gamma-check", a.args),
            Command::QuiverExpand(a) => ("quiver-expand", a.args),
            Command::Render(a) => ("render", a.args),
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn input_error(msg: impl std::fmt::Display) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 }
}

fn usage_error(msg: impl std::fmt::Display) -> Outcome {
    let usage = Cli::command().render_usage();
    Outcome { stdout: String::new(), stderr: format!("error: {msg}\n\n{usage}\n"), code: 2 }
}

fn error_outcome(e: &Error) -> Outcome {
    match e {
        Error::Invariant(_) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 1 },
        _ => input_error(e),
    }
}

fn parse_format(s: &str) -> Option<Format> {
    Format::from_str(s, true).ok()
}

/// Run one invocation; `argv` includes the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: rendered, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    run_cli(cli)
}

pub fn run_cli(cli: Cli) -> Outcome {
    let mut cfg = match &cli.config {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match RunConfig::parse(&text) {
                Ok(c) => c,
                Err(e) => return error_outcome(&e),
            },
            Err(e) => return input_error(format!("cannot read {}: {e}", path.display())),
        },
        None => RunConfig::default(),
    };
    if let Some(p) = &cli.preset {
        cfg.preset = Some(p.clone());
        cfg.gauge = None;
        cfg.quiver = None;
    }

    let mut args: BTreeMap<String, String> = BTreeMap::new();
    let op: String = match cli.command.clone().map(Command::split) {
        Some((name, kvs)) => {
            if let Some(cmd) = &cfg.command {
                if cmd.operation == name {
                    args.extend(cmd.args.clone());
                }
            }
            for kv in kvs {
                match kv.split_once('=') {
                    Some((k, v)) => {
                        args.insert(k.trim().to_string(), v.to_string());
                    }
                    None => return input_error(format!("argument {kv:?} is not KEY=VALUE")),
                }
            }
            name.to_string()
        }
        None => match &cfg.command {
            Some(cmd) => {
                args.extend(cmd.args.clone());
                cmd.operation.clone()
            }
            None => return usage_error("no subcommand given"),
        },
    };
    if !OPERATIONS.contains(&op.as_str()) {
        return usage_error(format!("unknown subcommand {op:?}; known: {}", OPERATIONS.join(", ")));
    }

    let out_cfg = cfg.output.clone().unwrap_or_default();
    let format = match (cli.format, &out_cfg.format) {
        (Some(f), _) => f,
        (None, Some(s)) => match parse_format(s) {
            Some(f) => f,
            None => return input_error(format!("output format {s:?}: expected text, json or svg")),
        },
        (None, None) if op == "render" => Format::Svg,
        (None, None) => Format::Text,
    };
    let gauge = match cfg.gauge() {
        Ok(g) => g,
        Err(e) => {
            let mut out = error_outcome(&e);
            if cfg.preset.is_none() && cfg.gauge.is_none() && cfg.quiver.is_none() {
                out.stderr.push_str("hint: pass --preset NAME or --config PATH\n");
            }
            return out;
        }
    };
    let quiver = match cfg.quiver() {
        Ok(q) => q,
        Err(e) => return error_outcome(&e),
    };
    let ctx = Ctx {
        gauge,
        quiver,
        args,
        seed: cli.seed.or(out_cfg.seed).unwrap_or(1),
        probe_degree: cli.probe_degree.or(out_cfg.probe_degree).unwrap_or(3),
    };
    let result = match dispatch(&op, &ctx) {
        Ok(r) => r,
        Err(e) => return error_outcome(&e),
    };
    let body = match format {
        Format::Text => result.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&result.json).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Svg => match result.svg {
            Some(s) => s,
            None => return input_error(format!("{op} has no svg output; use text or json")),
        },
    };
    let code = if result.passed { 0 } else { 1 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { stdout: String::new(), stderr: String::new(), code },
            Err(e) => input_error(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome { stdout: body, stderr: String::new(), code },
    }
}
