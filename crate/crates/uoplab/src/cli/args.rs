//! Command-line parsing.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{antidominant_hint, run, OutputFormat, RunConfig, Suite};
use crate::coeffs::Coweight;
use crate::error::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "uoplab",
    version,
    about = "Exact checks for U-operators, Hecke algebras and the rank-1 tree"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites for a group (default: every suite except tree).
    Verify(CommonArgs),
    /// Run the tree suite (default) on the truncated `(q+1)`-regular tree.
    Tree(CommonArgs),
    /// Build and check the integrality certificate for `--lambda`.
    Integrality(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Preset label (gl2, sl2, pgl2, gl3, sl3, sp4) or path to a datum JSON file.
    #[arg(long, default_value = "gl2")]
    pub group: String,
    /// Comma-separated subset of coeffs, rootdata, hecke, satake, integrality, tree.
    #[arg(long, value_delimiter = ',')]
    pub suites: Vec<Suite>,
    /// Antidominant coweight such as `1,0`.
    #[arg(long)]
    pub lambda: Option<Coweight>,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long, default_value_t = 8)]
    pub depth: u32,
    #[arg(long, default_value = "text")]
    pub output: OutputFormat,
    #[arg(long)]
    pub parallel: bool,
    /// Write the certificate JSON here.
    #[arg(long)]
    pub emit_cert: Option<PathBuf>,
    /// Coordinate box radius for the property suites.
    #[arg(long = "box", default_value_t = 2)]
    pub box_radius: i32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl Command {
    /// The run configuration, with the subcommand's default suites.
    pub fn config(self) -> RunConfig {
        let (args, default_suites) = match self {
            Command::Verify(a) => (a, RunConfig::default().suites),
            Command::Tree(a) => (a, vec![Suite::Tree]),
            Command::Integrality(a) => (a, vec![Suite::Integrality]),
        };
        RunConfig {
            group: args.group,
            suites: if args.suites.is_empty() {
                default_suites
            } else {
                args.suites
            },
            lambda: args.lambda,
            q: args.q,
            depth: args.depth,
            output: args.output,
            parallel: args.parallel,
            emit_cert: args.emit_cert,
            box_radius: args.box_radius,
            seed: args.seed,
        }
    }
}

fn hint(e: &Error, cfg: &RunConfig) -> Option<String> {
    match e {
        Error::NotAntidominant(_) => antidominant_hint(cfg),
        Error::RankMismatch { .. } => {
            Some("--lambda needs one entry per coordinate of the group".into())
        }
        Error::NotFiniteType { .. } => {
            Some("raise the bound with UOPLAB_MAX_WEYL if the datum is of finite type".into())
        }
        _ => None,
    }
}

/// Parses `args`, runs, prints the report and returns the process exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let cfg = cli.command.config();
    match run(&cfg) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", report.render(cfg.output));
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(h) = hint(&e, &cfg) {
                eprintln!("hint: {h}");
            }
            2
        }
    }
}

/// Parses a command line into a run configuration without running it.
pub fn parse_config<I, T>(args: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args)
        .map(|c| c.command.config())
        .map_err(|e| Error::ConfigError(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let cfg = parse_config([
            "uoplab",
            "verify",
            "--group",
            "gl3",
            "--suites",
            "hecke,satake",
            "--lambda",
            "1,0,0",
            "--box",
            "1",
            "--parallel",
            "--output",
            "json",
        ])
        .unwrap();
        assert_eq!(cfg.suites, vec![Suite::Hecke, Suite::Satake]);
        assert_eq!(cfg.lambda, Some(Coweight::from(vec![1, 0, 0])));
        assert_eq!(cfg.box_radius, 1);
        assert!(cfg.parallel);
        assert_eq!(cfg.output, OutputFormat::Json);

        let tree = parse_config(["uoplab", "tree", "--q", "3", "--depth", "8"]).unwrap();
        assert_eq!(tree.suites, vec![Suite::Tree]);
        assert_eq!((tree.q, tree.depth), (3, 8));
        assert!(parse_config(["uoplab", "verify", "--suites", "nope"]).is_err());
    }

    #[test]
    fn error_paths() {
        let cfg = parse_config(["uoplab", "verify", "--group", "gl2", "--lambda", "0,1"]).unwrap();
        assert!(matches!(run(&cfg), Err(Error::NotAntidominant(_))));
        assert!(antidominant_hint(&cfg).unwrap().contains("--lambda 1,0"));
        let cfg = parse_config(["uoplab", "verify", "--lambda", "1,0,0"]).unwrap();
        assert!(matches!(run(&cfg), Err(Error::RankMismatch { .. })));
        let cfg = parse_config(["uoplab", "tree", "--q", "1"]).unwrap();
        assert!(matches!(run(&cfg), Err(Error::ConfigError(_))));
        let cfg = parse_config(["uoplab", "verify", "--group", "e8"]).unwrap();
        assert!(matches!(run(&cfg), Err(Error::ConfigError(_))));
    }

    #[test]
    fn gl2_integrality_run() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cert.json");
        let cfg = parse_config([
            "uoplab",
            "integrality",
            "--group",
            "gl2",
            "--lambda",
            "1,0",
            "--emit-cert",
            path.to_str().unwrap(),
        ])
        .unwrap();
        let report = run(&cfg).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.iter().any(|c| c.name == "tree action"));
        let written: crate::uops::IntegralityCertificate =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(Some(&written), report.certificate.as_ref());
    }
}
