//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{AnickError, Result};
use crate::graph_doc::GraphDocument;
use crate::leavitt::Leavitt;
use crate::report::{run, run_laurent, AugmentationChoice, Command, FieldChoice, Report, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "anick", version, about = "Anick resolutions of Leavitt path algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Print the rewriting system and check its compositions.
    Gsb(GraphArgs),
    /// Enumerate chains and compare with the adjacency rule.
    Chains(GraphArgs),
    /// Print differentials next to their closed forms.
    Diff(GraphArgs),
    /// Reduced complex ranks and Tor dimensions.
    Homology(GraphArgs),
    /// Run every check; exits 1 if any fails.
    Verify(GraphArgs),
    /// The one-loop graph with the unit augmentation.
    Laurent(CommonArgs),
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// TOML graph document.
    pub graph: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AugArg {
    Zero,
    Unit,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Highest chain degree.
    #[arg(long = "max-n", visible_alias = "n", default_value_t = 4)]
    pub max_n: usize,
    /// Longest tail word considered by exactness checks.
    #[arg(long, default_value_t = 6)]
    pub max_deg: usize,
    /// `rational` or `p=<prime>`.
    #[arg(long, default_value = "rational")]
    pub field: String,
    #[arg(long, value_enum)]
    pub augmentation: Option<AugArg>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl CommonArgs {
    fn config(&self, default_aug: AugmentationChoice) -> Result<RunConfig> {
        let cfg = RunConfig {
            field: self.field.parse::<FieldChoice>()?,
            max_n: self.max_n,
            max_deg: self.max_deg,
            augmentation: match self.augmentation {
                None => default_aug,
                Some(AugArg::Zero) => AugmentationChoice::Zero,
                Some(AugArg::Unit) => AugmentationChoice::Unit,
            },
            seed: self.seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Outcome of a run: the rendered output and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn execute(cli: &Cli) -> Result<(Report, OutputFormat)> {
    let (cmd, graph_args) = match &cli.command {
        CliCommand::Gsb(a) => (Command::Gsb, a),
        CliCommand::Chains(a) => (Command::Chains, a),
        CliCommand::Diff(a) => (Command::Diff, a),
        CliCommand::Homology(a) => (Command::Homology, a),
        CliCommand::Verify(a) => (Command::Verify, a),
        CliCommand::Laurent(c) => {
            let cfg = c.config(AugmentationChoice::Unit)?;
            if cfg.augmentation != AugmentationChoice::Unit {
                return Err(AnickError::InvalidConfig("laurent uses the unit augmentation".into()));
            }
            return Ok((run_laurent(&cfg)?, c.output));
        }
    };
    let cfg = graph_args.common.config(AugmentationChoice::Zero)?;
    let graph = GraphDocument::load(&graph_args.graph)?.to_graph()?;
    let lv = Leavitt::new(graph)?;
    Ok((run(cmd, &lv, &cfg)?, graph_args.common.output))
}

/// Runs a parsed command line without touching the process.
pub fn run_cli(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok((report, format)) => {
            let failures = report.failures();
            let stdout = match format {
                OutputFormat::Text => report.render_text(),
                OutputFormat::Machine => report.to_json() + "\n",
            };
            let stderr = if failures.is_empty() {
                String::new()
            } else {
                format!("{} failure(s): {}\n", failures.len(), failures.join(", "))
            };
            Outcome {
                stdout,
                stderr,
                code: if failures.is_empty() { 0 } else { 1 },
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

/// Parses `args` (including the program name) and runs; argument errors exit 2.
pub fn main_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_runs_clean() {
        let out = main_with(["anick", "laurent", "--n", "3", "--output", "machine"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let Report::Laurent(r) = Report::from_json(&out.stdout).unwrap() else {
            panic!("wrong report")
        };
        assert_eq!(r.tor, vec![1, 1, 0, 0]);
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(main_with(["anick", "laurent", "--field", "p=4"]).code, 2);
        assert_eq!(main_with(["anick", "laurent", "--max-n", "0"]).code, 2);
        assert_eq!(main_with(["anick", "bogus"]).code, 2);
        assert_eq!(main_with(["anick", "gsb", "/nonexistent.toml"]).code, 2);
    }
}
