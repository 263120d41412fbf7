use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use colorhom::constructions::Mode;
use colorhom_cli::{run_catalog, run_check, run_construct, run_search, run_suite, CliError, Format, Outcome};

#[derive(Parser)]
#[command(name = "colorhom", version, about = "Check identities and run constructions on color Hom-algebra files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output file for documents (construct, catalog) or reports (check, suite).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Skip hypothesis validation in constructions.
    #[arg(long, global = true)]
    unchecked: bool,
    /// Seed for `catalog --search`; 0 is the canonical enumeration order.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Candidates examined by `catalog --search`.
    #[arg(long, global = true, default_value_t = 10_000)]
    budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check; exit 0 on pass, 1 with a witness on failure.
    Check {
        file: PathBuf,
        check: String,
        /// Map and form names the check needs.
        args: Vec<String>,
    },
    /// Apply a named construction and write the resulting document.
    Construct {
        file: PathBuf,
        construction: String,
        args: Vec<String>,
    },
    /// Run a theorem manifest.
    Suite { manifest: PathBuf },
    /// List recipes, materialize one (`catalog truncated_polynomial n=3`), or
    /// search an algebra file for maps (`catalog --search is_derivation --input FILE`).
    Catalog {
        recipe: Vec<String>,
        #[arg(long)]
        search: Option<String>,
        #[arg(long, requires = "search")]
        input: Option<PathBuf>,
        /// Form used by the symmetric-automorphism predicate.
        #[arg(long, requires = "search")]
        form: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mode = if cli.unchecked { Mode::Unchecked } else { Mode::Strict };
    match &cli.command {
        Command::Check { file, check, args } => run_check(file, check, args, cli.format),
        Command::Construct {
            file,
            construction,
            args,
        } => run_construct(file, construction, args, mode, cli.out.as_deref(), cli.format),
        Command::Suite { manifest } => run_suite(manifest, cli.format),
        Command::Catalog {
            recipe,
            search: Some(pred),
            input,
            form,
        } => {
            if !recipe.is_empty() {
                return Err(CliError::Usage("--search takes no recipe words".into()));
            }
            let input = input.as_deref().ok_or_else(|| CliError::Usage("--search needs --input FILE".into()))?;
            run_search(input, pred, form.as_deref(), cli.seed, cli.budget, cli.out.as_deref())
        }
        Command::Catalog { recipe, .. } => run_catalog(recipe, cli.out.as_deref(), cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let reported_to_file = matches!(cli.command, Command::Check { .. } | Command::Suite { .. });
            match (&cli.out, reported_to_file) {
                (Some(path), true) => {
                    if let Err(e) = colorhom_cli::write_file(path, &outcome.report) {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
                _ => {
                    let _ = std::io::stdout().write_all(outcome.report.as_bytes());
                }
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
