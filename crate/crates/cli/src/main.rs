mod commands;
mod params;
mod table;

use clap::{Args, Parser, Subcommand};
use hzeta::error::Error;
use hzeta::numerics::PrecisionPolicy;
use std::path::PathBuf;
use std::process::ExitCode;
use table::Format;

#[derive(Debug, Parser)]
#[command(name = "hzeta", version, about = "Higher zeta functions, Barnes multiple gamma/sine, regularized products")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Absolute and relative target accuracy
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub eps: f64,
    /// Minimum number of series terms
    #[arg(long = "max-terms", global = true, default_value_t = 32)]
    pub max_terms: usize,
    /// Write the table to a file instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl GlobalArgs {
    pub fn policy(&self) -> hzeta::error::Result<PrecisionPolicy> {
        let base = PrecisionPolicy::default();
        PrecisionPolicy::new(self.eps, self.eps, self.max_terms, base.quad_points)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at a point or over a grid
    Eval(commands::EvalArgs),
    /// Run an identity suite; exit 1 if any residual exceeds its tolerance
    Verify(commands::VerifyArgs),
    /// Dirichlet coefficients g(n) of a higher zeta function
    Coeffs(commands::CoeffsArgs),
    /// Validate a zero table and write it as `n,gamma`
    ZerosImport(commands::ZerosImportArgs),
    /// Partial sums of g(n) against the leading asymptotic term
    Tauberian(commands::TauberianArgs),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Order { .. } | Error::Shape(_) | Error::Unsupported(_) | Error::Io(_) => 2,
        _ => 3,
    }
}

fn fail(kind: &str, message: &str, code: u8) -> ExitCode {
    eprintln!("error:{kind}:{}", message.replace('\n', " "));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = e.print();
                return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                    ExitCode::from(2)
                } else {
                    ExitCode::SUCCESS
                };
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            return fail("usage", first, 2);
        }
    };
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => fail(e.kind(), &e.to_string(), exit_code(&e)),
    }
}
