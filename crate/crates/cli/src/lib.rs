//! Command-line surface of `stringcone`: argument parsing, subcommands and the
//! acceptance suite run by `stringcone verify`.

pub mod commands;
pub mod config;
pub mod error;
pub mod verify;

pub use config::{Cli, RunConfig, SubcommandKind};
pub use error::{exit, CliError};

/// Parses `argv`, runs the subcommand and returns the exit status. Diagnostics go to stderr.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return code;
        }
    };
    let (kind, args) = cli.command.split();
    let config = match RunConfig::from_args(kind, args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("stringcone: {e}");
            return e.exit_code();
        }
    };
    match commands::with_threads(config.threads, || commands::run(kind, &config)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("stringcone: stage {}: {e}", e.stage());
            e.exit_code()
        }
    }
}
