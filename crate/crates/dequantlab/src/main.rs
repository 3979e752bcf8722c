use std::process::ExitCode;

use clap::Parser;
use dequantlab::cli::{configure_from_env, run, Cli};
use dequantlab::report::{Format, Report, EXIT_USAGE};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let echo = args[1..].join(" ");
    let report = match configure_from_env() {
        Ok(_) => run(&cli, &echo),
        Err(e) => Report::error(echo, EXIT_USAGE, e),
    };
    let text = report.render(cli.format());
    if report.is_error() && cli.format() == Format::Text {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(report.exit_code as u8)
}
