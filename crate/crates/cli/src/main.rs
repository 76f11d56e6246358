mod cli;
mod commands;
mod output;

use clap::Parser;

use crate::cli::{Cli, Format};
use crate::output::{emit, error_envelope, pretty, render, EXIT_INPUT};

fn main() {
    let cli = Cli::parse();
    let command = commands::command_name(&cli.command);
    let code = match commands::run(&cli.command) {
        Ok(outcome) => match emit(&render(&outcome, cli.format), cli.output.as_deref()) {
            Ok(()) => outcome.exit_code(),
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            if cli.format == Format::Json {
                let _ = emit(&pretty(&error_envelope(&command, &e)), cli.output.as_deref());
            }
            eprintln!("error ({}): {e}", e.kind());
            EXIT_INPUT
        }
    };
    std::process::exit(code);
}
