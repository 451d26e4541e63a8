use clap::Parser;
use riley::cli::{exit_code, run, Cli};
use std::io::Write;

fn main() {
    let cli = Cli::parse();
    let result = run(&cli);
    match &result {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
        }
        Err(e) => eprintln!("error: {e}"),
    }
    std::process::exit(exit_code(&result));
}
