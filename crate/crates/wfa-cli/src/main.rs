use clap::error::ErrorKind;
use clap::Parser;
use wfa_cli::app::{self, Cli};

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => app::run(cli),
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => app::EXIT_ERROR,
            };
            let _ = err.print();
            code
        }
    };
    std::process::exit(code as i32);
}
