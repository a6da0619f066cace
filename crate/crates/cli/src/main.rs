use clap::Parser;

use dchfc_cli::args::{split_overrides, Cli};
use dchfc_cli::commands::dispatch;

fn main() {
    let (argv, overrides) = split_overrides(std::env::args().collect());
    let cli = Cli::parse_from(argv);
    if let Err(err) = dispatch(cli, &overrides) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
