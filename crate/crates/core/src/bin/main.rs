use clap::Parser;
use twisted_hodge::cli;

fn main() {
    let parsed = cli::Cli::parse();
    std::process::exit(cli::run(&parsed));
}
