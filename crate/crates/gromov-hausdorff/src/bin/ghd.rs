use clap::Parser;
use gromov_hausdorff::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
