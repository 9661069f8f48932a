use clap::Parser;

fn main() {
    let cli = oscone::cli::Cli::parse();
    std::process::exit(oscone::cli::run(cli));
}
