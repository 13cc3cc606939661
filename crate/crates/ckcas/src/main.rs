use clap::Parser;

fn main() {
    let cli = ckcas::cli::Cli::parse();
    std::process::exit(ckcas::cli::run(cli));
}
