use clap::Parser;

fn main() {
    let cli = permchain_cli::Cli::parse();
    std::process::exit(permchain_cli::run(&cli));
}
