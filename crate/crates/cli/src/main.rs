use clap::Parser;

fn main() {
    let cli = stress_cli::Cli::parse();
    if let Err(e) = stress_cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
