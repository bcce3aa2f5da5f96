use clap::Parser;

fn main() {
    let cli = repetend_cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = repetend_cli::run(&cli, &mut stdout) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
