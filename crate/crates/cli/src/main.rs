use clap::Parser;

fn main() {
    let cli = pairmds_cli::Cli::parse();
    let code = pairmds_cli::run(cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
