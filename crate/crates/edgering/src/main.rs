use clap::Parser;

fn main() {
    let cli = edgering::cli::Cli::parse();
    let code = edgering::cli::run(cli, &mut std::io::stdout());
    std::process::exit(code);
}
