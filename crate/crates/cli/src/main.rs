use clap::Parser;

use treelike_cli::{run, Cli, EXIT_INPUT};

fn main() {
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(&cli));
}
