use std::io;
use std::process;

fn main() {
    let status = minplus_cli::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    process::exit(status);
}
