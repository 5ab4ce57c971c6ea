use std::io::Write;

use gaugetype::cli::{run, TABLES_ENV};

fn main() {
    let out = run(std::env::args_os(), std::env::var_os(TABLES_ENV));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
