use std::io::{self, Write};

fn main() {
    let out = pp2::cli::run(std::env::args_os(), &mut io::stdin());
    io::stdout().write_all(out.stdout.as_bytes()).unwrap();
    io::stderr().write_all(out.stderr.as_bytes()).unwrap();
    std::process::exit(out.code);
}
