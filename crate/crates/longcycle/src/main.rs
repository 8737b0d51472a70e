use std::process::exit;

fn main() {
    exit(longcycle::cli::main_with_args(std::env::args_os()));
}
