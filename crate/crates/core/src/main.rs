use std::process::ExitCode;

fn main() -> ExitCode {
    fuzzy_rcc::cli::main_with_args(std::env::args_os())
}
