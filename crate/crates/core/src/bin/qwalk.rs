use std::process::ExitCode;

fn main() -> ExitCode {
    qwalk::cli::main_with_args(std::env::args_os())
}
