use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(tmv_cli::run(std::env::args_os()) as u8)
}
