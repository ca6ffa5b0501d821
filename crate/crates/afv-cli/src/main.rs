use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(afv_cli::run(std::env::args_os()) as u8)
}
