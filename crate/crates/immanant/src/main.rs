use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(immanant::cli::run())
}
