use std::process::ExitCode;

fn main() -> ExitCode {
    arbelos::cli::run()
}
