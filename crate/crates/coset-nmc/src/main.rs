use std::process::ExitCode;

fn main() -> ExitCode {
    coset_nmc::cli::run()
}
