use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = ldyn::cli::run_from_args(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(out.status as u8)
}
