use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("FROBHOM_THREADS") {
        let threads = match v.parse::<usize>() {
            Ok(t) if t > 0 => t,
            _ => {
                eprintln!("error: FROBHOM_THREADS must be a positive integer, got `{v}`");
                return ExitCode::from(2);
            }
        };
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let out = frobhom_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
