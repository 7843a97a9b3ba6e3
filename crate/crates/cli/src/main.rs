use std::io::{stdout, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = valdist::app::main_with(std::env::args_os(), &mut out);
    ExitCode::from(code as u8)
}
