use std::io::{self, Write};

use clap::Parser;

use extsplit::cli::{execute, Cli};

/// Write `message` (newline-terminated) to `sink`, ignoring a closed pipe:
/// downstream tools like `head` are free to stop reading early, and the
/// computed exit code still stands.
fn emit(sink: &mut dyn Write, message: &str) {
    let newline = if message.ends_with('\n') { "" } else { "\n" };
    let result = sink
        .write_all(message.as_bytes())
        .and_then(|()| sink.write_all(newline.as_bytes()))
        .and_then(|()| sink.flush());
    if let Err(e) = result {
        if e.kind() != io::ErrorKind::BrokenPipe {
            let _ = writeln!(io::stderr(), "error: {e}");
            std::process::exit(extsplit::cli::EXIT_INPUT);
        }
    }
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (message, code, to_stderr) = match execute(&cli) {
        Ok((out, code)) => (out, code, false),
        Err((msg, code)) => (msg, code, true),
    };
    if !message.is_empty() {
        if to_stderr {
            emit(&mut io::stderr().lock(), &message);
        } else {
            emit(&mut io::stdout().lock(), &message);
        }
    }
    std::process::exit(code);
}
