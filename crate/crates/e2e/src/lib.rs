//! Helpers for driving the `kneser` command line in process.

use std::io::Cursor;

/// Exit code, stdout and stderr of one CLI invocation.
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `kneser <args>` with `stdin` as standard input.
pub fn kneser(args: &[&str], stdin: &str) -> Invocation {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("kneser").chain(args.iter().copied());
    let code = kneser_cli::run(argv, &mut input, &mut out, &mut err);
    Invocation {
        code,
        stdout: String::from_utf8_lossy(&out).into_owned(),
        stderr: String::from_utf8_lossy(&err).into_owned(),
    }
}

/// Splits a certificate into its header line and body lines.
pub fn split_certificate(text: &str) -> (&str, Vec<&str>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    (header, lines.collect())
}
