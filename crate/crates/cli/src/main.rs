use std::io::{self, BufReader, BufWriter, Write};

fn main() {
    let mut stdin = BufReader::new(io::stdin());
    let mut stdout = BufWriter::new(io::stdout());
    let code = kneser_cli::run(std::env::args_os(), &mut stdin, &mut stdout, &mut io::stderr());
    let _ = stdout.flush();
    std::process::exit(code);
}
