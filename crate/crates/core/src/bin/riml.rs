use std::io::{IsTerminal, Read, Write};

fn main() {
    let mut stdin = Vec::new();
    if !std::io::stdin().is_terminal() && std::env::args().any(|a| a == "-") {
        let _ = std::io::stdin().read_to_end(&mut stdin);
    }
    let (code, out, err) = riml::cli::run(std::env::args_os(), &stdin);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(code);
}
