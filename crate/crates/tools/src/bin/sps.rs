use std::io::{stderr, stdout, BufWriter, Write};

fn main() {
    let mut out = BufWriter::new(stdout().lock());
    let code = sps_tools::cli::main_with(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    drop(out);
    std::process::exit(code);
}
