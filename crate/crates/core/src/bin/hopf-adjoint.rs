use std::io::Write;

fn main() {
    let (code, out) = hopf_adjoint::cli::run(std::env::args_os());
    // a closed pipe is not worth a panic
    let _ = if code == 2 {
        write!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{}", out.trim_end())
    };
    std::process::exit(code);
}
