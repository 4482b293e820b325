use std::io::Write;

fn main() {
    env_logger::init();
    let code = bench_cli::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
