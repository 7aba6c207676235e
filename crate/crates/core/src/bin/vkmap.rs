fn main() {
    std::process::exit(vkmaps::cli::run_cli(std::env::args_os()));
}
