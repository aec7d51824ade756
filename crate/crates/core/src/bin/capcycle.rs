fn main() {
    std::process::exit(capcycle::cli::run_cli(std::env::args_os()));
}
