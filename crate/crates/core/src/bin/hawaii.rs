fn main() {
    std::process::exit(hawaii::cli::run_from(std::env::args_os()));
}
