fn main() {
    std::process::exit(planimetry::cli::run(std::env::args_os()));
}
