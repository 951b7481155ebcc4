fn main() {
    std::process::exit(epstein_kit::cli::main_with_args(std::env::args_os()));
}
