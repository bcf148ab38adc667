fn main() {
    std::process::exit(bichrome::cli::run(std::env::args_os()));
}
