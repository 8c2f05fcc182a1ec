fn main() {
    std::process::exit(longcycle::cli::run(std::env::args_os()));
}
