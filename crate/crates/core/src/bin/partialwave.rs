fn main() {
    std::process::exit(partialwave::cli::run(std::env::args_os()));
}
