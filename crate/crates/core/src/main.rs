fn main() {
    std::process::exit(wilker::cli::run_command(std::env::args().skip(1)));
}
