fn main() {
    std::process::exit(domlab::cli::run());
}
