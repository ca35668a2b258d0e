fn main() {
    std::process::exit(polydist_cli::run());
}
