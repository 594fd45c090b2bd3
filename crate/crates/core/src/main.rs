fn main() {
    std::process::exit(simplexwidth::cli::run());
}
