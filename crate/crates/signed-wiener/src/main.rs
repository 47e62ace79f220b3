fn main() {
    std::process::exit(signed_wiener::cli::run());
}
