fn main() {
    std::process::exit(degcone::cli::run());
}
