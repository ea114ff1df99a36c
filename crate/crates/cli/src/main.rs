fn main() {
    std::process::exit(pairscore::cli::run());
}
