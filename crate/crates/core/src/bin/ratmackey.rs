fn main() {
    std::process::exit(ratmackey::cli::run());
}
