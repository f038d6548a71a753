fn main() {
    std::process::exit(oddramsey::cli::run());
}
