fn main() {
    std::process::exit(braidex::cli::main());
}
