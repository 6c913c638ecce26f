fn main() {
    std::process::exit(cha::cli::main());
}
