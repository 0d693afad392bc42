fn main() {
    std::process::exit(sclab::cli::main());
}
