fn main() {
    std::process::exit(translat::cli::main());
}
