fn main() {
    std::process::exit(sqfw::cli::main());
}
