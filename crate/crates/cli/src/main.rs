fn main() {
    std::process::exit(crossbial_cli::main_with(std::env::args_os().collect()));
}
