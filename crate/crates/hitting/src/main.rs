fn main() {
    std::process::exit(hitting::cli::main_with_args(std::env::args_os()));
}
