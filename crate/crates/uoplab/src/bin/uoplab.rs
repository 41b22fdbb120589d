fn main() {
    std::process::exit(uoplab::cli::main_from_args(std::env::args_os()));
}
