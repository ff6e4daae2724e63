fn main() {
    std::process::exit(projstat::cli::main_with_args(std::env::args_os()));
}
