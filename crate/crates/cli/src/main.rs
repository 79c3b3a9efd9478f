fn main() {
    std::process::exit(stringcone_cli::main_with_args(std::env::args_os()));
}
