fn main() {
    std::process::exit(quintic_locus::cli::main_with_args(std::env::args_os()));
}
