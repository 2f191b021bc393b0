fn main() {
    std::process::exit(slice_ss::cli::main_with_args(std::env::args_os()));
}
