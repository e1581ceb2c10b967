fn main() {
    std::process::exit(weylnu::cli::main_with_args(std::env::args_os()));
}
