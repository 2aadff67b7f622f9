fn main() {
    std::process::exit(gqt_core::cli::run(std::env::args_os()));
}
