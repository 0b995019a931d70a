fn main() {
    std::process::exit(su2cert::cli::run(std::env::args_os()));
}
