fn main() {
    std::process::exit(gpindex::cli::run(std::env::args_os()));
}
