fn main() {
    std::process::exit(abelcodes::cli::run(std::env::args_os()));
}
