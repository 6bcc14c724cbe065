fn main() {
    std::process::exit(genvor::cli::run(std::env::args_os()));
}
