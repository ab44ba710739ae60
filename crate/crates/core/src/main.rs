fn main() {
    std::process::exit(hexcactus::cli::run(std::env::args_os()));
}
