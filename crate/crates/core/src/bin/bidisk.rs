fn main() {
    std::process::exit(bidisk::cli::main_from(std::env::args_os()));
}
