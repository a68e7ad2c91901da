fn main() {
    std::process::exit(motivic::cli::run(std::env::args_os()));
}
