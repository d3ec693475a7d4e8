fn main() {
    std::process::exit(aqcube_cli::run(std::env::args_os()));
}
