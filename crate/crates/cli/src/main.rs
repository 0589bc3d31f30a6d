fn main() {
    std::process::exit(pushpa_cli::run(std::env::args_os()));
}
