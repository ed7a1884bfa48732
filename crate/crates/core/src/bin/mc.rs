fn main() {
    std::process::exit(model_change::cli::run(std::env::args_os()));
}
