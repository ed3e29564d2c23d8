fn main() {
    std::process::exit(oscq::cli::main_with(std::env::args_os()));
}
