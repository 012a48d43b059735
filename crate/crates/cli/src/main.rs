fn main() {
    std::process::exit(sigma_cli::main_with_std_io());
}
