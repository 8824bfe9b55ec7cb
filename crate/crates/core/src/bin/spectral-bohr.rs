fn main() {
    std::process::exit(spectral_bohr::experiments::main_with_args(std::env::args_os()));
}
