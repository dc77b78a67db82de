fn main() {
    std::process::exit(pauli_pairs::cli::run_from_env());
}
