fn main() {
    std::process::exit(rsmorse::cli::main_from_env());
}
