fn main() {
    std::process::exit(supertwist_cli::run::main_entry());
}
