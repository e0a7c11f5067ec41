fn main() {
    std::process::exit(ust::cli::main_entry());
}
