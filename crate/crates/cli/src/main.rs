fn main() {
    std::process::exit(stabcat::main_with(std::env::args_os()));
}
