fn main() {
    let code = nilstrat::cli::main_with_std_io(std::env::args_os());
    std::process::exit(code);
}
