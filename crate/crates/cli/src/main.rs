fn main() -> std::process::ExitCode {
    galois_cli::main_with_args(std::env::args_os())
}
