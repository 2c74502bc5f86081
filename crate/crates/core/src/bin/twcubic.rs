fn main() -> std::process::ExitCode {
    twisted_cubic::harness::cli::main()
}
