fn main() -> std::process::ExitCode {
    evolutes::cli::main()
}
