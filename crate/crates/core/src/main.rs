fn main() {
    std::process::exit(cycle_ramsey::cli::run_from(std::env::args_os()));
}
