fn main() {
    std::process::exit(ncdc::cli::run_from_env());
}
