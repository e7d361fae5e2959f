fn main() {
    std::process::exit(pathfactor::cli::run(std::env::args_os()));
}
