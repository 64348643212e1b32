fn main() {
    std::process::exit(satgraph::cli::run(std::env::args_os()));
}
