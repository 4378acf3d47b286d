fn main() {
    std::process::exit(sparse_ssa::cli::run(std::env::args_os()));
}
