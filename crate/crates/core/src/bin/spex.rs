fn main() {
    std::process::exit(planar_spex::cli::run(std::env::args()));
}
