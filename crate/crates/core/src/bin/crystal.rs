fn main() {
    let (code, out) = supercrystal::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
