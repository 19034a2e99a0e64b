fn main() {
    let (code, out) = resloc::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
