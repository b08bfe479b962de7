fn main() {
    let outcome = skewres::cli::run(std::env::args_os());
    if outcome.code == skewres::cli::EXIT_INPUT {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    std::process::exit(outcome.code);
}
