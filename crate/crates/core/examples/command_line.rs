//! Drive the `crystal` command line in process.

use supercrystal::cli::run;

fn main() {
    let ex = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/ex31.json");
    for args in [
        vec!["tableaux", "--m", "1", "--n", "1", "--shape", "1", "--emit", "count"],
        vec!["rsk", "--file", ex],
        vec!["verify", "cauchy", "--m", "2", "--n", "2", "--u", "2", "--v", "2", "--deg", "6"],
        vec!["char", "hook-schur", "--m", "1", "--n", "1", "--shape", "2"],
    ] {
        let (code, out) = run(std::iter::once("crystal").chain(args.iter().copied()));
        println!("$ crystal {}\n{out}(exit {code})", args.join(" "));
    }
}
