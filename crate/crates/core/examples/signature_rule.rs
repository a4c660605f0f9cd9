//! Kashiwara operators on a word of 𝐁_{2|2} by the signature rule.
//!
//! Run with `cargo run --example signature_rule`.

use supercrystal::alphabet::Rank;
use supercrystal::crystal::Crystal;
use supercrystal::word::{raw_signature, reduced_signature, Word};

fn signs(v: &[supercrystal::word::Sign]) -> String {
    v.iter().map(|s| s.to_string()).collect()
}

fn main() {
    let w = Word::parse("1,-1,-1,-1,-2,2,2,-2,1").expect("a word");
    println!("w = {w}   wt = {}", w.weight());
    for i in Rank::new(2, 2).indices() {
        println!(
            "index {i:>2}: raw {}  reduced {}  eps {} phi {}",
            signs(&raw_signature(i, w.letters())),
            signs(&reduced_signature(i, w.letters())),
            w.eps(i),
            w.phi(i)
        );
        let show = |x: Option<Word>| x.map_or("0".to_string(), |x| x.to_string());
        println!("  e: {}", show(w.raise(i)));
        println!("  f: {}", show(w.lower(i)));
    }
}
