//! Hook Schur functions and the super Cauchy identities, truncated by degree.

use supercrystal::alphabet::Rank;
use supercrystal::characters::{hook_schur, verify_identity, Identity};
use supercrystal::partition::Partition;

fn main() {
    let r = Rank::new(1, 1);
    for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
        let shape = Partition::new(parts).expect("partition");
        println!("hs_{shape}(x | y) = {}", hook_schur(r, &shape).expect("hook shape"));
    }
    let r = Rank::new(2, 2);
    for which in [Identity::Cauchy, Identity::DualCauchy, Identity::Sym1, Identity::Sym2] {
        println!("{which:?} to degree 6: {}", verify_identity(which, r, r, 6));
    }
}
