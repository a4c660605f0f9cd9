//! The bicrystal 𝐌 and the super RSK map π on a small matrix, plus A_λ.

use supercrystal::alphabet::Rank;
use supercrystal::matrix::{build_a_lambda, decompose, SuperMatrix};
use supercrystal::partition::Partition;

fn main() {
    let r = Rank::new(2, 2);
    let a = SuperMatrix::from_rows(r, r, &[vec![1, 0, 1, 1], vec![0, 2, 0, 0], vec![1, 0, 0, 1], vec![0, 0, 2, 0]])
        .expect("matrix");
    let om = a.omega();
    println!("Ω(A) top    {:?}", om.top.iter().map(|b| b.0).collect::<Vec<_>>());
    println!("Ω(A) bottom {:?}", om.bottom.iter().map(|b| b.0).collect::<Vec<_>>());
    let (p, q) = a.rsk_pi();
    println!("P1 = {p}\nP2 = {q}");

    let lam = Partition::new(vec![7, 5, 5, 3, 3, 2, 2, 1]).expect("partition");
    let al = build_a_lambda(&lam, Rank::new(4, 3), Rank::new(3, 3)).expect("hook shape");
    println!("A_λ for λ = {lam}:\n{}", al.inner());

    let d = decompose(Rank::new(1, 1), Rank::new(1, 1), 3);
    println!("𝐌_{{1|1,1|1}} up to entry sum 3: {} components, ok = {}", d.components.len(), d.is_ok());
}
