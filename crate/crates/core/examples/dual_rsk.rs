//! The dual bicrystal 𝐌♯: π♯, the 90° rotation and A♯_λ.

use supercrystal::alphabet::Rank;
use supercrystal::dual::{build_a_sharp_lambda, rotation_failures, DualMatrix};
use supercrystal::partition::Partition;

fn main() {
    let r = Rank::new(2, 2);
    let a = DualMatrix::from_rows(r, r, &[vec![1, 1, 0, 0], vec![0, 0, 2, 1], vec![0, 1, 1, 0], vec![2, 0, 0, 0]])
        .expect("dual matrix");
    let (p, q) = a.rsk_pi_sharp();
    println!("P♯1 = {p}\nP♯2 = {q}");
    println!("ρ(A) =\n{}", a.rotate90().inner());

    let lam = Partition::new(vec![7, 6, 2, 2, 1, 1]).expect("partition");
    let s = build_a_sharp_lambda(&lam, Rank::new(3, 2), Rank::new(4, 3)).expect("hook shape");
    println!("A♯_λ for λ = {lam}:\n{}", s.inner());

    let all = DualMatrix::enumerate(r, Rank::new(1, 1), 3);
    println!("rotation failures on {} matrices: {}", all.len(), rotation_failures(&all).len());
}
