//! Hook tableaux: enumeration, column insertion, H^λ and fake highest weights.

use supercrystal::alphabet::{Letter, Rank};
use supercrystal::partition::Partition;
use supercrystal::tableau::{enumerate_tableaux, find_fake_highest, highest_weight_tableau, p_tableau};

fn main() {
    let rank = Rank::new(2, 1);
    for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![3, 1]] {
        let shape = Partition::new(parts).expect("partition");
        let all = enumerate_tableaux(rank, &shape).expect("hook shape");
        let fake = find_fake_highest(rank, &shape).expect("hook shape");
        println!("{shape}: {} tableaux, {} fake highest weight vectors", all.len(), fake.len());
        println!("  H = {}", highest_weight_tableau(rank, &shape).expect("hook shape"));
    }
    let word: Vec<Letter> = [2, -1, 1, -2, 1, -1].into_iter().map(Letter).collect();
    println!("P(2 1̄ 1 2̄ 1 1̄) = {}", p_tableau(Rank::new(2, 2), &word));
}
