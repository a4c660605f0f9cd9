//! Rational tableaux of generalized shape, the shift σ and LR coefficients.

use supercrystal::characters::{lr_coefficients, rational_schur};
use supercrystal::partition::{GeneralizedPartition, Partition};
use supercrystal::semi::RationalTableau;

fn main() {
    let lam = GeneralizedPartition::new(vec![1, 0, -1]).expect("generalized partition");
    let all = RationalTableau::enumerate(&lam);
    println!("|𝐁_3({lam})| = {}", all.len());
    let t = &all[all.len() / 2];
    println!("T = {t}\nσT = {}", t.sigma());
    println!("s_λ = {}", rational_schur(&lam));

    let mu = Partition::new(vec![2, 1]).expect("partition");
    let nu = Partition::new(vec![1]).expect("partition");
    for (shape, c) in lr_coefficients(&mu, &nu, 3) {
        println!("N^{shape}_{{{mu},{nu}}} = {c}");
    }
}
