//! Symmetric matrices under the diagonal operators and the statistic 𝔬.

use supercrystal::alphabet::Rank;
use supercrystal::symmetric::{decompose_symmetric, odd_parts};

fn main() {
    let d = decompose_symmetric(Rank::new(2, 2), 3);
    for c in &d.components {
        println!("shape {} o(λ) = {} 𝔬 = {} size {}", c.shape, odd_parts(&c.shape), c.odd, c.members.len());
    }
    println!("ok = {}", d.is_ok());
}
