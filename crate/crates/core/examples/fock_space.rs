//! The semi-infinite matrix model: Res, ϖ = (𝒫₁, 𝒫₂) and 𝒜_λ.

use supercrystal::partition::GeneralizedPartition;
use supercrystal::semi::{build_script_a, decompose_semi, SemiMatrix};

fn main() {
    let json = include_str!("data/semi.json");
    let a: SemiMatrix = serde_json::from_str(json).expect("semi-infinite matrix");
    println!("A = {a}");
    println!("Res_{{5|3}} A =\n{}", a.res(5, 3).inner());
    let (p, q) = a.varpi();
    println!("𝒫₁ = {p}\n   shape {}", p.shape());
    println!("𝒫₂ = {q}\n   shape {}", q.shape());

    let lam = GeneralizedPartition::new(vec![2, 0, -1]).expect("generalized partition");
    let h = build_script_a(&lam);
    let (p, q) = h.varpi();
    println!("𝒜_λ for λ = {lam}: {h}\n  ϖ = ({p}, {q})");

    let d = decompose_semi(2, 2, 2, 3);
    println!("u = 2, window 2|2, excitation ≤ 3: {} shapes, ok = {}", d.components.len(), d.is_ok());
}
