//! Export the crystal graph 𝐁_{1|1}((2,1)) as Graphviz DOT.
//!
//! `cargo run --example crystal_graph_dot | dot -Tsvg > b.svg`

use supercrystal::alphabet::Rank;
use supercrystal::partition::Partition;
use supercrystal::tableau::{highest_weight_tableau, tableau_component};

fn main() {
    let shape = Partition::new(vec![2, 1]).expect("partition");
    let h = highest_weight_tableau(Rank::new(1, 1), &shape).expect("hook shape");
    let g = tableau_component(&h);
    print!("{}", g.to_dot("B", |t| t.to_string().replace('\n', "/")));
}
