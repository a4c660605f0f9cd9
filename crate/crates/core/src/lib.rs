pub mod alphabet;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod partition;
pub mod tableau;
pub mod word;
pub mod biword;
pub mod matrix;
pub mod symmetric;
pub mod dual;
pub mod poly;
pub mod semi;
pub mod characters;
pub mod cli;
