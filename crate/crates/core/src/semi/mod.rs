//! The Fock space crystal of semi-infinite words, its tableaux, rational
//! tableaux for gl_u, and the matrix model 𝓜^u with ϖ.

pub mod matrix;
pub mod rational;
pub mod tableau;
pub mod word;

pub use matrix::{
    build_script_a, decompose_semi, random_semi_matrix, window_failures, SemiComponent, SemiDecomposition, SemiMatrix,
};
pub use rational::{RLetter, RationalTableau};
pub use tableau::{semi_tableau_check, SemiTableau};
pub use word::SemiWord;
