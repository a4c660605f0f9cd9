//! The abstract crystal interface and the tensor product rule.

use std::fmt;

use crate::alphabet::{coroot_pairing, Index, IndexKind, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Raise,
    Lower,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Raise => write!(f, "e"),
            Op::Lower => write!(f, "f"),
        }
    }
}

pub trait Crystal: Clone {
    fn weight(&self) -> Weight;

    fn apply(&self, i: Index, op: Op) -> Option<Self>;

    fn raise(&self, i: Index) -> Option<Self> {
        self.apply(i, Op::Raise)
    }

    fn lower(&self, i: Index) -> Option<Self> {
        self.apply(i, Op::Lower)
    }

    fn eps(&self, i: Index) -> usize {
        string_length(self, i, Op::Raise)
    }

    fn phi(&self, i: Index) -> usize {
        string_length(self, i, Op::Lower)
    }
}

fn string_length<C: Crystal>(b: &C, i: Index, op: Op) -> usize {
    let mut k = 0;
    let mut cur = b.clone();
    while let Some(next) = cur.apply(i, op) {
        k += 1;
        cur = next;
        if i.kind() == IndexKind::Odd {
            break;
        }
    }
    k
}

/// Which factor of b₁ ⊗ b₂ the operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The tensor product rule, given the statistics of the two factors.
pub fn tensor_side(
    i: Index,
    op: Op,
    phi1: usize,
    eps2: usize,
    eps1: usize,
    phi2: usize,
    pairing1: i64,
) -> Side {
    let left = match (i.kind(), op) {
        (IndexKind::Barred, Op::Raise) => phi1 >= eps2,
        (IndexKind::Barred, Op::Lower) => phi1 > eps2,
        (IndexKind::Unbarred, Op::Raise) => phi2 < eps1,
        (IndexKind::Unbarred, Op::Lower) => phi2 <= eps1,
        (IndexKind::Odd, _) => pairing1 > 0,
    };
    if left {
        Side::Left
    } else {
        Side::Right
    }
}

pub fn tensor_apply<A: Crystal, B: Crystal>(i: Index, op: Op, b1: &A, b2: &B) -> Option<(A, B)> {
    let side = tensor_side(i, op, b1.phi(i), b2.eps(i), b1.eps(i), b2.phi(i), coroot_pairing(i, &b1.weight()));
    match side {
        Side::Left => b1.apply(i, op).map(|x| (x, b2.clone())),
        Side::Right => b2.apply(i, op).map(|y| (b1.clone(), y)),
    }
}

/// A pair viewed as an element of a tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: Crystal, B: Crystal> Crystal for Tensor<A, B> {
    fn weight(&self) -> Weight {
        &self.0.weight() + &self.1.weight()
    }

    fn apply(&self, i: Index, op: Op) -> Option<Self> {
        tensor_apply(i, op, &self.0, &self.1).map(|(a, b)| Tensor(a, b))
    }
}
