//! The bicrystal 𝐌 of matrices with mixed-parity entries at most 1, and the
//! super RSK map π.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{Index, Letter, Rank};
use crate::biword::{
    classify_highest_in, decompose_bicrystal, Bicrystal, Biword, Decomposition, IntMatrix, PairOrder,
};
use crate::crystal::Op;
use crate::error::{CrystalError, Result};
use crate::partition::Partition;
use crate::tableau::HookTableau;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMatrix(IntMatrix);

/// Entry cap of 𝐌.
pub fn super_cap(b: Letter, b2: Letter) -> Option<u32> {
    (b.is_barred() != b2.is_barred()).then_some(1)
}

/// The super lexicographic order on (row, column) pairs.
pub fn super_lex_cmp(p: (Letter, Letter), q: (Letter, Letter)) -> Ordering {
    let ((i, j), (k, l)) = (p, q);
    j.cmp(&l).then_with(|| if j.is_barred() { k.cmp(&i) } else { i.cmp(&k) })
}

pub fn super_lex_less(p: (Letter, Letter), q: (Letter, Letter)) -> bool {
    super_lex_cmp(p, q) == Ordering::Less
}

impl SuperMatrix {
    pub fn new(a: IntMatrix) -> Result<SuperMatrix> {
        a.check_caps(super_cap)?;
        Ok(SuperMatrix(a))
    }

    pub fn zero(rows: Rank, cols: Rank) -> SuperMatrix {
        SuperMatrix(IntMatrix::zero(rows, cols))
    }

    pub fn from_rows(rows: Rank, cols: Rank, entries: &[Vec<u32>]) -> Result<SuperMatrix> {
        SuperMatrix::new(IntMatrix::from_rows(rows, cols, entries)?)
    }

    pub fn inner(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_inner(self) -> IntMatrix {
        self.0
    }

    /// (𝐢, 𝐣) sorted in the super lexicographic order.
    pub fn omega(&self) -> Biword {
        self.0.biword(PairOrder::Omega)
    }

    /// (𝐤, 𝐥) with (𝐥, 𝐤) sorted super lexicographically.
    pub fn omega_star(&self) -> Biword {
        self.0.biword(PairOrder::OmegaStar)
    }

    pub fn from_biword(rows: Rank, cols: Rank, top: &[Letter], bottom: &[Letter]) -> Result<SuperMatrix> {
        SuperMatrix::new(IntMatrix::from_pairs(rows, cols, top, bottom)?)
    }

    pub fn transpose(&self) -> SuperMatrix {
        SuperMatrix(self.0.transpose())
    }

    pub fn rsk_pi(&self) -> (HookTableau, HookTableau) {
        self.0.insertion_pair(PairOrder::Omega, PairOrder::OmegaStar)
    }

    pub fn enumerate(rows: Rank, cols: Rank, bound: u32) -> Vec<SuperMatrix> {
        IntMatrix::enumerate(rows, cols, bound, super_cap).into_iter().map(SuperMatrix).collect()
    }
}

impl Bicrystal for SuperMatrix {
    fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    fn row_apply(&self, i: Index, op: Op) -> Option<Self> {
        self.0.apply_rows(PairOrder::Omega, i, op).map(SuperMatrix)
    }

    fn col_apply(&self, j: Index, op: Op) -> Option<Self> {
        self.0.apply_cols(PairOrder::OmegaStar, j, op).map(SuperMatrix)
    }

    fn insertion(&self) -> (HookTableau, HookTableau) {
        self.rsk_pi()
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The highest weight matrix A_λ for λ in both hook sets.
pub fn build_a_lambda(shape: &Partition, rows: Rank, cols: Rank) -> Result<SuperMatrix> {
    shape.check_hook(rows)?;
    shape.check_hook(cols)?;
    if rows.m < cols.m {
        return Ok(build_a_lambda(shape, cols, rows)?.transpose());
    }
    let (m, u) = (rows.m, cols.m);
    let mut a = IntMatrix::zero(rows, cols);
    for k in 0..u {
        a.set(Letter(-((m - k) as i32)), Letter(-((u - k) as i32)), shape.part(k + 1));
    }
    for k in u..m {
        for t in 1..=cols.n {
            if shape.part(k + 1) as usize >= t {
                a.set(Letter(-((m - k) as i32)), Letter(t as i32), 1);
            }
        }
    }
    let nu = tail_differences(shape, m);
    for s in 1..=rows.n {
        for t in 1..=cols.n {
            if let Some(&x) = nu.get(s + t - 2) {
                a.set(Letter(s as i32), Letter(t as i32), x);
            }
        }
    }
    SuperMatrix::new(a).map_err(|e| CrystalError::InvalidMatrix(format!("A_λ for {shape}: {e}")))
}

/// ν₁ … ν_ℓ with (ν₁+⋯+ν_ℓ, ν₂+⋯+ν_ℓ, …, ν_ℓ) = (λ_{m+1}, λ_{m+2}, …)′.
pub fn tail_differences(shape: &Partition, m: usize) -> Vec<u32> {
    let tail = Partition::new(shape.parts().iter().skip(m).copied().collect()).expect("tail of a partition");
    let c = tail.conjugate();
    (1..=c.len()).map(|i| c.part(i) - c.part(i + 1)).collect()
}

pub fn classify_highest(rows: Rank, cols: Rank, bound: u32) -> Vec<SuperMatrix> {
    classify_highest_in(&SuperMatrix::enumerate(rows, cols, bound))
}

pub fn decompose(rows: Rank, cols: Rank, bound: u32) -> Decomposition<SuperMatrix> {
    let all = SuperMatrix::enumerate(rows, cols, bound);
    decompose_bicrystal(&all, |s| s.clone(), |s| build_a_lambda(s, rows, cols).ok())
}
