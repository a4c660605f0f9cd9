//! The dual bicrystal 𝐌♯ (equal-parity entries at most 1), π♯, A♯_λ and the
//! rotation ρ onto 𝐌.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{Index, Letter, Rank};
use crate::biword::{
    classify_highest_in, decompose_bicrystal, Bicrystal, Biword, Decomposition, IntMatrix, PairOrder,
};
use crate::crystal::Op;
use crate::error::{CrystalError, Result};
use crate::matrix::{tail_differences, SuperMatrix};
use crate::partition::Partition;
use crate::tableau::HookTableau;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualMatrix(IntMatrix);

pub fn dual_cap(b: Letter, b2: Letter) -> Option<u32> {
    (b.is_barred() == b2.is_barred()).then_some(1)
}

/// ≺: column first; barred column ties by row ascending, unbarred by row descending.
pub fn sharp_cmp(p: (Letter, Letter), q: (Letter, Letter)) -> Ordering {
    let ((i, j), (k, l)) = (p, q);
    j.cmp(&l).then_with(|| if j.is_barred() { i.cmp(&k) } else { k.cmp(&i) })
}

/// ≺′: row descending; barred row ties by column ascending, unbarred by column descending.
pub fn sharp_prime_cmp(p: (Letter, Letter), q: (Letter, Letter)) -> Ordering {
    let ((i, j), (k, l)) = (p, q);
    k.cmp(&i).then_with(|| if i.is_barred() { j.cmp(&l) } else { l.cmp(&j) })
}

pub fn sharp_less(p: (Letter, Letter), q: (Letter, Letter)) -> bool {
    sharp_cmp(p, q) == Ordering::Less
}

pub fn sharp_prime_less(p: (Letter, Letter), q: (Letter, Letter)) -> bool {
    sharp_prime_cmp(p, q) == Ordering::Less
}

impl DualMatrix {
    pub fn new(a: IntMatrix) -> Result<DualMatrix> {
        a.check_caps(dual_cap)?;
        Ok(DualMatrix(a))
    }

    pub fn zero(rows: Rank, cols: Rank) -> DualMatrix {
        DualMatrix(IntMatrix::zero(rows, cols))
    }

    pub fn from_rows(rows: Rank, cols: Rank, entries: &[Vec<u32>]) -> Result<DualMatrix> {
        DualMatrix::new(IntMatrix::from_rows(rows, cols, entries)?)
    }

    pub fn inner(&self) -> &IntMatrix {
        &self.0
    }

    pub fn sharp(&self) -> Biword {
        self.0.biword(PairOrder::Sharp)
    }

    pub fn sharp_star(&self) -> Biword {
        self.0.biword(PairOrder::SharpStar)
    }

    pub fn rsk_pi_sharp(&self) -> (HookTableau, HookTableau) {
        self.0.insertion_pair(PairOrder::Sharp, PairOrder::SharpStar)
    }

    /// Clockwise quarter turn: 𝐌♯_{m|n,u|v} → 𝐌_{u|v,n|m}.
    pub fn rotate90(&self) -> SuperMatrix {
        let a = &self.0;
        let (nr, nc) = (a.rows.size(), a.cols.size());
        let mut out = IntMatrix::zero(a.cols, Rank::new(a.rows.n, a.rows.m));
        for r in 0..nc {
            for c in 0..nr {
                *out.at_mut(r, c) = a.at(nr - 1 - c, r);
            }
        }
        SuperMatrix::new(out).expect("rotation exchanges the parity caps")
    }

    /// Inverse of `rotate90`.
    pub fn unrotate(b: &SuperMatrix) -> DualMatrix {
        let b = b.inner();
        let rows = Rank::new(b.cols.n, b.cols.m);
        let (nr, nc) = (rows.size(), b.rows.size());
        let mut out = IntMatrix::zero(rows, b.rows);
        for r in 0..nc {
            for c in 0..nr {
                *out.at_mut(nr - 1 - c, r) = b.at(r, c);
            }
        }
        DualMatrix::new(out).expect("rotation exchanges the parity caps")
    }

    pub fn enumerate(rows: Rank, cols: Rank, bound: u32) -> Vec<DualMatrix> {
        IntMatrix::enumerate(rows, cols, bound, dual_cap).into_iter().map(DualMatrix).collect()
    }
}

impl Bicrystal for DualMatrix {
    fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    fn row_apply(&self, i: Index, op: Op) -> Option<Self> {
        self.0.apply_rows(PairOrder::Sharp, i, op).map(DualMatrix)
    }

    fn col_apply(&self, j: Index, op: Op) -> Option<Self> {
        self.0.apply_cols(PairOrder::SharpStar, j, op).map(DualMatrix)
    }

    fn insertion(&self) -> (HookTableau, HookTableau) {
        self.rsk_pi_sharp()
    }
}

impl fmt::Display for DualMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The highest weight matrix A♯_λ for λ ∈ 𝒫_{m|n} ∩ 𝒫_{v|u}.
pub fn build_a_sharp_lambda(shape: &Partition, rows: Rank, cols: Rank) -> Result<DualMatrix> {
    shape.check_hook(rows)?;
    shape.check_hook(Rank::new(cols.n, cols.m))?;
    let (m, u) = (rows.m, cols.m);
    let mut a = IntMatrix::zero(rows, cols);
    for k in 0..m {
        let row = Letter(-((m - k) as i32));
        for l in 0..u {
            if shape.part(k + 1) as usize > l {
                a.set(row, Letter(-((u - l) as i32)), 1);
            }
        }
        let t = k + 1;
        if t <= cols.n {
            a.set(row, Letter(t as i32), shape.part(t).saturating_sub(u as u32));
        }
    }
    let nu = tail_differences(shape, m);
    for s in 1..=rows.n {
        for l in 0..u {
            if let Some(&x) = nu.get(s + l - 1) {
                a.set(Letter(s as i32), Letter(-((u - l) as i32)), x);
            }
        }
    }
    DualMatrix::new(a).map_err(|e| CrystalError::InvalidMatrix(format!("A♯_λ for {shape}: {e}")))
}

pub fn classify_highest_dual(rows: Rank, cols: Rank, bound: u32) -> Vec<DualMatrix> {
    classify_highest_in(&DualMatrix::enumerate(rows, cols, bound))
}

pub fn decompose_dual(rows: Rank, cols: Rank, bound: u32) -> Decomposition<DualMatrix> {
    let all = DualMatrix::enumerate(rows, cols, bound);
    decompose_bicrystal(&all, Partition::conjugate, |s| build_a_sharp_lambda(s, rows, cols).ok())
}

/// The index on 𝐌_{u|v,n|m} that the rotation pairs with a row index of 𝐌♯_{m|n,u|v}.
pub fn rotated_index(i: Index) -> Index {
    Index(-i.0)
}

pub fn flip(op: Op) -> Op {
    match op {
        Op::Raise => Op::Lower,
        Op::Lower => Op::Raise,
    }
}

/// Checks (x_i A)^ρ = x̄*_{i'} A^ρ and (x*_j A)^ρ = x_j A^ρ on every matrix given.
pub fn rotation_failures(all: &[DualMatrix]) -> Vec<String> {
    let mut out = Vec::new();
    for a in all {
        let r = a.rotate90();
        for op in [Op::Raise, Op::Lower] {
            for i in a.inner().rows.indices() {
                let lhs = a.row_apply(i, op).map(|b| b.rotate90());
                let rhs = r.col_apply(rotated_index(i), flip(op));
                if lhs != rhs {
                    out.push(format!("{op}_{i} at {a}"));
                }
            }
            for j in a.inner().cols.indices() {
                let lhs = a.col_apply(j, op).map(|b| b.rotate90());
                let rhs = r.row_apply(j, op);
                if lhs != rhs {
                    out.push(format!("{op}*_{j} at {a}"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::highest_weight_tableau;

    fn r22() -> Rank {
        Rank::new(2, 2)
    }

    fn example() -> DualMatrix {
        DualMatrix::from_rows(r22(), r22(), &[vec![1, 1, 0, 0], vec![0, 0, 2, 1], vec![0, 1, 1, 0], vec![2, 0, 0, 0]])
            .unwrap()
    }

    fn codes(v: &[Letter]) -> Vec<i32> {
        v.iter().map(|b| b.0).collect()
    }

    #[test]
    fn biwords_of_example() {
        let a = example();
        let s = a.sharp();
        assert_eq!(codes(&s.top), vec![-2, 2, 2, -2, 1, 1, -1, -1, -1]);
        assert_eq!(codes(&s.bottom), vec![-2, -2, -2, -1, -1, 1, 1, 1, 2]);
        let t = a.sharp_star();
        assert_eq!(codes(&t.top), vec![2, 2, 1, 1, -1, -1, -1, -2, -2]);
        assert_eq!(codes(&t.bottom), vec![-2, -2, 1, -1, 1, 1, 2, -2, -1]);
        let pairs: Vec<_> = s.top.iter().copied().zip(s.bottom.iter().copied()).collect();
        assert!(pairs.windows(2).all(|w| sharp_cmp(w[0], w[1]) != Ordering::Greater));
        let pairs: Vec<_> = t.top.iter().copied().zip(t.bottom.iter().copied()).collect();
        assert!(pairs.windows(2).all(|w| sharp_prime_cmp(w[0], w[1]) != Ordering::Greater));
        assert!(sharp_less((Letter(-2), Letter(-2)), (Letter(-1), Letter(-2))));
    }

    #[test]
    fn pi_sharp_of_example() {
        let (p, q) = example().rsk_pi_sharp();
        assert_eq!(p.row_codes(), vec![vec![-2, -2, -1, 1, 2], vec![-1, -1], vec![1, 2]]);
        // 𝐥 has two 1̄'s and three 1's
        assert_eq!(q.row_codes(), vec![vec![-2, -2, -2], vec![-1, -1, 1], vec![1], vec![1], vec![2]]);
    }

    #[test]
    fn figure_rotation() {
        let a = DualMatrix::from_rows(
            r22(),
            Rank::new(3, 3),
            &[vec![0, 1, 1, 0, 0, 2], vec![1, 0, 0, 2, 1, 0], vec![3, 0, 1, 1, 0, 1], vec![0, 2, 0, 0, 0, 0]],
        )
        .unwrap();
        let r = a.rotate90();
        assert_eq!(
            r.inner().to_rows(),
            vec![vec![0, 3, 1, 0], vec![2, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 1, 2, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 2]]
        );
        assert_eq!(DualMatrix::unrotate(&r), a);
    }

    #[test]
    fn a_sharp_example() {
        let lam = Partition::new(vec![7, 6, 2, 2, 1, 1]).unwrap();
        let (rows, cols) = (Rank::new(3, 2), Rank::new(4, 3));
        let a = build_a_sharp_lambda(&lam, rows, cols).unwrap();
        assert_eq!(
            a.inner().to_rows(),
            vec![
                vec![1, 1, 1, 1, 3, 0, 0],
                vec![1, 1, 1, 1, 0, 2, 0],
                vec![1, 1, 0, 0, 0, 0, 0],
                vec![2, 1, 0, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0, 0],
            ]
        );
        let (p, q) = a.rsk_pi_sharp();
        assert_eq!(p, highest_weight_tableau(rows, &lam).unwrap());
        assert_eq!(q, highest_weight_tableau(cols, &lam.conjugate()).unwrap());
    }

    #[test]
    fn rotation_intertwines_small() {
        let all = DualMatrix::enumerate(r22(), Rank::new(1, 1), 3);
        assert!(rotation_failures(&all).is_empty());
    }

    #[test]
    fn small_dual_decomposition() {
        let r = Rank::new(1, 1);
        let d = decompose_dual(r, r, 2);
        assert!(d.is_ok(), "{:?}", d.failures);
        for c in &d.components {
            assert_eq!(c.partner, c.shape.conjugate());
        }
    }
}
