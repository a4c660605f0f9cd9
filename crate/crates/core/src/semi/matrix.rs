//! The matrix model 𝓜^u: infinitely many rows, u columns, column k̄ counting
//! the letters of w^{(u−k+1)}. Operators are transported through Res_{m|n}.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::alphabet::{Index, IndexKind, Letter, Rank, Weight};
use crate::biword::{Bicrystal, IntMatrix};
use crate::crystal::Op;
use crate::dual::DualMatrix;
use crate::error::{CrystalError, Result};
use crate::partition::GeneralizedPartition;
use crate::semi::rational::RationalTableau;
use crate::semi::tableau::{p1_columns, tuple_apply, tuple_weight, tuple_window, SemiTableau};
use crate::semi::word::SemiWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SemiMatrixJson", into = "SemiMatrixJson")]
pub struct SemiMatrix {
    /// columns[c] = w^{(c+1)}, the matrix column \overline{u−c}.
    columns: Vec<SemiWord>,
}

#[derive(Serialize, Deserialize)]
pub struct SemiMatrixJson {
    pub u: usize,
    pub columns: Vec<SemiWord>,
}

impl TryFrom<SemiMatrixJson> for SemiMatrix {
    type Error = CrystalError;
    fn try_from(j: SemiMatrixJson) -> Result<SemiMatrix> {
        if j.columns.len() != j.u {
            return Err(CrystalError::InvalidMatrix(format!("{} columns given for u = {}", j.columns.len(), j.u)));
        }
        Ok(SemiMatrix { columns: j.columns })
    }
}

impl From<SemiMatrix> for SemiMatrixJson {
    fn from(a: SemiMatrix) -> SemiMatrixJson {
        SemiMatrixJson { u: a.columns.len(), columns: a.columns }
    }
}

/// Smallest (m, n) seeing index i, every column's deviation, and both parities.
fn row_window(columns: &[SemiWord], i: Option<Index>) -> (usize, usize) {
    let m = tuple_window(columns, i).max(1);
    let top = columns.iter().map(|w| w.max_unbarred()).max().unwrap_or(0);
    let need = match i.map(|i| (i.kind(), i.0)) {
        Some((IndexKind::Unbarred, p)) => p as usize + 1,
        _ => 1,
    };
    (m, top.max(need))
}

impl SemiMatrix {
    pub fn from_columns(columns: Vec<SemiWord>) -> SemiMatrix {
        SemiMatrix { columns }
    }

    pub fn vacuum(u: usize) -> SemiMatrix {
        SemiMatrix { columns: vec![SemiWord::highest(0); u] }
    }

    pub fn u(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[SemiWord] {
        &self.columns
    }

    /// a_{b, k̄}.
    pub fn entry(&self, b: Letter, k: usize) -> usize {
        self.columns[self.u() - k].count(b)
    }

    /// The smallest window holding every deviation from the vacuum.
    pub fn window(&self) -> (usize, usize) {
        row_window(&self.columns, None)
    }

    pub fn excitation(&self) -> usize {
        self.columns.iter().map(|w| w.excitation()).sum()
    }

    /// Res_{m|n}: the rows of 𝐁_{m|n}, as an element of 𝐌♯_{m|n,u|0}.
    pub fn res(&self, m: usize, n: usize) -> DualMatrix {
        let (rows, cols) = (Rank::new(m, n), Rank::new(self.u(), 0));
        let mut a = IntMatrix::zero(rows, cols);
        for (c, w) in self.columns.iter().enumerate() {
            for (r, b) in rows.letters().into_iter().enumerate() {
                *a.at_mut(r, c) = w.count(b) as u32;
            }
        }
        DualMatrix::new(a).expect("barred entries are 0 or 1")
    }

    /// Inverse of `res` for a window past every deviation.
    pub fn lift(d: &DualMatrix) -> SemiMatrix {
        let a = d.inner();
        let columns = (0..a.cols.size())
            .map(|c| {
                let mut letters = Vec::new();
                for (r, b) in a.rows.letters().into_iter().enumerate() {
                    letters.extend(std::iter::repeat_n(b, a.at(r, c) as usize));
                }
                SemiWord::from_window(a.rows.m, &letters).expect("columns of a dual matrix are windows")
            })
            .collect();
        SemiMatrix { columns }
    }

    /// wt(A) = uΛ + Σ m_b ε_b.
    pub fn weight(&self) -> Weight {
        tuple_weight(&self.columns)
    }

    /// wt*(A): the column of w^{(i)} carries −charge(w^{(i)}).
    pub fn dual_weight(&self) -> Weight {
        let u = self.u();
        Weight::from_coords(0, self.columns.iter().enumerate().map(|(c, w)| (Letter::barred((u - c) as u32), -w.charge() as i64)))
    }

    pub fn row_apply_in(&self, i: Index, op: Op, m: usize, n: usize) -> Option<SemiMatrix> {
        self.res(m, n).row_apply(i, op).map(|d| SemiMatrix::lift(&d))
    }

    pub fn col_apply_in(&self, j: Index, op: Op, m: usize, n: usize) -> Option<SemiMatrix> {
        self.res(m, n).col_apply(j, op).map(|d| SemiMatrix::lift(&d))
    }

    /// e_i, f_i through the smallest admissible window.
    pub fn row_apply(&self, i: Index, op: Op) -> Option<SemiMatrix> {
        let (m, n) = row_window(&self.columns, Some(i));
        self.row_apply_in(i, op, m, n)
    }

    /// e*_j, f*_j for j̄ ∈ I_u.
    pub fn col_apply(&self, j: Index, op: Op) -> Option<SemiMatrix> {
        let (m, n) = self.window();
        self.col_apply_in(j, op, m, n)
    }

    /// The same operator read directly off w^{(1)} ⊗ ⋯ ⊗ w^{(u)}.
    pub fn tensor_apply(&self, i: Index, op: Op) -> Option<SemiMatrix> {
        tuple_apply(&self.columns, i, op).map(SemiMatrix::from_columns)
    }

    pub fn col_indices(&self) -> Vec<Index> {
        (1..self.u() as i32).map(|k| Index(-k)).collect()
    }

    pub fn p1(&self) -> SemiTableau {
        p1_columns(&self.columns, 0)
    }

    pub fn p1_in(&self, extra: usize) -> SemiTableau {
        p1_columns(&self.columns, extra)
    }

    /// σ^{−k} of P♯₂(Res_{m|n} A); k is read off the weight difference.
    pub fn p2_in(&self, m: usize, n: usize) -> RationalTableau {
        let u = self.u();
        let (_, q) = self.res(m, n).rsk_pi_sharp();
        let t = RationalTableau::from_hook(&q, u).expect("P♯₂ lives over 𝐁_u");
        let diff = &t.weight() - &self.dual_weight();
        let shifts: BTreeSet<i64> = (1..=u as u32).map(|k| diff.coord(Letter::barred(k))).collect();
        assert_eq!(shifts.len(), 1, "weight difference {diff} is not constant");
        let k = *shifts.iter().next().expect("u ≥ 1");
        let mut s = t;
        for _ in 0..k {
            s = s.sigma_inverse().expect("σ⁻¹ of a rational tableau");
        }
        s
    }

    pub fn p2(&self) -> RationalTableau {
        let (m, n) = self.window();
        self.p2_in(m, n)
    }

    /// ϖ(A) = (𝒫₁(A), 𝒫₂(A)).
    pub fn varpi(&self) -> (SemiTableau, RationalTableau) {
        (self.p1(), self.p2())
    }

    /// Every matrix whose columns deviate only inside the (m, n) window,
    /// with total excitation at most `cap`.
    pub fn windowed(u: usize, m: usize, n: usize, cap: usize) -> Vec<SemiMatrix> {
        let pool = SemiWord::windowed(m, n, cap);
        let mut out = Vec::new();
        fn go(u: usize, pool: &[SemiWord], left: usize, cur: &mut Vec<SemiWord>, out: &mut Vec<SemiMatrix>) {
            if cur.len() == u {
                out.push(SemiMatrix { columns: cur.clone() });
                return;
            }
            for w in pool.iter().filter(|w| w.excitation() <= left) {
                cur.push(w.clone());
                go(u, pool, left - w.excitation(), cur, out);
                cur.pop();
            }
        }
        go(u, &pool, cap, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// 𝒜_λ: barred entries copy the columns of H^λ, unbarred entries are ν_{k+l}.
pub fn build_script_a(shape: &GeneralizedPartition) -> SemiMatrix {
    let u = shape.len();
    let h = SemiTableau::highest(shape);
    let mu: Vec<usize> = (1..=u + 1)
        .map(|i| h.columns().iter().map(|w| w.count(Letter::unbarred(i as u32))).sum())
        .collect();
    let nu: Vec<usize> = (0..u).map(|i| mu[i] - mu[i + 1]).collect();
    let m = tuple_window(h.columns(), None);
    // the (l+1)th column of H^λ as drawn, left to right, is w^{(u−l)}
    let columns = (0..u)
        .map(|l| {
            let w = &h.columns()[u - 1 - l];
            let mut letters: Vec<Letter> =
                w.window(m).expect("window of H^λ").into_iter().filter(|b| b.is_barred()).collect();
            for k in 1..=u - l {
                letters.extend(std::iter::repeat_n(Letter::unbarred(k as u32), nu[k + l - 1]));
            }
            SemiWord::from_window(m, &letters).expect("𝒜_λ column")
        })
        .collect();
    SemiMatrix { columns }
}

#[derive(Debug, Clone)]
pub struct SemiComponent {
    pub shape: GeneralizedPartition,
    pub highest: Option<SemiMatrix>,
    pub members: Vec<SemiMatrix>,
}

#[derive(Debug, Clone)]
pub struct SemiDecomposition {
    pub components: Vec<SemiComponent>,
    pub failures: Vec<String>,
}

impl SemiDecomposition {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Row indices whose operators can be evaluated inside the (m, n) window.
pub fn window_indices(m: usize, n: usize) -> Vec<Index> {
    let mut v: Vec<Index> = (1..m as i32).map(|p| Index(-p)).collect();
    if m >= 1 && n >= 1 {
        v.push(Index(0));
    }
    v.extend((1..n as i32).map(Index));
    v
}

/// The windowed slice of 𝓜^u checked against ϖ : 𝓜^u → ⊕ 𝐁(λ) × 𝐁_u(λ*).
pub fn decompose_semi(u: usize, m: usize, n: usize, cap: usize) -> SemiDecomposition {
    let all = SemiMatrix::windowed(u, m, n, cap);
    let mut failures = Vec::new();
    let mut images: HashMap<(SemiTableau, RationalTableau), SemiMatrix> = HashMap::new();
    let mut groups: BTreeMap<GeneralizedPartition, Vec<SemiMatrix>> = BTreeMap::new();
    for a in &all {
        let (p, q) = a.varpi();
        let shape = p.shape();
        if p.semi_weight() != a.weight() {
            failures.push(format!("wt differs from wt 𝒫₁ at {a}"));
        }
        if q.weight() != a.dual_weight() {
            failures.push(format!("wt* differs from wt 𝒫₂ at {a}"));
        }
        if *q.shape() != shape.star() {
            failures.push(format!("𝒫₂ has shape {} but 𝒫₁ has {shape} at {a}", q.shape()));
        }
        if let Some(b) = images.insert((p, q), a.clone()) {
            failures.push(format!("ϖ identifies {a} and {b}"));
        }
        groups.entry(shape).or_default().push(a.clone());
    }
    let members: BTreeSet<&SemiMatrix> = all.iter().collect();
    let mut components = Vec::new();
    for (shape, group) in groups {
        let highest: Vec<&SemiMatrix> = group
            .iter()
            .filter(|a| {
                let (p, q) = a.varpi();
                p == SemiTableau::highest(&shape) && q == RationalTableau::highest(&shape.star())
            })
            .collect();
        let script = build_script_a(&shape);
        let expected = members.contains(&script);
        match (highest.as_slice(), expected) {
            ([h], true) if **h == script => {}
            ([], false) => {}
            _ => failures.push(format!("highest elements of shape {shape} are not the windowed 𝒜_λ")),
        }
        let count = SemiTableau::windowed(&shape, m, n, cap).len() * RationalTableau::enumerate(&shape.star()).len();
        if count != group.len() {
            failures.push(format!("shape {shape}: {} matrices but |𝐁(λ)|·|𝐁_u(λ*)| = {count}", group.len()));
        }
        components.push(SemiComponent { shape, highest: highest.first().map(|h| (*h).clone()), members: group });
    }
    failures.extend(semi_equivariance_failures(&all, m, n));
    SemiDecomposition { components, failures }
}

/// ϖ intertwines both operator families and the two families commute.
pub fn semi_equivariance_failures(all: &[SemiMatrix], m: usize, n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for a in all {
        let (p, q) = a.varpi();
        for i in window_indices(m, n) {
            for op in [Op::Raise, Op::Lower] {
                let b = a.row_apply(i, op);
                if b.as_ref().map(|b| b.p1()) != p.semi_apply(i, op) {
                    out.push(format!("𝒫₁ does not commute with {op}_{i} at {a}"));
                }
                if let Some(b) = &b {
                    if b.p2() != q {
                        out.push(format!("{op}_{i} moves 𝒫₂ at {a}"));
                    }
                }
                for j in a.col_indices() {
                    for op2 in [Op::Raise, Op::Lower] {
                        let left = b.as_ref().and_then(|b| b.col_apply(j, op2));
                        let right = a.col_apply(j, op2).and_then(|c| c.row_apply(i, op));
                        if left != right {
                            out.push(format!("{op}_{i} and {op2}*_{j} do not commute at {a}"));
                        }
                    }
                }
            }
        }
        for j in a.col_indices() {
            for op in [Op::Raise, Op::Lower] {
                let c = a.col_apply(j, op);
                if c.as_ref().map(|c| c.p2()) != q.rational_apply(j, op) {
                    out.push(format!("𝒫₂ does not commute with {op}*_{j} at {a}"));
                }
                if let Some(c) = &c {
                    if c.p1() != p {
                        out.push(format!("{op}*_{j} moves 𝒫₁ at {a}"));
                    }
                }
            }
        }
    }
    out
}

/// A matrix with columns drawn uniformly from the (m, n) window, total
/// excitation at most `cap`.
pub fn random_semi_matrix<R: Rng + ?Sized>(rng: &mut R, u: usize, m: usize, n: usize, cap: usize) -> SemiMatrix {
    let pool = SemiWord::windowed(m, n, cap);
    let mut left = cap;
    let columns = (0..u)
        .map(|_| {
            let fits: Vec<&SemiWord> = pool.iter().filter(|w| w.excitation() <= left).collect();
            let w = (*fits.choose(rng).expect("the vacuum always fits")).clone();
            left -= w.excitation();
            w
        })
        .collect();
    SemiMatrix { columns }
}

/// Operators, 𝒫₁ and 𝒫₂ must not change when the window grows past the
/// smallest admissible one.
pub fn window_failures(a: &SemiMatrix, grow: usize) -> Vec<String> {
    let mut out = Vec::new();
    let (m0, n0) = a.window();
    let (p, q) = a.varpi();
    for k in 1..=grow {
        if a.p1_in(k) != p {
            out.push(format!("𝒫₁ changes with {k} extra rows at {a}"));
        }
        if a.p2_in(m0 + k, n0 + k) != q {
            out.push(format!("𝒫₂ changes in window {}|{} at {a}", m0 + k, n0 + k));
        }
    }
    for i in window_indices(m0 + 1, n0 + 1) {
        let (mi, ni) = row_window(&a.columns, Some(i));
        for op in [Op::Raise, Op::Lower] {
            let base = a.row_apply(i, op);
            if base != a.tensor_apply(i, op) {
                out.push(format!("{op}_{i} through Res differs from the tensor rule at {a}"));
            }
            for k in 1..=grow {
                if a.row_apply_in(i, op, mi + k, ni + k) != base {
                    out.push(format!("{op}_{i} changes in window {}|{} at {a}", mi + k, ni + k));
                }
            }
        }
    }
    for j in a.col_indices() {
        for op in [Op::Raise, Op::Lower] {
            let base = a.col_apply(j, op);
            for k in 1..=grow {
                if a.col_apply_in(j, op, m0 + k, n0 + k) != base {
                    out.push(format!("{op}*_{j} changes in window {}|{} at {a}", m0 + k, n0 + k));
                }
            }
        }
    }
    out
}

impl fmt::Display for SemiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = self.window();
        let rows: Vec<String> = Rank::new(m, n)
            .letters()
            .into_iter()
            .map(|b| self.columns.iter().map(|w| w.count(b).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(m: usize, codes: &[i32]) -> SemiWord {
        SemiWord::from_window(m, &codes.iter().map(|&c| Letter(c)).collect::<Vec<_>>()).unwrap()
    }

    fn example() -> SemiMatrix {
        SemiMatrix::from_columns(vec![
            word(5, &[-5, -4, -2, 2, 2]),
            word(5, &[-5, -4, -3, 3]),
            word(5, &[-5, -3, -2, 1, 1, 1]),
        ])
    }

    #[test]
    fn the_correspondence_example() {
        let a = example();
        let r = a.res(5, 3);
        let expect = vec![
            vec![1, 1, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![0, 0, 0],
            vec![0, 0, 3],
            vec![2, 0, 0],
            vec![0, 1, 0],
        ];
        assert_eq!(r.inner().to_rows(), expect);
        assert_eq!(SemiMatrix::lift(&r), a);
        assert_eq!(a.entry(Letter(-2), 3), 1);
        assert_eq!(a.dual_weight(), Weight::from_coords(0, [(Letter(-2), -1), (Letter(-1), 1)]));
    }

    #[test]
    fn p2_of_the_example() {
        let a = example();
        let (_, t) = a.res(4, 3).rsk_pi_sharp();
        assert_eq!(t.row_codes(), vec![vec![-3, -3, -3, -3, -2, -1], vec![-2, -2, -1, -1, -1], vec![-1]]);
        let p = a.p2();
        assert_eq!(p.shape().parts(), &[2, 1, -3]);
        assert_eq!(p.positive_rows(), &[vec![2, 1], vec![1], vec![]]);
        assert_eq!(p.negative_rows(), &[vec![], vec![], vec![1, 2, 2]]);
        assert_eq!(a.p2_in(6, 4), p);
        assert_eq!(a.p1().shape().parts(), &[3, -1, -2]);
    }

    #[test]
    fn vacuum() {
        let v = SemiMatrix::vacuum(3);
        let r = v.res(2, 2).inner().to_rows();
        assert_eq!(r, vec![vec![1, 1, 1], vec![1, 1, 1], vec![0, 0, 0], vec![0, 0, 0]]);
        let (p, q) = v.varpi();
        assert_eq!(p, SemiTableau::highest(&GeneralizedPartition::zero(3)));
        assert_eq!(q, RationalTableau::empty(3));
        assert_eq!(build_script_a(&GeneralizedPartition::zero(3)), v);
    }

    #[test]
    fn script_a_is_highest() {
        // the one missing barred letter sits in column 1̄
        let one = build_script_a(&GeneralizedPartition::new(vec![1, 0, 0]).unwrap());
        assert_eq!(one.columns(), &[SemiWord::highest(0), SemiWord::highest(0), SemiWord::highest(1)]);
        for l in GeneralizedPartition::in_box(3, -2, 2) {
            let a = build_script_a(&l);
            let (p, q) = a.varpi();
            assert_eq!(p, SemiTableau::highest(&l), "𝒫₁ of 𝒜_{l}");
            assert_eq!(q, RationalTableau::highest(&l.star()), "𝒫₂ of 𝒜_{l}");
        }
    }

    #[test]
    fn res_transports_the_tensor_operators() {
        for a in SemiMatrix::windowed(2, 2, 2, 3) {
            for i in window_indices(3, 3) {
                for op in [Op::Raise, Op::Lower] {
                    assert_eq!(a.row_apply(i, op), a.tensor_apply(i, op));
                    assert_eq!(a.row_apply(i, op), a.row_apply_in(i, op, 5, 4));
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&SemiMatrix::vacuum(1)).unwrap();
        assert_eq!(s, r#"{"u":1,"columns":[{"charge":0,"tail":[]}]}"#);
        assert!(serde_json::from_str::<SemiMatrix>(r#"{"u":2,"columns":[{"charge":0,"tail":[]}]}"#).is_err());
    }

    #[test]
    fn small_decomposition() {
        let d = decompose_semi(1, 2, 2, 2);
        assert!(d.is_ok(), "{:?}", d.failures);
        for c in &d.components {
            assert_eq!(c.highest.as_ref().map(|h| h.p1()), Some(SemiTableau::highest(&c.shape)));
        }
        let d = decompose_semi(2, 2, 2, 3);
        assert!(d.is_ok(), "{:?}", &d.failures[..d.failures.len().min(5)]);
    }
}
