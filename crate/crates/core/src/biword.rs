//! Non-negative integer matrices indexed by two super alphabets, their biword
//! encodings, and the machinery shared by the finite bicrystals.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Index, Letter, Rank, Weight};
use crate::crystal::Op;
use crate::error::{CrystalError, Result};
use crate::partition::Partition;
use crate::tableau::{enumerate_tableaux, highest_weight_tableau, p_tableau, HookTableau};
use crate::word::locate;

/// Dense matrix with rows over `rows` and columns over `cols`, both in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    pub rows: Rank,
    pub cols: Rank,
    data: Vec<u32>,
}

/// The four orders on (row, column) pairs used to turn a matrix into a biword.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrder {
    /// Column-major; barred column ties by row descending, unbarred ascending.
    Omega,
    /// Row-major; barred row ties by column descending, unbarred ascending.
    OmegaStar,
    /// Column-major; barred column ties by row ascending, unbarred descending.
    Sharp,
    /// Rows descending; barred row ties by column ascending, unbarred descending.
    SharpStar,
}

/// Equal-length row and column words, with the matrix cell behind each position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biword {
    pub top: Vec<Letter>,
    pub bottom: Vec<Letter>,
    cells: Vec<(usize, usize)>,
}

impl IntMatrix {
    pub fn zero(rows: Rank, cols: Rank) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows.size() * cols.size()] }
    }

    pub fn from_rows(rows: Rank, cols: Rank, entries: &[Vec<u32>]) -> Result<IntMatrix> {
        if entries.len() != rows.size() || entries.iter().any(|r| r.len() != cols.size()) {
            return Err(CrystalError::InvalidMatrix(format!(
                "expected {}×{} entries",
                rows.size(),
                cols.size()
            )));
        }
        Ok(IntMatrix { rows, cols, data: entries.concat() })
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.cols.size().max(1)).map(<[u32]>::to_vec).take(self.rows.size()).collect()
    }

    pub fn at(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols.size() + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut u32 {
        let w = self.cols.size();
        &mut self.data[r * w + c]
    }

    pub fn get(&self, b: Letter, b2: Letter) -> u32 {
        self.at(self.rows.position(b), self.cols.position(b2))
    }

    pub fn set(&mut self, b: Letter, b2: Letter, v: u32) {
        let (r, c) = (self.rows.position(b), self.cols.position(b2));
        *self.at_mut(r, c) = v;
    }

    pub fn total(&self) -> u32 {
        self.data.iter().sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows.size() {
            for c in 0..self.cols.size() {
                *t.at_mut(c, r) = self.at(r, c);
            }
        }
        t
    }

    /// Largest cell value violating `cap`, if any.
    pub fn check_caps(&self, cap: impl Fn(Letter, Letter) -> Option<u32>) -> Result<()> {
        for r in 0..self.rows.size() {
            for c in 0..self.cols.size() {
                let (b, b2) = (self.rows.letter_at(r), self.cols.letter_at(c));
                if let Some(k) = cap(b, b2) {
                    if self.at(r, c) > k {
                        return Err(CrystalError::InvalidMatrix(format!(
                            "entry ({b}, {b2}) = {} exceeds {k}",
                            self.at(r, c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn cell_order(&self, order: PairOrder) -> Vec<(usize, usize)> {
        let (nr, nc) = (self.rows.size(), self.cols.size());
        let mut out = Vec::with_capacity(nr * nc);
        match order {
            PairOrder::Omega | PairOrder::Sharp => {
                for c in 0..nc {
                    let barred = self.cols.letter_at(c).is_barred();
                    let ascending = barred == (order == PairOrder::Sharp);
                    for k in 0..nr {
                        let r = if ascending { k } else { nr - 1 - k };
                        out.push((r, c));
                    }
                }
            }
            PairOrder::OmegaStar => {
                for r in 0..nr {
                    let barred = self.rows.letter_at(r).is_barred();
                    for k in 0..nc {
                        let c = if barred { nc - 1 - k } else { k };
                        out.push((r, c));
                    }
                }
            }
            PairOrder::SharpStar => {
                for r in (0..nr).rev() {
                    let barred = self.rows.letter_at(r).is_barred();
                    for k in 0..nc {
                        let c = if barred { k } else { nc - 1 - k };
                        out.push((r, c));
                    }
                }
            }
        }
        out
    }

    pub fn biword(&self, order: PairOrder) -> Biword {
        let mut bw = Biword { top: Vec::new(), bottom: Vec::new(), cells: Vec::new() };
        for (r, c) in self.cell_order(order) {
            for _ in 0..self.at(r, c) {
                bw.top.push(self.rows.letter_at(r));
                bw.bottom.push(self.cols.letter_at(c));
                bw.cells.push((r, c));
            }
        }
        bw
    }

    /// Inverse of `biword`: count the pairs.
    pub fn from_pairs(rows: Rank, cols: Rank, top: &[Letter], bottom: &[Letter]) -> Result<IntMatrix> {
        let mut a = IntMatrix::zero(rows, cols);
        for (&b, &b2) in top.iter().zip(bottom) {
            rows.check_letter(b)?;
            cols.check_letter(b2)?;
            *a.at_mut(rows.position(b), cols.position(b2)) += 1;
        }
        Ok(a)
    }

    /// Operator on the row word of the biword in `order`.
    pub fn apply_rows(&self, order: PairOrder, i: Index, op: Op) -> Option<IntMatrix> {
        if !self.rows.contains_index(i) {
            return None;
        }
        let bw = self.biword(order);
        let (p, b) = locate(i, op, &bw.top)?;
        let (r, c) = bw.cells[p];
        let mut out = self.clone();
        *out.at_mut(r, c) -= 1;
        *out.at_mut(self.rows.position(b), c) += 1;
        Some(out)
    }

    /// Operator on the column word of the biword in `order`.
    pub fn apply_cols(&self, order: PairOrder, j: Index, op: Op) -> Option<IntMatrix> {
        if !self.cols.contains_index(j) {
            return None;
        }
        let bw = self.biword(order);
        let (p, b) = locate(j, op, &bw.bottom)?;
        let (r, c) = bw.cells[p];
        let mut out = self.clone();
        *out.at_mut(r, c) -= 1;
        *out.at_mut(r, self.cols.position(b)) += 1;
        Some(out)
    }

    /// (P of the row word under `row_order`, P of the column word under `col_order`).
    pub fn insertion_pair(&self, row_order: PairOrder, col_order: PairOrder) -> (HookTableau, HookTableau) {
        let top = self.biword(row_order).top;
        let bottom = self.biword(col_order).bottom;
        (p_tableau(self.rows, &top), p_tableau(self.cols, &bottom))
    }

    pub fn row_weight(&self) -> Weight {
        let mut w = Weight::zero();
        for r in 0..self.rows.size() {
            let s: u32 = (0..self.cols.size()).map(|c| self.at(r, c)).sum();
            w.add_to(self.rows.letter_at(r), s as i64);
        }
        w
    }

    pub fn col_weight(&self) -> Weight {
        let mut w = Weight::zero();
        for c in 0..self.cols.size() {
            let s: u32 = (0..self.rows.size()).map(|r| self.at(r, c)).sum();
            w.add_to(self.cols.letter_at(c), s as i64);
        }
        w
    }

    /// Every matrix with entry sum ≤ `bound` whose entries respect `cap`.
    pub fn enumerate(rows: Rank, cols: Rank, bound: u32, cap: impl Fn(Letter, Letter) -> Option<u32>) -> Vec<IntMatrix> {
        let caps: Vec<u32> = (0..rows.size())
            .flat_map(|r| (0..cols.size()).map(move |c| (r, c)))
            .map(|(r, c)| cap(rows.letter_at(r), cols.letter_at(c)).unwrap_or(u32::MAX))
            .collect();
        let mut out = Vec::new();
        let mut cur = IntMatrix::zero(rows, cols);
        fn go(k: usize, left: u32, caps: &[u32], cur: &mut IntMatrix, out: &mut Vec<IntMatrix>) {
            if k == caps.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..=left.min(caps[k]) {
                cur.data[k] = v;
                go(k + 1, left - v, caps, cur, out);
            }
            cur.data[k] = 0;
        }
        go(0, bound, &caps, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { m: self.rows.m, n: self.rows.n, u: self.cols.m, v: self.cols.n, rows: self.to_rows() }
    }

    pub fn from_json(j: &MatrixJson) -> Result<IntMatrix> {
        IntMatrix::from_rows(Rank::new(j.m, j.n), Rank::new(j.u, j.v), &j.rows)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Wire format: rows ordered m̄ … 1̄ 1 … n, columns ū … 1̄ 1 … v.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub m: usize,
    pub n: usize,
    pub u: usize,
    pub v: usize,
    pub rows: Vec<Vec<u32>>,
}

/// A set of matrices carrying commuting row and column crystal structures.
pub trait Bicrystal: Clone + Ord + Hash {
    fn matrix(&self) -> &IntMatrix;
    fn row_apply(&self, i: Index, op: Op) -> Option<Self>;
    fn col_apply(&self, j: Index, op: Op) -> Option<Self>;
    fn insertion(&self) -> (HookTableau, HookTableau);

    fn row_rank(&self) -> Rank {
        self.matrix().rows
    }

    fn col_rank(&self) -> Rank {
        self.matrix().cols
    }

    /// Both insertion tableaux are highest weight tableaux.
    fn is_highest(&self) -> bool {
        let (p, q) = self.insertion();
        highest_weight_tableau(p.rank, &p.shape()).is_ok_and(|h| h == p)
            && highest_weight_tableau(q.rank, &q.shape()).is_ok_and(|h| h == q)
    }

    /// Killed by every raising operator of both families; weaker than `is_highest`.
    fn is_killed_by_all_e(&self) -> bool {
        self.row_rank().indices().into_iter().all(|i| self.row_apply(i, Op::Raise).is_none())
            && self.col_rank().indices().into_iter().all(|j| self.col_apply(j, Op::Raise).is_none())
    }
}

#[derive(Debug, Clone)]
pub struct Component<M> {
    pub shape: Partition,
    pub partner: Partition,
    pub highest: Option<M>,
    pub members: Vec<M>,
}

#[derive(Debug, Clone)]
pub struct Decomposition<M> {
    pub components: Vec<Component<M>>,
    pub failures: Vec<String>,
}

impl<M> Decomposition<M> {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Connected components under both operator families.
pub fn bicrystal_components<M: Bicrystal>(all: &[M]) -> Vec<Vec<M>> {
    let mut label: HashMap<M, usize> = HashMap::new();
    let mut comps: Vec<Vec<M>> = Vec::new();
    for a in all {
        if label.contains_key(a) {
            continue;
        }
        let id = comps.len();
        let mut members = vec![a.clone()];
        label.insert(a.clone(), id);
        let mut queue = VecDeque::from([a.clone()]);
        while let Some(x) = queue.pop_front() {
            let mut nbrs = Vec::new();
            for op in [Op::Raise, Op::Lower] {
                for i in x.row_rank().indices() {
                    nbrs.extend(x.row_apply(i, op));
                }
                for j in x.col_rank().indices() {
                    nbrs.extend(x.col_apply(j, op));
                }
            }
            for y in nbrs {
                if !label.contains_key(&y) {
                    label.insert(y.clone(), id);
                    members.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    comps
}

/// Counts |B(λ)| with memoization.
#[derive(Default)]
pub struct TableauCounter {
    cache: HashMap<(Rank, Partition), usize>,
}

impl TableauCounter {
    pub fn count(&mut self, rank: Rank, shape: &Partition) -> usize {
        *self
            .cache
            .entry((rank, shape.clone()))
            .or_insert_with(|| enumerate_tableaux(rank, shape).map_or(0, |v| v.len()))
    }
}

/// Splits `all` into components and checks every claim of the decomposition theorem:
/// one highest element per component, equal to `build(λ)`, partner shape `partner(λ)`,
/// component size |B(λ)|·|B(partner)|, injective and equivariant insertion.
pub fn decompose_bicrystal<M: Bicrystal>(
    all: &[M],
    partner: impl Fn(&Partition) -> Partition,
    build: impl Fn(&Partition) -> Option<M>,
) -> Decomposition<M> {
    let mut failures = Vec::new();
    let mut counter = TableauCounter::default();
    let mut components = Vec::new();
    for members in bicrystal_components(all) {
        let images: Vec<(HookTableau, HookTableau)> = members.iter().map(Bicrystal::insertion).collect();
        let highs: Vec<usize> = (0..members.len()).filter(|&k| members[k].is_highest()).collect();
        let (shape, other) = (images[0].0.shape(), images[0].1.shape());
        let tag = format!("component of {}", members[0].matrix());
        if highs.len() != 1 {
            failures.push(format!("{tag}: {} highest elements", highs.len()));
        }
        if images.iter().any(|(p, q)| p.shape() != shape || q.shape() != other) {
            failures.push(format!("{tag}: insertion shapes vary"));
        }
        if partner(&shape) != other {
            failures.push(format!("{tag}: shapes {shape} and {other} are not partners"));
        }
        let highest = highs.first().map(|&k| members[k].clone());
        if let Some(h) = &highest {
            if build(&shape).as_ref() != Some(h) {
                failures.push(format!("{tag}: highest element {} is not the constructed one", h.matrix()));
            }
        }
        let expect = counter.count(members[0].row_rank(), &shape) * counter.count(members[0].col_rank(), &other);
        if expect != members.len() {
            failures.push(format!("{tag}: size {} but |B|·|B'| = {expect}", members.len()));
        }
        let mut seen = images.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != images.len() {
            failures.push(format!("{tag}: insertion is not injective"));
        }
        for (a, (p, q)) in members.iter().zip(&images) {
            if a.matrix().row_weight() != crate::crystal::Crystal::weight(p)
                || a.matrix().col_weight() != crate::crystal::Crystal::weight(q)
            {
                failures.push(format!("{tag}: weights differ at {}", a.matrix()));
            }
            for op in [Op::Raise, Op::Lower] {
                for i in a.row_rank().indices() {
                    let lhs = a.row_apply(i, op).map(|b| b.insertion());
                    let rhs = p.apply_op(i, op).map(|p2| (p2, q.clone()));
                    if lhs != rhs {
                        failures.push(format!("{tag}: {op}_{i} not equivariant at {}", a.matrix()));
                    }
                }
                for j in a.col_rank().indices() {
                    let lhs = a.col_apply(j, op).map(|b| b.insertion());
                    let rhs = q.apply_op(j, op).map(|q2| (p.clone(), q2));
                    if lhs != rhs {
                        failures.push(format!("{tag}: {op}*_{j} not equivariant at {}", a.matrix()));
                    }
                }
            }
        }
        components.push(Component { shape, partner: other, highest, members });
    }
    components.sort_by(|a, b| (a.shape.size(), &a.shape, &a.partner).cmp(&(b.shape.size(), &b.shape, &b.partner)));
    Decomposition { components, failures }
}

/// Matrices whose insertion pair is a pair of highest weight tableaux.
pub fn classify_highest_in<M: Bicrystal>(all: &[M]) -> Vec<M> {
    all.iter().filter(|a| a.is_highest()).cloned().collect()
}

/// Row and column operators commute, with NONE absorbing.
pub fn commutation_failures<M: Bicrystal>(all: &[M]) -> Vec<String> {
    let mut out = Vec::new();
    for a in all {
        for i in a.row_rank().indices() {
            for j in a.col_rank().indices() {
                for x in [Op::Raise, Op::Lower] {
                    for y in [Op::Raise, Op::Lower] {
                        let lhs = a.col_apply(j, y).and_then(|b| b.row_apply(i, x));
                        let rhs = a.row_apply(i, x).and_then(|b| b.col_apply(j, y));
                        if lhs != rhs {
                            out.push(format!("{x}_{i} {y}*_{j} at {}", a.matrix()));
                        }
                    }
                }
            }
        }
    }
    out
}
