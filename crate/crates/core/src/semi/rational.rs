//! Rational semistandard tableaux for gl_u and the shift σ.
//!
//! Positive columns hold letters of 𝐁_u = {ū < ⋯ < 1̄}; negative columns hold
//! dual letters −1̄ < −2̄ < ⋯ < −ū. Both are stored by the magnitude k.

use std::fmt;

use serde::Serialize;

use crate::alphabet::{Index, IndexKind, Letter, Rank, Weight};
use crate::crystal::{Crystal, Op};
use crate::error::{CrystalError, Result};
use crate::partition::GeneralizedPartition;
use crate::tableau::{enumerate_tableaux, highest_weight_tableau, HookTableau};
use crate::word::{acting_position, letter_sign, reduce_signs, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RLetter {
    /// k̄ ∈ 𝐁_u
    Pos(u32),
    /// −k̄ ∈ 𝐁_u^∨
    Dual(u32),
}

impl RLetter {
    fn sign(self, i: Index) -> Sign {
        let k = i.0.unsigned_abs();
        match self {
            RLetter::Pos(x) => letter_sign(i, Letter::barred(x)),
            RLetter::Dual(x) if x == k => Sign::Plus,
            RLetter::Dual(x) if x == k + 1 => Sign::Minus,
            RLetter::Dual(_) => Sign::Dot,
        }
    }
}

impl fmt::Display for RLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RLetter::Pos(k) => write!(f, "{}", Letter::barred(*k)),
            RLetter::Dual(k) => write!(f, "-{}", Letter::barred(*k)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RationalTableau {
    u: usize,
    shape: GeneralizedPartition,
    /// Row r holds λ_r letters when λ_r > 0, left to right.
    pos: Vec<Vec<u32>>,
    /// Row r holds −λ_r dual letters when λ_r < 0, from column λ_r up to −1.
    neg: Vec<Vec<u32>>,
}

fn bad(msg: String) -> CrystalError {
    CrystalError::InvalidRational(msg)
}

impl RationalTableau {
    pub fn new(u: usize, shape: GeneralizedPartition, pos: Vec<Vec<u32>>, neg: Vec<Vec<u32>>) -> Result<RationalTableau> {
        let t = RationalTableau { u, shape, pos, neg };
        t.validate()?;
        Ok(t)
    }

    pub fn empty(u: usize) -> RationalTableau {
        RationalTableau { u, shape: GeneralizedPartition::zero(u), pos: vec![Vec::new(); u], neg: vec![Vec::new(); u] }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn shape(&self) -> &GeneralizedPartition {
        &self.shape
    }

    pub fn positive_rows(&self) -> &[Vec<u32>] {
        &self.pos
    }

    pub fn negative_rows(&self) -> &[Vec<u32>] {
        &self.neg
    }

    pub fn validate(&self) -> Result<()> {
        let u = self.u;
        let l = self.shape.parts();
        if l.len() != u || self.pos.len() != u || self.neg.len() != u {
            return Err(bad(format!("shape {} does not have {u} rows", self.shape)));
        }
        for r in 0..u {
            if self.pos[r].len() != l[r].max(0) as usize || self.neg[r].len() != (-l[r]).max(0) as usize {
                return Err(bad(format!("row {} does not match the shape {}", r + 1, self.shape)));
            }
            if self.pos[r].iter().chain(&self.neg[r]).any(|&k| k == 0 || k as usize > u) {
                return Err(bad(format!("row {} has a letter outside 1..{u}", r + 1)));
            }
            // ū < ⋯ < 1̄, so magnitudes weakly decrease along a row
            if self.pos[r].windows(2).any(|w| w[0] < w[1]) || self.neg[r].windows(2).any(|w| w[0] > w[1]) {
                return Err(bad(format!("row {} is not weakly increasing", r + 1)));
            }
        }
        for r in 1..u {
            let (a, b) = (&self.pos[r - 1], &self.pos[r]);
            if b.iter().zip(a).any(|(y, x)| x <= y) {
                return Err(bad(format!("positive column clash between rows {r} and {}", r + 1)));
            }
            let (a, b) = (&self.neg[r - 1], &self.neg[r]);
            if b.iter().rev().zip(a.iter().rev()).any(|(y, x)| x >= y) {
                return Err(bad(format!("negative column clash between rows {r} and {}", r + 1)));
            }
        }
        // the 1st column against the complement of the −1st column
        let first: Vec<u32> = self.pos.iter().filter_map(|r| r.first().copied()).collect();
        let minus_one: Vec<u32> = self.neg.iter().filter_map(|r| r.last().copied()).collect();
        let comp = complement(u, &minus_one);
        for (i, (&b, &c)) in first.iter().zip(&comp).enumerate() {
            if c < b {
                return Err(bad(format!(
                    "complement letter {} exceeds {} in row {} of the first column",
                    Letter::barred(c),
                    Letter::barred(b),
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Column reading: positive columns right to left, then columns −1, −2, …,
    /// each top to bottom.
    pub fn reading(&self) -> Vec<RLetter> {
        let mut out = Vec::new();
        let width = self.pos.iter().map(|r| r.len()).max().unwrap_or(0);
        for j in (0..width).rev() {
            out.extend(self.pos.iter().filter(|r| r.len() > j).map(|r| RLetter::Pos(r[j])));
        }
        let depth = self.neg.iter().map(|r| r.len()).max().unwrap_or(0);
        for j in 1..=depth {
            out.extend(self.neg.iter().filter(|r| r.len() >= j).map(|r| RLetter::Dual(r[r.len() - j])));
        }
        out
    }

    pub fn from_reading(u: usize, shape: &GeneralizedPartition, word: &[RLetter]) -> Result<RationalTableau> {
        let l = shape.parts();
        let mut pos: Vec<Vec<u32>> = l.iter().map(|&p| vec![0; p.max(0) as usize]).collect();
        let mut neg: Vec<Vec<u32>> = l.iter().map(|&p| vec![0; (-p).max(0) as usize]).collect();
        let mut it = word.iter();
        let mut next = |want_pos: bool| -> Result<u32> {
            match (it.next(), want_pos) {
                (Some(RLetter::Pos(k)), true) | (Some(RLetter::Dual(k)), false) => Ok(*k),
                _ => Err(bad("reading does not fit the shape".into())),
            }
        };
        let width = pos.iter().map(|r| r.len()).max().unwrap_or(0);
        for j in (0..width).rev() {
            for row in pos.iter_mut().filter(|r| r.len() > j) {
                row[j] = next(true)?;
            }
        }
        let depth = neg.iter().map(|r| r.len()).max().unwrap_or(0);
        for j in 1..=depth {
            for row in neg.iter_mut().filter(|r| r.len() >= j) {
                let len = row.len();
                row[len - j] = next(false)?;
            }
        }
        if word.len() != pos.iter().chain(&neg).map(|r| r.len()).sum::<usize>() {
            return Err(bad("reading is longer than the shape".into()));
        }
        RationalTableau::new(u, shape.clone(), pos, neg)
    }

    /// An ordinary tableau over 𝐁_u, as a rational tableau of non-negative shape.
    pub fn from_hook(t: &HookTableau, u: usize) -> Result<RationalTableau> {
        if t.rank != Rank::new(u, 0) || t.rows().len() > u {
            return Err(bad(format!("tableau over rank {} does not fit gl_{u}", t.rank)));
        }
        let mut pos: Vec<Vec<u32>> = t.rows().iter().map(|r| r.iter().map(|b| b.magnitude()).collect()).collect();
        pos.resize(u, Vec::new());
        let shape = GeneralizedPartition::new(pos.iter().map(|r| r.len() as i32).collect())?;
        RationalTableau::new(u, shape, pos, vec![Vec::new(); u])
    }

    pub fn to_hook(&self) -> Option<HookTableau> {
        if self.shape.parts().iter().any(|&p| p < 0) {
            return None;
        }
        let rows =
            self.pos.iter().filter(|r| !r.is_empty()).map(|r| r.iter().map(|&k| Letter::barred(k)).collect()).collect();
        HookTableau::from_rows(Rank::new(self.u, 0), rows).ok()
    }

    /// Replace the −1st column by its complement as a new 1st column.
    pub fn sigma(&self) -> RationalTableau {
        let minus_one: Vec<u32> = self.neg.iter().filter_map(|r| r.last().copied()).collect();
        let comp = complement(self.u, &minus_one);
        let mut pos = self.pos.clone();
        let mut neg = self.neg.clone();
        for (r, &c) in comp.iter().enumerate() {
            pos[r].insert(0, c);
        }
        for row in neg.iter_mut() {
            row.pop();
        }
        let shape = self.shape.shifted(1);
        let t = RationalTableau { u: self.u, shape, pos, neg };
        debug_assert!(t.validate().is_ok(), "σ keeps tableaux rational semistandard");
        t
    }

    /// Replace the 1st column by its complement as a new −1st column.
    pub fn sigma_inverse(&self) -> Result<RationalTableau> {
        let first: Vec<u32> = self.pos.iter().filter_map(|r| r.first().copied()).collect();
        let mut comp = complement(self.u, &first);
        comp.reverse(); // dual order: −1̄ < −2̄ < ⋯
        let s = first.len();
        let mut pos = self.pos.clone();
        let mut neg = self.neg.clone();
        for row in pos.iter_mut().take(s) {
            row.remove(0);
        }
        for (row, c) in neg.iter_mut().skip(s).zip(comp) {
            row.push(c);
        }
        RationalTableau::new(self.u, self.shape.shifted(-1), pos, neg)
    }

    /// H^λ_u = σ^{−k}(H^{λ+(k^u)}_u).
    pub fn highest(shape: &GeneralizedPartition) -> RationalTableau {
        let u = shape.len();
        let k = shift_to_partition(shape);
        let p = shape.shifted(k).to_partition().expect("shifted shape is a partition");
        let h = highest_weight_tableau(Rank::new(u, 0), &p).expect("at most u rows");
        let mut t = RationalTableau::from_hook(&h, u).expect("ordinary tableau");
        for _ in 0..k {
            t = t.sigma_inverse().expect("σ⁻¹ of a rational tableau");
        }
        t
    }

    /// 𝐁_u(λ), through σ^{−k} applied to ordinary tableaux of shape λ+(k^u).
    pub fn enumerate(shape: &GeneralizedPartition) -> Vec<RationalTableau> {
        let u = shape.len();
        let k = shift_to_partition(shape);
        let p = shape.shifted(k).to_partition().expect("shifted shape is a partition");
        let mut out: Vec<RationalTableau> = enumerate_tableaux(Rank::new(u, 0), &p)
            .expect("at most u rows")
            .iter()
            .map(|h| {
                let mut t = RationalTableau::from_hook(h, u).expect("ordinary tableau");
                for _ in 0..k {
                    t = t.sigma_inverse().expect("σ⁻¹ of a rational tableau");
                }
                t
            })
            .collect();
        out.sort();
        out
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for &k in self.pos.iter().flatten() {
            w.add_to(Letter::barred(k), 1);
        }
        for &k in self.neg.iter().flatten() {
            w.add_to(Letter::barred(k), -1);
        }
        w
    }

    pub fn rational_apply(&self, j: Index, op: Op) -> Option<RationalTableau> {
        let k = j.0.unsigned_abs();
        if j.kind() != IndexKind::Barred || k as usize >= self.u {
            return None;
        }
        let mut word = self.reading();
        let red = reduce_signs(j, word.iter().map(|x| x.sign(j)));
        let p = acting_position(j, op, &red)?;
        word[p] = match (word[p], op) {
            (RLetter::Pos(_), Op::Raise) => RLetter::Pos(k + 1),
            (RLetter::Pos(_), Op::Lower) => RLetter::Pos(k),
            (RLetter::Dual(_), Op::Raise) => RLetter::Dual(k),
            (RLetter::Dual(_), Op::Lower) => RLetter::Dual(k + 1),
        };
        let t = RationalTableau::from_reading(self.u, &self.shape, &word)
            .expect("operators preserve rational semistandard tableaux");
        Some(t)
    }

    pub fn indices(&self) -> Vec<Index> {
        (1..self.u as i32).map(|k| Index(-k)).collect()
    }
}

/// Letters of 1..=u missing from `taken`, in 𝐁_u order (magnitude descending).
fn complement(u: usize, taken: &[u32]) -> Vec<u32> {
    (1..=u as u32).rev().filter(|k| !taken.contains(k)).collect()
}

fn shift_to_partition(shape: &GeneralizedPartition) -> i32 {
    shape.parts().last().map_or(0, |&p| (-p).max(0))
}

impl Crystal for RationalTableau {
    fn weight(&self) -> Weight {
        RationalTableau::weight(self)
    }

    fn apply(&self, i: Index, op: Op) -> Option<Self> {
        self.rational_apply(i, op)
    }
}

impl fmt::Display for RationalTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.u)
            .map(|r| {
                let neg: Vec<String> = self.neg[r].iter().map(|&k| RLetter::Dual(k).to_string()).collect();
                let pos: Vec<String> = self.pos[r].iter().map(|&k| RLetter::Pos(k).to_string()).collect();
                format!("{}|{}", neg.join(" "), pos.join(" "))
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}
