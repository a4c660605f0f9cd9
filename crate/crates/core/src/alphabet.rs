//! Letters, Kashiwara indices and weights of gl(m|n).
//!
//! A letter is stored as a signed code: the barred letter k̄ is `-k`, the
//! unbarred letter l is `l`. The integer order on codes is the alphabet order
//! m̄ < ⋯ < 1̄ < 1 < ⋯ < n. The same encoding serves the unbounded alphabet
//! used by semi-infinite words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub fn barred(k: u32) -> Letter {
        assert!(k >= 1, "barred letters start at 1");
        Letter(-(k as i32))
    }

    pub fn unbarred(l: u32) -> Letter {
        assert!(l >= 1, "unbarred letters start at 1");
        Letter(l as i32)
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// 0 for barred letters, 1 for unbarred ones.
    pub fn degree(self) -> u8 {
        if self.is_barred() {
            0
        } else {
            1
        }
    }

    /// The k in k̄ or l.
    pub fn magnitude(self) -> u32 {
        self.0.unsigned_abs()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}\u{0304}", self.magnitude())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rank {
    pub m: usize,
    pub n: usize,
}

impl Rank {
    pub fn new(m: usize, n: usize) -> Rank {
        Rank { m, n }
    }

    pub fn size(self) -> usize {
        self.m + self.n
    }

    /// Letters in increasing order.
    pub fn letters(self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.size());
        out.extend((1..=self.m as i32).rev().map(|k| Letter(-k)));
        out.extend((1..=self.n as i32).map(Letter));
        out
    }

    pub fn barred_letters(self) -> Vec<Letter> {
        (1..=self.m as i32).rev().map(|k| Letter(-k)).collect()
    }

    pub fn unbarred_letters(self) -> Vec<Letter> {
        (1..=self.n as i32).map(Letter).collect()
    }

    pub fn contains(self, b: Letter) -> bool {
        if b.is_barred() {
            b.magnitude() as usize <= self.m
        } else {
            b.0 >= 1 && b.0 as usize <= self.n
        }
    }

    /// Position of a letter in the alphabet order.
    pub fn position(self, b: Letter) -> usize {
        debug_assert!(self.contains(b));
        if b.is_barred() {
            self.m - b.magnitude() as usize
        } else {
            self.m + b.0 as usize - 1
        }
    }

    pub fn letter_at(self, pos: usize) -> Letter {
        if pos < self.m {
            Letter(-((self.m - pos) as i32))
        } else {
            Letter((pos - self.m + 1) as i32)
        }
    }

    pub fn check_letter(self, b: Letter) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(CrystalError::LetterOutOfRange { letter: b.0, m: self.m, n: self.n })
        }
    }

    /// Kashiwara indices: m−1̄ … 1̄, then 0 when both parts are present, then 1 … n−1.
    pub fn indices(self) -> Vec<Index> {
        let mut out = Vec::new();
        out.extend((1..self.m as i32).rev().map(|k| Index(-k)));
        if self.m >= 1 && self.n >= 1 {
            out.push(Index(0));
        }
        out.extend((1..self.n as i32).map(Index));
        out
    }

    pub fn contains_index(self, i: Index) -> bool {
        match i.0 {
            0 => self.m >= 1 && self.n >= 1,
            k if k < 0 => ((-k) as usize) < self.m,
            l => (l as usize) < self.n,
        }
    }

    pub fn check_index(self, i: Index) -> Result<()> {
        if self.contains_index(i) {
            Ok(())
        } else {
            Err(CrystalError::BadIndex { index: i.0, m: self.m, n: self.n })
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

/// Kashiwara index with the same signed convention as letters; `Index(0)` is the odd index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Index(pub i32);

impl Index {
    pub fn kind(self) -> IndexKind {
        match self.0 {
            0 => IndexKind::Odd,
            k if k < 0 => IndexKind::Barred,
            _ => IndexKind::Unbarred,
        }
    }

    /// The two letters joined by an i-arrow, as (source of f, target of f).
    pub fn arrow(self) -> (Letter, Letter) {
        match self.0 {
            0 => (Letter(-1), Letter(1)),
            k if k < 0 => (Letter(k - 1), Letter(k)),
            l => (Letter(l), Letter(l + 1)),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{0304}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    Barred,
    Odd,
    Unbarred,
}

/// An element of the weight lattice: Σ c_b ε_b plus a multiple of the Fock weight Λ.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub level: i64,
    coords: BTreeMap<Letter, i64>,
}

impl Weight {
    pub fn zero() -> Weight {
        Weight::default()
    }

    pub fn epsilon(b: Letter) -> Weight {
        let mut w = Weight::zero();
        w.add_to(b, 1);
        w
    }

    pub fn fock(level: i64) -> Weight {
        Weight { level, coords: BTreeMap::new() }
    }

    pub fn from_coords<I: IntoIterator<Item = (Letter, i64)>>(level: i64, it: I) -> Weight {
        let mut w = Weight::fock(level);
        for (b, c) in it {
            w.add_to(b, c);
        }
        w
    }

    pub fn coord(&self, b: Letter) -> i64 {
        self.coords.get(&b).copied().unwrap_or(0)
    }

    pub fn add_to(&mut self, b: Letter, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coords.entry(b).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coords.remove(&b);
        }
    }

    /// Nonzero coordinates in alphabet order.
    pub fn coords(&self) -> impl Iterator<Item = (Letter, i64)> + '_ {
        self.coords.iter().map(|(b, c)| (*b, *c))
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            level: self.level * k,
            coords: self.coords.iter().filter(|_| k != 0).map(|(b, c)| (*b, c * k)).collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out.level += rhs.level;
        for (b, c) in rhs.coords() {
            out.add_to(b, c);
        }
        out
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.level != 0 {
            write!(f, "{}Λ", self.level)?;
            first = false;
        }
        for (b, c) in self.coords() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{:+}ε{}", c, b)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// (ε_b, ε_b') = (−1)^{|b|} δ_{bb'}. The Λ part is ignored.
pub fn bilinear_form(a: &Weight, b: &Weight) -> i64 {
    a.coords()
        .map(|(l, c)| {
            let s = if l.is_barred() { 1 } else { -1 };
            s * c * b.coord(l)
        })
        .sum()
}

pub fn simple_root(i: Index) -> Weight {
    let (src, dst) = i.arrow();
    // f_i sends src to dst, so α_i = ε_src − ε_dst.
    Weight::from_coords(0, [(src, 1), (dst, -1)])
}

/// ⟨h_i, w⟩, including ⟨h_0, Λ⟩ = 1.
pub fn coroot_pairing(i: Index, w: &Weight) -> i64 {
    let form = bilinear_form(&simple_root(i), w);
    match i.kind() {
        IndexKind::Barred => form,
        IndexKind::Odd => form + w.level,
        IndexKind::Unbarred => -form,
    }
}

/// a ≥ b in dominance order: a − b is a non-negative sum of simple roots.
pub fn weight_dominates(a: &Weight, b: &Weight) -> bool {
    let d = a - b;
    if d.level != 0 {
        return false;
    }
    // Simple roots are ε_t − ε_{t+1} for consecutive letters, so the criterion
    // is that all prefix sums in alphabet order are ≥ 0 and the total is 0.
    let mut acc = 0;
    for (_, c) in d.coords() {
        acc += c;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

pub fn parse_letter(s: &str) -> Result<Letter> {
    let t = s.trim();
    let v: i32 = t.parse().map_err(|_| CrystalError::Parse(format!("bad letter '{t}'")))?;
    if v == 0 {
        return Err(CrystalError::Parse("0 is not a letter".into()));
    }
    Ok(Letter(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_order() {
        let r = Rank::new(2, 3);
        let ls: Vec<i32> = r.letters().iter().map(|b| b.0).collect();
        assert_eq!(ls, vec![-2, -1, 1, 2, 3]);
        for (p, b) in r.letters().into_iter().enumerate() {
            assert_eq!(r.position(b), p);
            assert_eq!(r.letter_at(p), b);
        }
        let idx: Vec<i32> = r.indices().iter().map(|i| i.0).collect();
        assert_eq!(idx, vec![-1, 0, 1, 2]);
        assert_eq!(Rank::new(3, 0).indices(), vec![Index(-2), Index(-1)]);
    }

    #[test]
    fn roots_and_pairings() {
        // α_1̄ = ε_2̄ − ε_1̄, α_0 = ε_1̄ − ε_1, α_1 = ε_1 − ε_2
        assert_eq!(simple_root(Index(-1)), Weight::from_coords(0, [(Letter(-2), 1), (Letter(-1), -1)]));
        assert_eq!(simple_root(Index(0)), Weight::from_coords(0, [(Letter(-1), 1), (Letter(1), -1)]));
        assert_eq!(simple_root(Index(1)), Weight::from_coords(0, [(Letter(1), 1), (Letter(2), -1)]));
        // (α_0, α_0) = 1 − 1 = 0
        let a0 = simple_root(Index(0));
        assert_eq!(bilinear_form(&a0, &a0), 0);
        // ⟨h_i, α_i⟩ = 2 for even indices
        for i in [Index(-2), Index(-1), Index(1), Index(2)] {
            assert_eq!(coroot_pairing(i, &simple_root(i)), 2);
        }
        assert_eq!(coroot_pairing(Index(0), &Weight::fock(1)), 1);
        assert_eq!(coroot_pairing(Index(-1), &Weight::fock(1)), 0);
    }

    #[test]
    fn dominance() {
        let a = Weight::epsilon(Letter(-2));
        let b = Weight::epsilon(Letter(1));
        assert!(weight_dominates(&a, &b));
        assert!(!weight_dominates(&b, &a));
        assert!(weight_dominates(&a, &a));
    }
}
