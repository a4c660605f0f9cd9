//! Semi-infinite words ⋯w₃w₂w₁ of the Fock space crystal.
//!
//! A word is eventually the vacuum pattern w_k = \overline{k+c}; we keep the
//! charge c and the shortest tail w_M⋯w₁ outside which the pattern holds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Index, IndexKind, Letter, Weight};
use crate::crystal::{Crystal, Op};
use crate::error::{CrystalError, Result};
use crate::word::apply_letters;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSemiWord")]
pub struct SemiWord {
    charge: i32,
    /// w_M ⋯ w₁, written left to right (ascending).
    tail: Vec<Letter>,
}

#[derive(Deserialize)]
struct RawSemiWord {
    charge: i32,
    tail: Vec<Letter>,
}

impl TryFrom<RawSemiWord> for SemiWord {
    type Error = CrystalError;
    fn try_from(r: RawSemiWord) -> Result<SemiWord> {
        SemiWord::new(r.charge, r.tail)
    }
}

fn vacuum_letter(c: i32, k: usize) -> Letter {
    Letter(-(k as i32 + c))
}

/// Weakly increasing, with repeats only among unbarred letters.
fn is_column(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && !p[0].is_barred()))
}

impl SemiWord {
    pub fn new(charge: i32, tail: Vec<Letter>) -> Result<SemiWord> {
        let depth = tail.len() as i32;
        if depth + charge < 0 {
            return Err(CrystalError::InvalidSemiWord(format!(
                "tail of length {depth} is too short for charge {charge}"
            )));
        }
        if tail.iter().any(|b| b.0 == 0) || !is_column(&tail) {
            return Err(CrystalError::InvalidSemiWord(format!("tail {tail:?} is not a column")));
        }
        let head = vacuum_letter(charge, tail.len() + 1);
        if let Some(&first) = tail.first() {
            if first <= head {
                return Err(CrystalError::InvalidSemiWord(format!(
                    "tail starts at {first}, not above the vacuum letter {head}"
                )));
            }
        }
        let mut w = SemiWord { charge, tail };
        w.canonicalize();
        Ok(w)
    }

    fn canonicalize(&mut self) {
        let mut drop = 0;
        while drop < self.tail.len() && self.tail[drop] == vacuum_letter(self.charge, self.tail.len() - drop) {
            drop += 1;
        }
        self.tail.drain(..drop);
    }

    /// H^c: the vacuum of charge c, or ⋯\overline{2}\overline{1} 1⋯1 when c < 0.
    pub fn highest(charge: i32) -> SemiWord {
        let tail = if charge >= 0 { Vec::new() } else { vec![Letter(1); charge.unsigned_abs() as usize] };
        SemiWord { charge, tail }
    }

    pub fn charge(&self) -> i32 {
        self.charge
    }

    pub fn tail(&self) -> &[Letter] {
        &self.tail
    }

    /// Smallest m for which every barred letter beyond \overline{m} is present.
    pub fn min_window(&self) -> usize {
        (self.tail.len() as i32 + self.charge) as usize
    }

    pub fn max_unbarred(&self) -> usize {
        self.tail.iter().filter(|b| !b.is_barred()).map(|b| b.0 as usize).max().unwrap_or(0)
    }

    /// w_k for k ≥ 1.
    pub fn letter(&self, k: usize) -> Letter {
        let m = self.tail.len();
        if k <= m {
            self.tail[m - k]
        } else {
            vacuum_letter(self.charge, k)
        }
    }

    pub fn count(&self, b: Letter) -> usize {
        if b.is_barred() && b.magnitude() as usize > self.min_window() {
            return 1;
        }
        self.tail.iter().filter(|&&x| x == b).count()
    }

    /// The letters ≥ \overline{m}, ascending.
    pub fn window(&self, m: usize) -> Result<Vec<Letter>> {
        let lo = self.min_window();
        if m < lo {
            return Err(CrystalError::WindowTooSmall { m, n: 0, reason: format!("word needs {lo}") });
        }
        let mut out: Vec<Letter> = (lo + 1..=m).rev().map(|k| Letter::barred(k as u32)).collect();
        out.extend_from_slice(&self.tail);
        Ok(out)
    }

    /// Reattach the vacuum above a window word whose letters are all ≥ \overline{m}.
    pub fn from_window(m: usize, letters: &[Letter]) -> Result<SemiWord> {
        if letters.iter().any(|b| b.is_barred() && b.magnitude() as usize > m) {
            return Err(CrystalError::InvalidSemiWord(format!("letters reach below \\overline{{{m}}}")));
        }
        SemiWord::new(m as i32 - letters.len() as i32, letters.to_vec())
    }

    /// Unbarred letters plus vacuum letters that went missing.
    pub fn excitation(&self) -> usize {
        let lo = self.min_window();
        let unbarred = self.tail.iter().filter(|b| !b.is_barred()).count();
        let barred = self.tail.len() - unbarred;
        unbarred + (lo - barred)
    }

    /// Λ + Σ m_b ε_b, barred letters counted relative to the vacuum.
    pub fn semi_weight(&self) -> Weight {
        let mut w = Weight::fock(1);
        for k in 1..=self.min_window() {
            w.add_to(Letter::barred(k as u32), -1);
        }
        for &b in &self.tail {
            w.add_to(b, 1);
        }
        w
    }

    /// Window rows needed so that the letters above it do not see index i.
    pub fn window_for(&self, i: Index) -> usize {
        let need = match i.kind() {
            IndexKind::Barred => i.0.unsigned_abs() as usize + 1,
            IndexKind::Odd => 1,
            IndexKind::Unbarred => 0,
        };
        self.min_window().max(need)
    }

    pub fn semi_apply(&self, i: Index, op: Op) -> Option<SemiWord> {
        let m = self.window_for(i);
        let w = self.window(m).expect("window covers the tail");
        let out = apply_letters(i, op, &w)?;
        Some(SemiWord::from_window(m, &out).expect("operators keep windows valid"))
    }

    /// Every word whose missing barred letters lie in 1..=m, whose unbarred
    /// letters lie in 1..=n, and whose excitation is at most `cap`.
    pub fn windowed(m: usize, n: usize, cap: usize) -> Vec<SemiWord> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << m) {
            let missing = mask.count_ones() as usize;
            if missing > cap {
                continue;
            }
            let barred: Vec<Letter> =
                (1..=m).rev().filter(|k| mask & (1 << (k - 1)) == 0).map(|k| Letter::barred(k as u32)).collect();
            for unbarred in multisets(n, cap - missing) {
                let mut w = barred.clone();
                w.extend(unbarred.into_iter().map(|l| Letter::unbarred(l as u32)));
                out.push(SemiWord::from_window(m, &w).expect("windowed word"));
            }
        }
        out.sort();
        out
    }
}

/// Weakly increasing sequences in 1..=n of length at most `len`.
fn multisets(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            let from = s.last().copied().unwrap_or(1);
            for l in from..=n {
                let mut t: Vec<usize> = s.clone();
                t.push(l);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

impl Crystal for SemiWord {
    fn weight(&self) -> Weight {
        self.semi_weight()
    }

    fn apply(&self, i: Index, op: Op) -> Option<Self> {
        self.semi_apply(i, op)
    }
}

impl fmt::Display for SemiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.min_window();
        write!(f, "⋯")?;
        for k in [lo + 2, lo + 1] {
            write!(f, "{}", Letter::barred(k as u32))?;
        }
        for b in &self.tail {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CrystalGraph;

    fn word(m: usize, codes: &[i32]) -> SemiWord {
        SemiWord::from_window(m, &codes.iter().map(|&c| Letter(c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn charge_of_the_example() {
        let w = word(6, &[-6, -5, -4, -3, -1, 2, 3, 4, 4]);
        assert_eq!(w.charge(), -3);
        assert_eq!(w.tail(), &[Letter(-1), Letter(2), Letter(3), Letter(4), Letter(4)]);
        // same word through a wider window
        assert_eq!(word(8, &[-8, -7, -6, -5, -4, -3, -1, 2, 3, 4, 4]), w);
        assert_eq!(w.letter(6), Letter(-3));
    }

    #[test]
    fn json_round_trip() {
        let w = word(3, &[-3, -1, 2, 2]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"charge":-1,"tail":[-1,2,2]}"#);
        assert_eq!(serde_json::from_str::<SemiWord>(&s).unwrap(), w);
        assert!(serde_json::from_str::<SemiWord>(r#"{"charge":0,"tail":[2,1]}"#).is_err());
    }

    #[test]
    fn vacuum_weight() {
        assert_eq!(SemiWord::highest(0).semi_weight(), Weight::fock(1));
        let h = SemiWord::highest(-2);
        assert_eq!(h.semi_weight(), Weight::from_coords(1, [(Letter(1), 2)]));
        assert_eq!(SemiWord::highest(2).semi_weight(), Weight::from_coords(1, [(Letter(-1), -1), (Letter(-2), -1)]));
    }

    #[test]
    fn rejects_bad_words() {
        assert!(SemiWord::new(-2, vec![Letter(1)]).is_err());
        assert!(SemiWord::new(0, vec![Letter(-1), Letter(-1)]).is_err());
        // ⋯3̄ 2̄ followed by 3̄ is not increasing
        assert!(SemiWord::new(1, vec![Letter(-3)]).is_err());
    }

    fn indices(m: usize, n: usize) -> Vec<Index> {
        let mut v: Vec<Index> = (1..=m as i32).map(|p| Index(-p)).collect();
        v.push(Index(0));
        v.extend((1..n as i32).map(Index));
        v
    }

    #[test]
    fn highest_is_killed() {
        for c in -3..=3 {
            let h = SemiWord::highest(c);
            for i in indices(6, 5) {
                assert_eq!(h.semi_apply(i, Op::Raise), None, "e_{i} H^{c}");
            }
        }
    }

    #[test]
    fn f_then_e() {
        for w in SemiWord::windowed(3, 3, 3) {
            for i in indices(4, 4) {
                if let Some(v) = w.semi_apply(i, Op::Lower) {
                    assert_eq!(v.charge(), w.charge());
                    assert_eq!(v.semi_apply(i, Op::Raise).as_ref(), Some(&w));
                }
            }
        }
    }

    #[test]
    fn windowed_words_lie_in_the_component_of_their_vacuum() {
        // every word of charge c reached within the window is connected to H^c
        for c in -1..=1 {
            let g = CrystalGraph::component(SemiWord::highest(c), &indices(4, 3), |w, i, op| w.semi_apply(i, op));
            for w in SemiWord::windowed(2, 2, 2).into_iter().filter(|w| w.charge() == c) {
                assert!(g.position(&w).is_some(), "{w} missing from B({c})");
            }
        }
    }
}
