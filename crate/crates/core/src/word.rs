//! Words in the letters of gl(m|n) and the signature rule.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Index, IndexKind, Letter, Rank, Weight};
use crate::crystal::{Crystal, Op};
use crate::error::{CrystalError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Dot,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Dot => '.',
        };
        write!(f, "{c}")
    }
}

pub fn letter_sign(i: Index, b: Letter) -> Sign {
    let (src, dst) = i.arrow();
    if b == src {
        Sign::Plus
    } else if b == dst {
        Sign::Minus
    } else {
        Sign::Dot
    }
}

pub fn raw_signature(i: Index, word: &[Letter]) -> Vec<Sign> {
    word.iter().map(|&b| letter_sign(i, b)).collect()
}

/// The signs left after cancellation, as positions of unmatched − and + signs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Reduced {
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
}

/// Generic reduction over any signed sequence.
pub fn reduce_signs(i: Index, signs: impl IntoIterator<Item = Sign>) -> Reduced {
    let mut r = Reduced::default();
    match i.kind() {
        IndexKind::Barred => {
            // cancel (+, −) pairs
            for (p, s) in signs.into_iter().enumerate() {
                match s {
                    Sign::Plus => r.plus.push(p),
                    Sign::Minus => {
                        if r.plus.pop().is_none() {
                            r.minus.push(p);
                        }
                    }
                    Sign::Dot => {}
                }
            }
        }
        IndexKind::Unbarred => {
            // cancel (−, +) pairs
            for (p, s) in signs.into_iter().enumerate() {
                match s {
                    Sign::Minus => r.minus.push(p),
                    Sign::Plus => {
                        if r.minus.pop().is_none() {
                            r.plus.push(p);
                        }
                    }
                    Sign::Dot => {}
                }
            }
        }
        IndexKind::Odd => {
            if let Some((p, s)) = signs.into_iter().enumerate().find(|(_, s)| *s != Sign::Dot) {
                match s {
                    Sign::Plus => r.plus.push(p),
                    _ => r.minus.push(p),
                }
            }
        }
    }
    r
}

pub fn reduced_signature(i: Index, word: &[Letter]) -> Vec<Sign> {
    let raw = raw_signature(i, word);
    let red = reduce_signs(i, raw.iter().copied());
    let mut out = vec![Sign::Dot; raw.len()];
    for p in red.minus {
        out[p] = Sign::Minus;
    }
    for p in red.plus {
        out[p] = Sign::Plus;
    }
    out
}

/// Position acted on by the operator, chosen from a reduced signature.
pub fn acting_position(i: Index, op: Op, red: &Reduced) -> Option<usize> {
    match (i.kind(), op) {
        (IndexKind::Barred, Op::Raise) => red.minus.last().copied(),
        (IndexKind::Barred, Op::Lower) => red.plus.first().copied(),
        (IndexKind::Unbarred, Op::Raise) => red.minus.first().copied(),
        (IndexKind::Unbarred, Op::Lower) => red.plus.last().copied(),
        (IndexKind::Odd, Op::Raise) => red.minus.first().copied(),
        (IndexKind::Odd, Op::Lower) => red.plus.first().copied(),
    }
}

/// Where the operator acts on a word, and the letter it writes there.
pub fn locate(i: Index, op: Op, word: &[Letter]) -> Option<(usize, Letter)> {
    let red = reduce_signs(i, word.iter().map(|&b| letter_sign(i, b)));
    let p = acting_position(i, op, &red)?;
    let (src, dst) = i.arrow();
    Some((p, if op == Op::Raise { src } else { dst }))
}

pub fn apply_letters(i: Index, op: Op, word: &[Letter]) -> Option<Vec<Letter>> {
    let (p, b) = locate(i, op, word)?;
    let mut out = word.to_vec();
    out[p] = b;
    Some(out)
}

pub fn letters_weight(word: &[Letter]) -> Weight {
    let mut w = Weight::zero();
    for &b in word {
        w.add_to(b, 1);
    }
    w
}

/// (ε_i, φ_i) read off the reduced signature.
pub fn eps_phi(i: Index, word: &[Letter]) -> (usize, usize) {
    let red = reduce_signs(i, word.iter().map(|&b| letter_sign(i, b)));
    (red.minus.len(), red.plus.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn from_codes(codes: &[i32]) -> Word {
        Word(codes.iter().map(|&c| Letter(c)).collect())
    }

    pub fn codes(&self) -> Vec<i32> {
        self.0.iter().map(|b| b.0).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check(&self, rank: Rank) -> Result<()> {
        self.0.iter().try_for_each(|&b| rank.check_letter(b))
    }

    /// Every word of length `len` over the alphabet, in lexicographic order.
    pub fn all(rank: Rank, len: usize) -> Vec<Word> {
        let alphabet = rank.letters();
        let mut out = vec![Word(Vec::new())];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * alphabet.len());
            for w in &out {
                for &b in &alphabet {
                    let mut v = w.0.clone();
                    v.push(b);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }

    pub fn parse(s: &str) -> Result<Word> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(crate::alphabet::parse_letter)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Crystal for Word {
    fn weight(&self) -> Weight {
        letters_weight(&self.0)
    }

    fn apply(&self, i: Index, op: Op) -> Option<Word> {
        apply_letters(i, op, &self.0).map(Word)
    }

    fn eps(&self, i: Index) -> usize {
        eps_phi(i, &self.0).0
    }

    fn phi(&self, i: Index) -> usize {
        eps_phi(i, &self.0).1
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn check_index(rank: Rank, i: Index) -> Result<()> {
    rank.check_index(i).map_err(|_| CrystalError::BadIndex { index: i.0, m: rank.m, n: rank.n })
}
