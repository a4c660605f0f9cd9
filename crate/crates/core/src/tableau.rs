//! Hook semistandard tableaux, Schensted column insertion and H^λ.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Index, Letter, Rank, Weight};
use crate::crystal::{Crystal, Op};
use crate::error::{CrystalError, Result};
use crate::graph::{connected_component, CrystalGraph};
use crate::partition::Partition;
use crate::word::{apply_letters, letters_weight, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookTableau {
    pub rank: Rank,
    rows: Vec<Vec<Letter>>,
}

impl HookTableau {
    pub fn empty(rank: Rank) -> HookTableau {
        HookTableau { rank, rows: Vec::new() }
    }

    pub fn from_rows(rank: Rank, rows: Vec<Vec<Letter>>) -> Result<HookTableau> {
        let t = HookTableau { rank, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn from_codes(rank: Rank, rows: &[&[i32]]) -> Result<HookTableau> {
        HookTableau::from_rows(rank, rows.iter().map(|r| r.iter().map(|&c| Letter(c)).collect()).collect())
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn row_codes(&self) -> Vec<Vec<i32>> {
        self.rows.iter().map(|r| r.iter().map(|b| b.0).collect()).collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() > c).count()
    }

    /// Columns from left to right, each listed top to bottom.
    pub fn columns(&self) -> Vec<Vec<Letter>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| (0..self.height(c)).map(|r| self.rows[r][c]).collect()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(CrystalError::InvalidTableau(msg));
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if r > 0 && self.rows[r - 1].len() < row.len() {
                return bad("row lengths are not weakly decreasing".into());
            }
            for (c, &b) in row.iter().enumerate() {
                self.rank.check_letter(b)?;
                if c > 0 {
                    let a = row[c - 1];
                    if a > b || (a == b && !b.is_barred()) {
                        return bad(format!("row {} breaks at column {}", r + 1, c + 1));
                    }
                }
                if r > 0 {
                    let a = self.rows[r - 1][c];
                    if a > b || (a == b && b.is_barred()) {
                        return bad(format!("column {} breaks at row {}", c + 1, r + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// Columns right to left, each read top to bottom.
    pub fn column_reading(&self) -> Word {
        let mut out = Vec::with_capacity(self.size());
        for col in self.columns().iter().rev() {
            out.extend_from_slice(col);
        }
        Word(out)
    }

    /// Inverse of `column_reading` for a known shape.
    pub fn from_reading(rank: Rank, shape: &Partition, word: &[Letter]) -> Result<HookTableau> {
        if word.len() != shape.size() as usize {
            return Err(CrystalError::InvalidTableau("word length differs from shape size".into()));
        }
        let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&p| Vec::with_capacity(p as usize)).collect();
        let heights = shape.conjugate();
        let mut k = 0;
        let mut cols: Vec<&[Letter]> = Vec::new();
        for &h in heights.parts().iter().rev() {
            cols.push(&word[k..k + h as usize]);
            k += h as usize;
        }
        for col in cols.iter().rev() {
            for (r, &b) in col.iter().enumerate() {
                rows[r].push(b);
            }
        }
        HookTableau::from_rows(rank, rows)
    }

    /// Schensted column insertion of one letter.
    pub fn insert(&mut self, b: Letter) {
        let mut b = b;
        let mut c = 0;
        loop {
            let h = self.height(c);
            let hit = (0..h).find(|&r| {
                let x = self.rows[r][c];
                if b.is_barred() {
                    x >= b
                } else {
                    x > b
                }
            });
            match hit {
                Some(r) => {
                    b = std::mem::replace(&mut self.rows[r][c], b);
                    c += 1;
                }
                None => {
                    if h == self.rows.len() {
                        assert_eq!(c, 0, "new row must start in the first column");
                        self.rows.push(vec![b]);
                    } else {
                        assert_eq!(self.rows[h].len(), c);
                        self.rows[h].push(b);
                    }
                    return;
                }
            }
        }
    }

    pub fn column_insert(&self, b: Letter) -> HookTableau {
        let mut t = self.clone();
        t.insert(b);
        t
    }

    pub fn apply_op(&self, i: Index, op: Op) -> Option<HookTableau> {
        let w = self.column_reading();
        let out = apply_letters(i, op, &w.0)?;
        let t = HookTableau::from_reading(self.rank, &self.shape(), &out)
            .expect("crystal operators preserve hook semistandard tableaux");
        Some(t)
    }

    pub fn is_killed_by_all_e(&self) -> bool {
        self.rank.indices().into_iter().all(|i| self.apply_op(i, Op::Raise).is_none())
    }
}

impl Ord for HookTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.column_reading()
            .cmp(&other.column_reading())
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| (self.rank.m, self.rank.n).cmp(&(other.rank.m, other.rank.n)))
    }
}

impl PartialOrd for HookTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Crystal for HookTableau {
    fn weight(&self) -> Weight {
        letters_weight(&self.column_reading().0)
    }

    fn apply(&self, i: Index, op: Op) -> Option<Self> {
        self.apply_op(i, op)
    }
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", lines.join(" / "))
    }
}

/// P(w) = (⋯(w₁ ← w₂) ← ⋯) ← w_r.
pub fn p_tableau(rank: Rank, w: &[Letter]) -> HookTableau {
    let mut t = HookTableau::empty(rank);
    for &b in w {
        t.insert(b);
    }
    t
}

pub fn highest_weight_tableau(rank: Rank, shape: &Partition) -> Result<HookTableau> {
    shape.check_hook(rank)?;
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            if k < rank.m {
                vec![Letter(-((rank.m - k) as i32)); p as usize]
            } else {
                (1..=p as i32).map(Letter).collect()
            }
        })
        .collect();
    HookTableau::from_rows(rank, rows)
}

/// Every hook semistandard tableau of the given shape, ordered by column reading.
pub fn enumerate_tableaux(rank: Rank, shape: &Partition) -> Result<Vec<HookTableau>> {
    shape.check_hook(rank)?;
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
        .collect();
    let alphabet = rank.letters();
    let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fill(rank, &alphabet, &cells, 0, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn fill(
    rank: Rank,
    alphabet: &[Letter],
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<HookTableau>,
) {
    if k == cells.len() {
        out.push(HookTableau { rank, rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    for &b in alphabet {
        if c > 0 {
            let a = rows[r][c - 1];
            if a > b || (a == b && !b.is_barred()) {
                continue;
            }
        }
        if r > 0 {
            let a = rows[r - 1][c];
            if a > b || (a == b && b.is_barred()) {
                continue;
            }
        }
        rows[r].push(b);
        fill(rank, alphabet, cells, k + 1, rows, out);
        rows[r].pop();
    }
}

/// Tableaux killed by every e_i other than H^λ.
pub fn find_fake_highest(rank: Rank, shape: &Partition) -> Result<Vec<HookTableau>> {
    let h = highest_weight_tableau(rank, shape)?;
    Ok(enumerate_tableaux(rank, shape)?
        .into_iter()
        .filter(|t| *t != h && t.is_killed_by_all_e())
        .collect())
}

pub fn tableau_component(t: &HookTableau) -> CrystalGraph<HookTableau> {
    connected_component(t.clone(), &t.rank.indices())
}
