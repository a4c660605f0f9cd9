//! Semi-infinite semistandard tableaux 𝐰 = (w^{(1)}, …, w^{(u)}).
//!
//! w^{(1)} is the rightmost column, so the column reading is w^{(1)}⋯w^{(u)}.

use std::fmt;

use serde::Serialize;

use crate::alphabet::{Index, Letter, Rank, Weight};
use crate::crystal::{Crystal, Op};
use crate::error::{CrystalError, Result};
use crate::partition::GeneralizedPartition;
use crate::semi::word::SemiWord;
use crate::tableau::p_tableau;
use crate::word::apply_letters;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SemiTableau {
    columns: Vec<SemiWord>,
}

/// Validate charges and the row inequalities w^{(i)}_k ≥ w^{(i+1)}_{k+d_i}.
pub fn semi_tableau_check(columns: Vec<SemiWord>) -> Result<SemiTableau> {
    for i in 0..columns.len().saturating_sub(1) {
        let (a, b) = (&columns[i], &columns[i + 1]);
        if a.charge() < b.charge() {
            return Err(CrystalError::InvalidSemiTableau {
                column: i + 1,
                row: 0,
                reason: format!("charge {} is below the next charge {}", a.charge(), b.charge()),
            });
        }
        let d = (a.charge() - b.charge()) as usize;
        // past both tails the two columns are the same vacuum
        let depth = a.tail().len().max(b.tail().len()) + 1;
        for k in 1..=depth {
            let (x, y) = (a.letter(k), b.letter(k + d));
            if x < y || (x == y && !x.is_barred()) {
                return Err(CrystalError::InvalidSemiTableau {
                    column: i + 1,
                    row: k,
                    reason: format!("{x} against {y} in the next column"),
                });
            }
        }
    }
    Ok(SemiTableau { columns })
}

impl SemiTableau {
    pub fn new(columns: Vec<SemiWord>) -> Result<SemiTableau> {
        semi_tableau_check(columns)
    }

    /// H^λ: H^{λ_i} for λ_i ≥ 0, otherwise charge λ_i over a tail of (u−i+1)'s.
    pub fn highest(shape: &GeneralizedPartition) -> SemiTableau {
        let u = shape.len();
        let columns = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if c >= 0 {
                    SemiWord::highest(c)
                } else {
                    let tail = vec![Letter::unbarred((u - i) as u32); c.unsigned_abs() as usize];
                    SemiWord::new(c, tail).expect("highest column")
                }
            })
            .collect();
        semi_tableau_check(columns).expect("H^λ is semistandard")
    }

    pub fn columns(&self) -> &[SemiWord] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SemiWord> {
        self.columns
    }

    pub fn shape(&self) -> GeneralizedPartition {
        GeneralizedPartition::new(self.columns.iter().map(|w| w.charge()).collect()).expect("checked charges")
    }

    pub fn excitation(&self) -> usize {
        self.columns.iter().map(|w| w.excitation()).sum()
    }

    pub fn semi_weight(&self) -> Weight {
        tuple_weight(&self.columns)
    }

    pub fn semi_apply(&self, i: Index, op: Op) -> Option<SemiTableau> {
        let out = tuple_apply(&self.columns, i, op)?;
        Some(semi_tableau_check(out).expect("operators preserve semistandard tableaux"))
    }

    /// Semistandard tableaux of shape λ whose columns all lie in the (m, n)
    /// window, with total excitation at most `cap`.
    pub fn windowed(shape: &GeneralizedPartition, m: usize, n: usize, cap: usize) -> Vec<SemiTableau> {
        let pool = SemiWord::windowed(m, n, cap);
        let mut out = Vec::new();
        let mut cur: Vec<SemiWord> = Vec::new();
        fn go(
            shape: &[i32],
            pool: &[SemiWord],
            left: usize,
            cur: &mut Vec<SemiWord>,
            out: &mut Vec<SemiTableau>,
        ) {
            if cur.len() == shape.len() {
                if let Ok(t) = semi_tableau_check(cur.clone()) {
                    out.push(t);
                }
                return;
            }
            let c = shape[cur.len()];
            for w in pool.iter().filter(|w| w.charge() == c && w.excitation() <= left) {
                cur.push(w.clone());
                go(shape, pool, left - w.excitation(), cur, out);
                cur.pop();
            }
        }
        go(shape.parts(), &pool, cap, &mut cur, &mut out);
        out.sort();
        out
    }
}

pub(crate) fn tuple_weight(columns: &[SemiWord]) -> Weight {
    columns.iter().fold(Weight::zero(), |acc, w| &acc + &w.semi_weight())
}

/// A window deep enough for every column and for index i.
pub(crate) fn tuple_window(columns: &[SemiWord], i: Option<Index>) -> usize {
    let base = columns.iter().map(|w| w.min_window()).max().unwrap_or(0);
    match i {
        Some(i) => columns.iter().map(|w| w.window_for(i)).max().unwrap_or(0).max(base),
        None => base,
    }
}

fn concatenated(columns: &[SemiWord], m: usize) -> (Vec<Letter>, Vec<usize>) {
    let mut letters = Vec::new();
    let mut lens = Vec::new();
    for w in columns {
        let win = w.window(m).expect("window covers every column");
        lens.push(win.len());
        letters.extend(win);
    }
    (letters, lens)
}

/// The operator on w^{(1)} ⊗ ⋯ ⊗ w^{(u)}, acting on the concatenated windows.
pub(crate) fn tuple_apply(columns: &[SemiWord], i: Index, op: Op) -> Option<Vec<SemiWord>> {
    let m = tuple_window(columns, Some(i));
    let (letters, lens) = concatenated(columns, m);
    let out = apply_letters(i, op, &letters)?;
    let mut k = 0;
    let cols = lens
        .iter()
        .map(|&l| {
            let w = SemiWord::from_window(m, &out[k..k + l]).expect("operators keep windows valid");
            k += l;
            w
        })
        .collect();
    Some(cols)
}

/// 𝒫₁ on a tuple: insert the concatenated windows and read P column by column.
pub fn p1_columns(columns: &[SemiWord], extra: usize) -> SemiTableau {
    let u = columns.len();
    // one spare vacuum letter per column guarantees u columns in P
    let m = tuple_window(columns, None) + 1 + extra;
    let n = columns.iter().map(|w| w.max_unbarred()).max().unwrap_or(0);
    let (letters, _) = concatenated(columns, m);
    let p = p_tableau(Rank::new(m, n), &letters);
    let cols = p.columns();
    assert_eq!(cols.len(), u, "P of u columns has u columns");
    let out = (1..=u).map(|i| SemiWord::from_window(m, &cols[u - i]).expect("P columns are windows")).collect();
    semi_tableau_check(out).expect("P₁ is semistandard")
}

impl Crystal for SemiTableau {
    fn weight(&self) -> Weight {
        self.semi_weight()
    }

    fn apply(&self, i: Index, op: Op) -> Option<Self> {
        self.semi_apply(i, op)
    }
}

impl fmt::Display for SemiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // columns left to right as drawn: w^{(u)} ⋯ w^{(1)}
        let cols: Vec<String> = self.columns.iter().rev().map(|w| w.to_string()).collect();
        write!(f, "{}", cols.join(" | "))
    }
}
