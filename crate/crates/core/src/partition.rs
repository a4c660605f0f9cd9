//! Partitions and the hook condition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::Rank;
use crate::error::{CrystalError, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrystalError::NotPartition(format!("{parts:?}")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// λ_k with 1-based k, zero beyond the length.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 {
            return u32::MAX;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// λ_{m+1} ≤ n.
    pub fn is_hook(&self, rank: Rank) -> bool {
        self.part(rank.m + 1) as usize <= rank.n
    }

    pub fn check_hook(&self, rank: Rank) -> Result<()> {
        if self.is_hook(rank) {
            Ok(())
        } else {
            Err(CrystalError::NotHook { shape: self.to_string(), m: rank.m, n: rank.n })
        }
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn of_size(k: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    pub fn hooks_of_size(rank: Rank, k: u32) -> Vec<Partition> {
        Partition::of_size(k).into_iter().filter(|p| p.is_hook(rank)).collect()
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| CrystalError::Parse(format!("bad part '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// λ₁ ≥ ⋯ ≥ λ_u with negative parts allowed; the length is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneralizedPartition(Vec<i32>);

impl GeneralizedPartition {
    pub fn new(parts: Vec<i32>) -> Result<GeneralizedPartition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrystalError::NotPartition(format!("{parts:?}")));
        }
        Ok(GeneralizedPartition(parts))
    }

    pub fn zero(u: usize) -> GeneralizedPartition {
        GeneralizedPartition(vec![0; u])
    }

    /// A partition padded with zeros to length `u`.
    pub fn from_partition(p: &Partition, u: usize) -> Result<GeneralizedPartition> {
        if p.len() > u {
            return Err(CrystalError::NotPartition(format!("{p} has more than {u} parts")));
        }
        Ok(GeneralizedPartition((1..=u).map(|k| p.part(k) as i32).collect()))
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// λ* = (−λ_u, …, −λ₁).
    pub fn star(&self) -> GeneralizedPartition {
        GeneralizedPartition(self.0.iter().rev().map(|p| -p).collect())
    }

    pub fn shifted(&self, k: i32) -> GeneralizedPartition {
        GeneralizedPartition(self.0.iter().map(|p| p + k).collect())
    }

    pub fn sum(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&p| p < 0) {
            return None;
        }
        Partition::new(self.0.iter().map(|&p| p as u32).collect()).ok()
    }

    /// All generalized partitions of length `u` with parts in `lo..=hi`.
    pub fn in_box(u: usize, lo: i32, hi: i32) -> Vec<GeneralizedPartition> {
        fn go(u: usize, lo: i32, max: i32, cur: &mut Vec<i32>, out: &mut Vec<GeneralizedPartition>) {
            if cur.len() == u {
                out.push(GeneralizedPartition(cur.clone()));
                return;
            }
            for p in (lo..=max).rev() {
                cur.push(p);
                go(u, lo, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(u, lo, hi, &mut Vec::new(), &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<GeneralizedPartition> {
        let parts = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| CrystalError::Parse(format!("bad part '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        GeneralizedPartition::new(parts)
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
