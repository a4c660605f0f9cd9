//! Symmetric matrices under the diagonal operators 𝐞_i = e_i e*_i and 𝐟_i = f_i f*_i.

use std::collections::{HashSet, VecDeque};

use crate::alphabet::{Index, Rank, Weight};
use crate::biword::{Bicrystal, TableauCounter};
use crate::crystal::{Crystal, Op};
use crate::error::{CrystalError, Result};
use crate::matrix::{build_a_lambda, SuperMatrix};
use crate::partition::Partition;
use crate::tableau::{highest_weight_tableau, HookTableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricMatrix(SuperMatrix);

impl SymmetricMatrix {
    pub fn new(a: SuperMatrix) -> Result<SymmetricMatrix> {
        if a.inner().rows != a.inner().cols {
            return Err(CrystalError::InvalidMatrix("row and column ranks differ".into()));
        }
        if a.transpose() != a {
            return Err(CrystalError::InvalidMatrix("matrix is not symmetric".into()));
        }
        Ok(SymmetricMatrix(a))
    }

    pub fn matrix(&self) -> &SuperMatrix {
        &self.0
    }

    pub fn rank(&self) -> Rank {
        self.0.inner().rows
    }

    pub fn apply(&self, i: Index, op: Op) -> Option<SymmetricMatrix> {
        let b = self.0.row_apply(i, op)?.col_apply(i, op)?;
        assert!(b.transpose() == b, "diagonal operators preserve symmetry");
        Some(SymmetricMatrix(b))
    }

    /// Odd barred diagonal entries plus the unbarred diagonal sum.
    pub fn o_statistic(&self) -> u32 {
        let a = self.0.inner();
        (0..a.rows.size())
            .map(|r| {
                let x = a.at(r, r);
                if a.rows.letter_at(r).is_barred() {
                    x % 2
                } else {
                    x
                }
            })
            .sum()
    }

    pub fn p_tableau(&self) -> HookTableau {
        self.0.rsk_pi().0
    }

    pub fn enumerate(rank: Rank, bound: u32) -> Vec<SymmetricMatrix> {
        SuperMatrix::enumerate(rank, rank, bound)
            .into_iter()
            .filter(|a| a.transpose() == *a)
            .map(SymmetricMatrix)
            .collect()
    }

    pub fn eps(&self, i: Index) -> usize {
        iterate(self, i, Op::Raise)
    }

    pub fn phi(&self, i: Index) -> usize {
        iterate(self, i, Op::Lower)
    }
}

fn iterate(a: &SymmetricMatrix, i: Index, op: Op) -> usize {
    let mut k = 0;
    let mut cur = a.clone();
    while let Some(next) = cur.apply(i, op) {
        k += 1;
        cur = next;
    }
    k
}

impl Crystal for SymmetricMatrix {
    fn weight(&self) -> Weight {
        self.0.inner().row_weight()
    }

    fn apply(&self, i: Index, op: Op) -> Option<Self> {
        SymmetricMatrix::apply(self, i, op)
    }
}

pub fn odd_parts(shape: &Partition) -> u32 {
    shape.parts().iter().filter(|p| *p % 2 == 1).count() as u32
}

#[derive(Debug, Clone)]
pub struct SymComponent {
    pub odd: u32,
    pub shape: Partition,
    pub highest: Option<SymmetricMatrix>,
    pub members: Vec<SymmetricMatrix>,
}

#[derive(Debug, Clone)]
pub struct SymDecomposition {
    pub components: Vec<SymComponent>,
    pub failures: Vec<String>,
}

impl SymDecomposition {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn decompose_symmetric(rank: Rank, bound: u32) -> SymDecomposition {
    let all = SymmetricMatrix::enumerate(rank, bound);
    let mut seen: HashSet<SymmetricMatrix> = HashSet::new();
    let mut failures = Vec::new();
    let mut components = Vec::new();
    let mut counter = TableauCounter::default();
    for a in &all {
        if seen.contains(a) {
            continue;
        }
        let mut members = vec![a.clone()];
        seen.insert(a.clone());
        let mut queue = VecDeque::from([a.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in rank.indices() {
                for op in [Op::Raise, Op::Lower] {
                    if let Some(y) = x.apply(i, op) {
                        if seen.insert(y.clone()) {
                            members.push(y.clone());
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        members.sort();
        let shape = members[0].p_tableau().shape();
        let tag = format!("component of {}", members[0].matrix());
        let h = highest_weight_tableau(rank, &shape).expect("insertion shapes are hooks");
        let highs: Vec<&SymmetricMatrix> = members.iter().filter(|x| x.p_tableau() == h).collect();
        let highest = highs.first().map(|x| (*x).clone());
        if highs.len() != 1 {
            failures.push(format!("{tag}: {} highest elements", highs.len()));
        }
        if let Some(hm) = &highest {
            if build_a_lambda(&shape, rank, rank).ok().as_ref() != Some(hm.matrix()) {
                failures.push(format!("{tag}: highest element is not A_λ"));
            }
        }
        let odd = odd_parts(&shape);
        for x in &members {
            let (p, q) = x.matrix().rsk_pi();
            if p != q {
                failures.push(format!("{tag}: P₁ ≠ P₂ at {}", x.matrix()));
            }
            if p.shape() != shape {
                failures.push(format!("{tag}: shape varies"));
            }
            if x.o_statistic() != odd {
                failures.push(format!("{tag}: 𝔬 = {} at {} but λ has {odd} odd parts", x.o_statistic(), x.matrix()));
            }
            for i in rank.indices() {
                for op in [Op::Raise, Op::Lower] {
                    let lhs = x.apply(i, op).map(|y| y.p_tableau());
                    if lhs != p.apply_op(i, op) {
                        failures.push(format!("{tag}: P not equivariant for {op}_{i} at {}", x.matrix()));
                    }
                }
            }
        }
        if counter.count(rank, &shape) != members.len() {
            failures.push(format!("{tag}: size {} differs from |B(λ)|", members.len()));
        }
        if odd == 0 && !shape.is_even() {
            failures.push(format!("{tag}: 𝔬 = 0 with non-even shape {shape}"));
        }
        components.push(SymComponent { odd, shape, highest, members });
    }
    components.sort_by(|a, b| (a.shape.size(), &a.shape).cmp(&(b.shape.size(), &b.shape)));
    SymDecomposition { components, failures }
}
