//! Characters: hook and rational Schur functions, truncated checks of the
//! Cauchy-type identities, Littlewood–Richardson coefficients for rational
//! Schur functions, and the character of 𝐁(λ) in the Fock space.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::alphabet::{Letter, Rank, Weight};
use crate::error::Result;
use crate::partition::{GeneralizedPartition, Partition};
use crate::poly::LaurentPolynomial;
use crate::semi::{RationalTableau, SemiMatrix, SemiTableau};
use crate::tableau::enumerate_tableaux;

pub fn letter_var(prefix: &str, b: Letter) -> String {
    format!("{prefix}{}", b.0)
}

/// One variable per letter of the rank, in alphabet order.
pub fn variables(prefix: &str, rank: Rank) -> Vec<String> {
    rank.letters().into_iter().map(|b| letter_var(prefix, b)).collect()
}

fn weight_monomial(vars: &[String], prefix: &str, w: &Weight) -> Vec<i32> {
    let mut e = vec![0; vars.len()];
    for (b, c) in w.coords() {
        let name = letter_var(prefix, b);
        let k = vars.iter().position(|v| *v == name).unwrap_or_else(|| panic!("no variable {name}"));
        e[k] += c as i32;
    }
    e
}

/// hs_λ(x) = Σ_{T ∈ 𝐁_{m|n}(λ)} x^{wt T}.
pub fn hook_schur(rank: Rank, shape: &Partition) -> Result<LaurentPolynomial> {
    hook_schur_in("x", rank, shape)
}

pub fn hook_schur_in(prefix: &str, rank: Rank, shape: &Partition) -> Result<LaurentPolynomial> {
    let vars = variables(prefix, rank);
    let mut p = LaurentPolynomial::zero(vars.clone());
    for t in enumerate_tableaux(rank, shape)? {
        let mut e = vec![0; vars.len()];
        for row in t.rows() {
            for &b in row {
                e[rank.position(b)] += 1;
            }
        }
        p.add_term(e, 1);
    }
    Ok(p)
}

/// s_λ(y) = Σ_{T ∈ 𝐁_u(λ)} y^{wt T}, over y_ū, …, y_{1̄}.
pub fn rational_schur(shape: &GeneralizedPartition) -> LaurentPolynomial {
    let vars = variables("y", Rank::new(shape.len(), 0));
    let mut p = LaurentPolynomial::zero(vars.clone());
    for t in RationalTableau::enumerate(shape) {
        p.add_term(weight_monomial(&vars, "y", &t.weight()), 1);
    }
    p
}

/// Σ |exponent| over the first `nx` variables.
fn x_degree(e: &[i32], nx: usize) -> usize {
    e[..nx].iter().map(|x| x.unsigned_abs() as usize).sum()
}

/// Series for Π (1 + t) over `plus` and Π 1/(1 − t) over `geometric`, where
/// each t is an exponent vector, truncated to x-degree ≤ cap.
fn product_series(vars: Vec<String>, nx: usize, plus: &[Vec<i32>], geometric: &[Vec<i32>], cap: usize) -> LaurentPolynomial {
    let keep = |e: &[i32]| x_degree(e, nx) <= cap;
    let mut acc = LaurentPolynomial::one(vars.clone());
    for t in plus {
        let mut f = LaurentPolynomial::one(vars.clone());
        f.add_term(t.clone(), 1);
        acc = acc.mul_keep(&f, keep);
    }
    for t in geometric {
        let step = x_degree(t, nx).max(1);
        let mut f = LaurentPolynomial::zero(vars.clone());
        for k in 0..=cap / step {
            f.add_term(t.iter().map(|x| x * k as i32).collect(), 1);
        }
        acc = acc.mul_keep(&f, keep);
    }
    acc
}

fn pair_exponent(nx: usize, ny: usize, i: usize, j: usize) -> Vec<i32> {
    let mut e = vec![0; nx + ny];
    e[i] += 1;
    e[nx + j] += 1;
    e
}

fn xy_vars(x: Rank, y: Rank) -> Vec<String> {
    let mut v = variables("x", x);
    v.extend(variables("y", y));
    v
}

/// Π_{|b|≠|b′|}(1 + x_b y_{b′}) / Π_{|b|=|b′|}(1 − x_b y_{b′}) (or the dual
/// version with the parities exchanged), up to x-degree `cap`.
pub fn cauchy_lhs(x: Rank, y: Rank, cap: usize, dual: bool) -> LaurentPolynomial {
    let (nx, ny) = (x.size(), y.size());
    let (mut plus, mut geo) = (Vec::new(), Vec::new());
    for (i, b) in x.letters().into_iter().enumerate() {
        for (j, b2) in y.letters().into_iter().enumerate() {
            let mixed = b.is_barred() != b2.is_barred();
            let e = pair_exponent(nx, ny, i, j);
            if mixed != dual {
                plus.push(e);
            } else {
                geo.push(e);
            }
        }
    }
    product_series(xy_vars(x, y), nx, &plus, &geo, cap)
}

/// Σ_{|λ| ≤ cap} hs_λ(x) hs_λ(y), or hs_λ(x) hs_{λ′}(y) for the dual identity.
pub fn cauchy_rhs(x: Rank, y: Rank, cap: usize, dual: bool) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(xy_vars(x, y));
    for k in 0..=cap as u32 {
        for l in Partition::of_size(k) {
            let partner = if dual { l.conjugate() } else { l.clone() };
            if !l.is_hook(x) || !partner.is_hook(y) {
                continue;
            }
            let hx = hook_schur_in("x", x, &l).expect("hook shape");
            let hy = hook_schur_in("y", y, &partner).expect("hook shape");
            out = out.add(&hx.tensor(&hy));
        }
    }
    out
}

/// Generating function of symmetric matrices (all, or 𝔬 = 0 when `even`).
pub fn symmetric_lhs(rank: Rank, cap: usize, even: bool) -> LaurentPolynomial {
    let letters = rank.letters();
    let nx = letters.len();
    let (mut plus, mut geo) = (Vec::new(), Vec::new());
    for (i, b) in letters.iter().enumerate() {
        let mut e = vec![0; nx];
        match (even, b.is_barred()) {
            (false, _) => {
                e[i] = 1;
                geo.push(e);
            }
            (true, true) => {
                e[i] = 2;
                geo.push(e);
            }
            (true, false) => {}
        }
        for (j, b2) in letters.iter().enumerate().skip(i + 1) {
            let mut e = vec![0; nx];
            e[i] = 1;
            e[j] = 1;
            if b.is_barred() != b2.is_barred() {
                plus.push(e);
            } else {
                geo.push(e);
            }
        }
    }
    product_series(variables("x", rank), nx, &plus, &geo, cap)
}

/// Σ_{|λ| ≤ cap} hs_λ(x), over even λ only when `even`.
pub fn symmetric_rhs(rank: Rank, cap: usize, even: bool) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(variables("x", rank));
    for k in 0..=cap as u32 {
        for l in Partition::hooks_of_size(rank, k) {
            if !even || l.is_even() {
                out = out.add(&hook_schur(rank, &l).expect("hook shape"));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    Cauchy,
    DualCauchy,
    Sym1,
    Sym2,
}

impl Identity {
    pub fn parse(s: &str) -> Option<Identity> {
        match s {
            "cauchy" => Some(Identity::Cauchy),
            "dual-cauchy" => Some(Identity::DualCauchy),
            "sym1" => Some(Identity::Sym1),
            "sym2" => Some(Identity::Sym2),
            _ => None,
        }
    }
}

/// Outcome of a coefficientwise comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub terms: usize,
    /// (monomial, left coefficient, right coefficient)
    pub difference: Option<(String, i64, i64)>,
}

impl Report {
    pub fn compare(lhs: &LaurentPolynomial, rhs: &LaurentPolynomial) -> Report {
        Report { terms: lhs.len(), difference: lhs.first_difference(rhs) }
    }

    pub fn is_ok(&self) -> bool {
        self.difference.is_none()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.difference {
            None => write!(f, "OK"),
            Some((m, l, r)) => write!(f, "FAIL ({m}: {l} vs {r})"),
        }
    }
}

/// Check one identity at x-degree ≤ cap; `x` is also the y rank for the
/// symmetric identities, which have no y.
pub fn verify_identity(which: Identity, x: Rank, y: Rank, cap: usize) -> Report {
    let (lhs, rhs) = match which {
        Identity::Cauchy => (cauchy_lhs(x, y, cap, false), cauchy_rhs(x, y, cap, false)),
        Identity::DualCauchy => (cauchy_lhs(x, y, cap, true), cauchy_rhs(x, y, cap, true)),
        Identity::Sym1 => (symmetric_lhs(x, cap, false), symmetric_rhs(x, cap, false)),
        Identity::Sym2 => (symmetric_lhs(x, cap, true), symmetric_rhs(x, cap, true)),
    };
    Report::compare(&lhs, &rhs)
}

/// Adjacent swaps within each parity class that change hs_λ.
pub fn supersymmetry_failures(rank: Rank, shape: &Partition) -> Result<Vec<String>> {
    let p = hook_schur(rank, shape)?;
    let letters = rank.letters();
    let mut out = Vec::new();
    for k in 0..letters.len().saturating_sub(1) {
        if letters[k].is_barred() == letters[k + 1].is_barred() && p.swap_vars(k, k + 1) != p {
            out.push(format!("hs_{shape} is not symmetric in {} and {}", letters[k], letters[k + 1]));
        }
    }
    Ok(out)
}

/// N^λ_{μν}: s_{μ*}(y) s_ν(y) = Σ_λ N^λ_{μν} s_λ(y) in u variables.
pub fn lr_coefficients(mu: &Partition, nu: &Partition, u: usize) -> BTreeMap<GeneralizedPartition, i64> {
    let (Ok(m), Ok(n)) = (GeneralizedPartition::from_partition(mu, u), GeneralizedPartition::from_partition(nu, u))
    else {
        // a Schur polynomial in u variables vanishes past u rows
        return BTreeMap::new();
    };
    let mut rest = rational_schur(&m.star()).mul(&rational_schur(&n));
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.terms().last().map(|(e, c)| (e.to_vec(), c)) {
        // the lexicographically largest exponent is dominance-maximal
        let l = GeneralizedPartition::new(lead).expect("leading exponent of a Schur expansion is dominant");
        assert!(c > 0, "negative Littlewood–Richardson coefficient at {l}");
        rest = rest.sub(&rational_schur(&l).scale(c));
        out.insert(l, c);
    }
    out
}

/// ch 𝐁(λ) restricted to the (m, n) window and excitation ≤ cap, over the
/// x variables of rank m|n.
pub fn semi_character_lhs(shape: &GeneralizedPartition, m: usize, n: usize, cap: usize) -> LaurentPolynomial {
    let rank = Rank::new(m, n);
    let vars = variables("x", rank);
    let mut p = LaurentPolynomial::zero(vars.clone());
    for t in SemiTableau::windowed(shape, m, n, cap) {
        p.add_term(weight_monomial(&vars, "x", &t.semi_weight()), 1);
    }
    p
}

/// Σ N^{λ*}_{μν} s_{μ′}(x₊⁻¹) s_ν(x₋) over |μ| + |ν| ≤ cap, μ₁ ≤ m, ℓ(ν) ≤ n.
pub fn semi_character_rhs(shape: &GeneralizedPartition, m: usize, n: usize, cap: usize) -> LaurentPolynomial {
    let u = shape.len();
    let target = shape.star();
    let vars = variables("x", Rank::new(m, n));
    let mut out = LaurentPolynomial::zero(vars.clone());
    for a in 0..=cap as u32 {
        for b in 0..=(cap as u32 - a) {
            for mu in Partition::of_size(a) {
                for nu in Partition::of_size(b) {
                    if mu.part(1) as usize > m || nu.len() > n {
                        continue;
                    }
                    let coeff = lr_coefficients(&mu, &nu, u).get(&target).copied().unwrap_or(0);
                    if coeff == 0 {
                        continue;
                    }
                    let plus = hook_schur_in("x", Rank::new(m, 0), &mu.conjugate()).expect("column shape fits").invert();
                    let minus = hook_schur_in("x", Rank::new(0, n), &nu.conjugate()).expect("row shape fits");
                    out = out.add(&plus.tensor(&minus).embed(&vars).scale(coeff));
                }
            }
        }
    }
    out
}

pub fn verify_fock_character(shape: &GeneralizedPartition, m: usize, n: usize, cap: usize) -> Report {
    Report::compare(&semi_character_lhs(shape, m, n, cap), &semi_character_rhs(shape, m, n, cap))
}

/// Σ x^{wt A} y^{wt* A} over the windowed slice of 𝓜^u.
pub fn matrix_model_character(u: usize, m: usize, n: usize, cap: usize) -> LaurentPolynomial {
    let (x, y) = (Rank::new(m, n), Rank::new(u, 0));
    let vars = xy_vars(x, y);
    let mut p = LaurentPolynomial::zero(vars.clone());
    for a in SemiMatrix::windowed(u, m, n, cap) {
        let mut e = weight_monomial(&vars, "x", &a.weight());
        let f = weight_monomial(&vars, "y", &a.dual_weight());
        e.iter_mut().zip(f).for_each(|(a, b)| *a += b);
        p.add_term(e, 1);
    }
    p
}

/// The windowed product Π_{b barred}(1 + x_b⁻¹ y⁻¹) / Π_{b unbarred}(1 − x_b y).
pub fn infinite_cauchy_lhs(u: usize, m: usize, n: usize, cap: usize) -> LaurentPolynomial {
    let (x, y) = (Rank::new(m, n), Rank::new(u, 0));
    let (nx, ny) = (x.size(), y.size());
    let (mut plus, mut geo) = (Vec::new(), Vec::new());
    for (i, b) in x.letters().into_iter().enumerate() {
        for j in 0..ny {
            let e = pair_exponent(nx, ny, i, j);
            if b.is_barred() {
                plus.push(e.iter().map(|v| -v).collect());
            } else {
                geo.push(e);
            }
        }
    }
    product_series(xy_vars(x, y), nx, &plus, &geo, cap)
}

/// Σ_λ ch 𝐁(λ) s_{λ*}(y) over the same window and cap.
pub fn infinite_cauchy_rhs(u: usize, m: usize, n: usize, cap: usize) -> LaurentPolynomial {
    let (x, y) = (Rank::new(m, n), Rank::new(u, 0));
    let vars = xy_vars(x, y);
    let mut out = LaurentPolynomial::zero(vars.clone());
    for l in GeneralizedPartition::in_box(u, -(cap as i32), m as i32) {
        let ch = semi_character_lhs(&l, m, n, cap);
        if ch.is_zero() {
            continue;
        }
        out = out.add(&ch.tensor(&rational_schur(&l.star())).embed(&vars));
    }
    out
}
