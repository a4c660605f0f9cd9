//! Sparse Laurent polynomials with integer coefficients over named variables.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, i64>,
}

/// One term of the JSON term list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub exps: BTreeMap<String, i32>,
}

impl LaurentPolynomial {
    pub fn zero(vars: Vec<String>) -> LaurentPolynomial {
        LaurentPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Vec<String>) -> LaurentPolynomial {
        let e = vec![0; vars.len()];
        LaurentPolynomial::monomial(vars, e, 1)
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<i32>, coeff: i64) -> LaurentPolynomial {
        assert_eq!(vars.len(), exps.len());
        let mut p = LaurentPolynomial::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i64)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn coeff(&self, exps: &[i32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_vars(&self, other: &LaurentPolynomial) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.same_vars(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.to_vec(), c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.vars.clone());
        if k != 0 {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        }
        out
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.mul_keep(other, |_| true)
    }

    /// Product keeping only the exponents accepted by `keep`.
    pub fn mul_keep(&self, other: &LaurentPolynomial, keep: impl Fn(&[i32]) -> bool) -> LaurentPolynomial {
        self.same_vars(other);
        let mut acc: HashMap<Vec<i32>, i64> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if keep(&e) {
                    *acc.entry(e).or_insert(0) += c1 * c2;
                }
            }
        }
        LaurentPolynomial { vars: self.vars.clone(), terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn filter(&self, keep: impl Fn(&[i32]) -> bool) -> LaurentPolynomial {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), *c)).collect(),
        }
    }

    /// Product of polynomials in disjoint variable sets, over the concatenated variables.
    pub fn tensor(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        let mut out = LaurentPolynomial::zero(vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                e.extend_from_slice(e2);
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Re-expresses the polynomial over `target`, which must contain every variable.
    pub fn embed(&self, target: &[String]) -> LaurentPolynomial {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).unwrap_or_else(|| panic!("variable {v} missing")))
            .collect();
        let mut out = LaurentPolynomial::zero(target.to_vec());
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for (k, &x) in e.iter().enumerate() {
                f[map[k]] += x;
            }
            out.add_term(f, *c);
        }
        out
    }

    pub fn swap_vars(&self, a: usize, b: usize) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.swap(a, b);
            out.add_term(f, *c);
        }
        out
    }

    /// Substitutes x ↦ x⁻¹ for every variable.
    pub fn invert(&self) -> LaurentPolynomial {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), *c)).collect(),
        }
    }

    pub fn rename(&self, vars: Vec<String>) -> LaurentPolynomial {
        assert_eq!(vars.len(), self.vars.len());
        LaurentPolynomial { vars, terms: self.terms.clone() }
    }

    /// The first exponent (in term order) where the two polynomials differ.
    pub fn first_difference(&self, other: &LaurentPolynomial) -> Option<(String, i64, i64)> {
        self.same_vars(other);
        let d = self.sub(other);
        let (e, _) = d.terms.iter().next()?;
        Some((self.monomial_string(e), self.coeff(e), other.coeff(e)))
    }

    pub fn monomial_string(&self, e: &[i32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&self.vars)
            .filter(|(x, _)| **x != 0)
            .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                coeff: *c,
                exps: e.iter().zip(&self.vars).filter(|(x, _)| **x != 0).map(|(x, v)| (v.clone(), *x)).collect(),
            })
            .collect()
    }

    pub fn from_json(vars: Vec<String>, terms: &[TermJson]) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(vars);
        for t in terms {
            let e = out.vars.iter().map(|v| t.exps.get(v).copied().unwrap_or(0)).collect();
            out.add_term(e, t.coeff);
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let m = self.monomial_string(e);
                match (*c, m.as_str()) {
                    (c, "1") => c.to_string(),
                    (1, _) => m,
                    (-1, _) => format!("-{m}"),
                    (c, _) => format!("{c}*{m}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}
