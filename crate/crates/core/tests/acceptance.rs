//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! `cargo test --test acceptance` (add `--release` for the timings that matter).

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supercrystal::alphabet::{coroot_pairing, simple_root, Index, IndexKind, Letter, Rank};
use supercrystal::biword::commutation_failures;
use supercrystal::characters::{
    hook_schur, lr_coefficients, variables, verify_fock_character, verify_identity, Identity,
};
use supercrystal::crystal::Crystal;
use supercrystal::dual::{build_a_sharp_lambda, decompose_dual, rotation_failures, DualMatrix};
use supercrystal::matrix::{build_a_lambda, classify_highest, decompose, SuperMatrix};
use supercrystal::partition::{GeneralizedPartition, Partition};
use supercrystal::poly::LaurentPolynomial;
use supercrystal::semi::{
    build_script_a, decompose_semi, random_semi_matrix, semi_tableau_check, window_failures, RationalTableau,
    SemiMatrix, SemiTableau, SemiWord,
};
use supercrystal::symmetric::decompose_symmetric;
use supercrystal::tableau::highest_weight_tableau;
use supercrystal::word::Word;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first(failures: &[String]) -> Result<(), String> {
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
    }
}

fn r22() -> Rank {
    Rank::new(2, 2)
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn gp(parts: &[i32]) -> GeneralizedPartition {
    GeneralizedPartition::new(parts.to_vec()).unwrap()
}

fn codes(v: &[Letter]) -> Vec<i32> {
    v.iter().map(|b| b.0).collect()
}

fn sword(m: usize, c: &[i32]) -> SemiWord {
    SemiWord::from_window(m, &c.iter().map(|&x| Letter(x)).collect::<Vec<_>>()).unwrap()
}

fn golden() -> Outcome {
    // signature rule on 1 1̄ 1̄ 1̄ 2̄ 2 2 2̄ 1
    let w = Word::from_codes(&[1, -1, -1, -1, -2, 2, 2, -2, 1]);
    let cases: [(i32, bool, Option<&[i32]>); 6] = [
        (-1, true, Some(&[1, -1, -1, -2, -2, 2, 2, -2, 1])),
        (-1, false, Some(&[1, -1, -1, -1, -1, 2, 2, -2, 1])),
        (1, true, Some(&[1, -1, -1, -1, -2, 1, 2, -2, 1])),
        (1, false, Some(&[2, -1, -1, -1, -2, 2, 2, -2, 1])),
        (0, true, Some(&[-1, -1, -1, -1, -2, 2, 2, -2, 1])),
        (0, false, None),
    ];
    for (i, raise, want) in cases {
        let got = if raise { w.raise(Index(i)) } else { w.lower(Index(i)) };
        ensure(got.map(|x| x.codes()).as_deref() == want, || format!("word operator at index {i}"))?;
    }

    // the 𝐌 example: biwords and π(A)
    let a = SuperMatrix::from_rows(r22(), r22(), &[vec![1, 0, 1, 1], vec![0, 2, 0, 0], vec![1, 0, 0, 1], vec![0, 0, 2, 0]])
        .unwrap();
    let om = a.omega();
    ensure(codes(&om.top) == [1, -2, -1, -1, -2, 2, 2, -2, 1], || "Ω top".into())?;
    ensure(codes(&om.bottom) == [-2, -2, -1, -1, 1, 1, 1, 2, 2], || "Ω bottom".into())?;
    let st = a.omega_star();
    ensure(codes(&st.top) == [-2, -2, -2, -1, -1, 1, 1, 2, 2], || "Ω* top".into())?;
    ensure(codes(&st.bottom) == [2, 1, -2, -1, -1, -2, 2, 1, 1], || "Ω* bottom".into())?;
    let (p1, p2) = a.rsk_pi();
    ensure(p1.row_codes() == vec![vec![-2, -2, -2, -1, 1], vec![-1, 2], vec![1], vec![2]], || "P₁".into())?;
    // the printed P₂ has last row 2, which contradicts the column sums of A
    ensure(p2.row_codes() == vec![vec![-2, -2, -1, 1, 2], vec![-1, 2], vec![1], vec![1]], || "P₂".into())?;

    // A_λ for λ = (7,5,5,3,3,2,2,1) at 4|3 × 3|3
    let lam = p(&[7, 5, 5, 3, 3, 2, 2, 1]);
    let (rows, cols) = (Rank::new(4, 3), Rank::new(3, 3));
    let al = build_a_lambda(&lam, rows, cols).map_err(|e| e.to_string())?;
    let want: Vec<Vec<u32>> = vec![
        vec![7, 0, 0, 0, 0, 0],
        vec![0, 5, 0, 0, 0, 0],
        vec![0, 0, 5, 0, 0, 0],
        vec![0, 0, 0, 1, 1, 1],
        vec![0, 0, 0, 1, 2, 1],
        vec![0, 0, 0, 2, 1, 0],
        vec![0, 0, 0, 1, 0, 0],
    ];
    ensure(al.inner().to_rows() == want, || "A_λ matrix".into())?;
    let (a1, a2) = al.rsk_pi();
    ensure(a1 == highest_weight_tableau(rows, &lam).unwrap(), || "π(A_λ) first tableau".into())?;
    ensure(a2 == highest_weight_tableau(cols, &lam).unwrap(), || "π(A_λ) second tableau".into())?;

    // the 𝐌♯ example
    let d = DualMatrix::from_rows(r22(), r22(), &[vec![1, 1, 0, 0], vec![0, 0, 2, 1], vec![0, 1, 1, 0], vec![2, 0, 0, 0]])
        .unwrap();
    let s = d.sharp();
    ensure(codes(&s.top) == [-2, 2, 2, -2, 1, 1, -1, -1, -1], || "♯ top".into())?;
    ensure(codes(&s.bottom) == [-2, -2, -2, -1, -1, 1, 1, 1, 2], || "♯ bottom".into())?;
    let t = d.sharp_star();
    ensure(codes(&t.top) == [2, 2, 1, 1, -1, -1, -1, -2, -2], || "♯* top".into())?;
    ensure(codes(&t.bottom) == [-2, -2, 1, -1, 1, 1, 2, -2, -1], || "♯* bottom".into())?;
    let (q1, q2) = d.rsk_pi_sharp();
    ensure(q1.row_codes() == vec![vec![-2, -2, -1, 1, 2], vec![-1, -1], vec![1, 2]], || "P♯₁".into())?;
    // the printed P♯₂ has three 1̄'s; A has two
    ensure(
        q2.row_codes() == vec![vec![-2, -2, -2], vec![-1, -1, 1], vec![1], vec![1], vec![2]],
        || "P♯₂".into(),
    )?;

    // A♯_λ for λ = (7,6,2,2,1,1)
    let lam = p(&[7, 6, 2, 2, 1, 1]);
    let (rows, cols) = (Rank::new(3, 2), Rank::new(4, 3));
    let ash = build_a_sharp_lambda(&lam, rows, cols).map_err(|e| e.to_string())?;
    let want: Vec<Vec<u32>> = vec![
        vec![1, 1, 1, 1, 3, 0, 0],
        vec![1, 1, 1, 1, 0, 2, 0],
        vec![1, 1, 0, 0, 0, 0, 0],
        vec![2, 1, 0, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0, 0],
    ];
    ensure(ash.inner().to_rows() == want, || "A♯_λ matrix".into())?;
    let (s1, s2) = ash.rsk_pi_sharp();
    ensure(s1 == highest_weight_tableau(rows, &lam).unwrap(), || "π♯(A♯_λ) first".into())?;
    ensure(s2 == highest_weight_tableau(cols, &lam.conjugate()).unwrap(), || "π♯(A♯_λ) second".into())?;

    // the rotation ρ
    let f = DualMatrix::from_rows(
        r22(),
        Rank::new(3, 3),
        &[vec![0, 1, 1, 0, 0, 2], vec![1, 0, 0, 2, 1, 0], vec![3, 0, 1, 1, 0, 1], vec![0, 2, 0, 0, 0, 0]],
    )
    .unwrap();
    let want: Vec<Vec<u32>> =
        vec![vec![0, 3, 1, 0], vec![2, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 1, 2, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 2]];
    ensure(f.rotate90().inner().to_rows() == want, || "ρ".into())?;

    // a semi-infinite word of charge −3 and a tableau of shape (3,1,−2,−2)
    ensure(sword(6, &[-6, -5, -4, -3, -1, 2, 3, 4, 4]).charge() == -3, || "charge".into())?;
    let cols = vec![
        sword(6, &[-6, -5, -1]),
        sword(6, &[-6, -5, -3, -2, -1]),
        sword(2, &[-2, -1, 2, 3]),
        sword(2, &[-2, -1, 1, 1]),
    ];
    let tab = semi_tableau_check(cols).map_err(|e| e.to_string())?;
    ensure(tab.shape() == gp(&[3, 1, -2, -2]), || "semi tableau shape".into())?;

    // σ and the membership pair
    let rows_of = |v: &[&[u32]]| v.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let shape = gp(&[3, 2, 0, -1, -2]);
    let pos = rows_of(&[&[4, 3, 1], &[2, 2], &[], &[], &[]]);
    ensure(
        RationalTableau::new(5, shape.clone(), pos.clone(), rows_of(&[&[], &[], &[], &[1], &[2, 2]])).is_ok(),
        || "membership".into(),
    )?;
    ensure(
        RationalTableau::new(5, shape.clone(), pos.clone(), rows_of(&[&[], &[], &[], &[4], &[2, 5]])).is_err(),
        || "non-membership".into(),
    )?;
    let rt = RationalTableau::new(5, shape, pos, rows_of(&[&[], &[], &[], &[1], &[2, 4]])).unwrap();
    let sg = rt.sigma();
    ensure(sg.shape() == &gp(&[4, 3, 1, 0, -1]), || "σ shape".into())?;
    ensure(sg.positive_rows() == &rows_of(&[&[5, 4, 3, 1], &[3, 2, 2], &[2], &[], &[]])[..], || "σ rows".into())?;
    ensure(sg.negative_rows() == &rows_of(&[&[], &[], &[], &[], &[2]])[..], || "σ dual rows".into())?;

    // the correspondence example: Res, 𝒫₁, P♯₂ and 𝒫₂
    let sm = SemiMatrix::from_columns(vec![
        sword(5, &[-5, -4, -2, 2, 2]),
        sword(5, &[-5, -4, -3, 3]),
        sword(5, &[-5, -3, -2, 1, 1, 1]),
    ]);
    let want: Vec<Vec<u32>> =
        vec![vec![1, 1, 1], vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1], vec![0, 0, 0], vec![0, 0, 3], vec![2, 0, 0], vec![0, 1, 0]];
    ensure(sm.res(5, 3).inner().to_rows() == want, || "Res".into())?;
    let pp = sm.p1();
    ensure(pp.shape() == gp(&[3, -1, -2]), || "𝒫₁ shape".into())?;
    let want = [sword(5, &[-5, -2]), sword(5, &[-5, -4, -3, 2, 2, 3]), sword(5, &[-5, -4, -3, -2, 1, 1, 1])];
    ensure(pp.columns() == &want[..], || "𝒫₁ columns".into())?;
    let (_, sharp) = sm.res(4, 3).rsk_pi_sharp();
    ensure(
        sharp.row_codes() == vec![vec![-3, -3, -3, -3, -2, -1], vec![-2, -2, -1, -1, -1], vec![-1]],
        || "P♯₂ of Res".into(),
    )?;
    let pq = sm.p2();
    ensure(pq.shape() == &gp(&[2, 1, -3]), || "𝒫₂ shape".into())?;
    ensure(pq.positive_rows() == &rows_of(&[&[2, 1], &[1], &[]])[..], || "𝒫₂ rows".into())?;
    ensure(pq.negative_rows() == &rows_of(&[&[], &[], &[1, 2, 2]])[..], || "𝒫₂ dual rows".into())?;
    Ok("all displayed examples; two printed tableaux disagree with their own weights and the computed ones are used".into())
}

fn crystal_axioms() -> Outcome {
    let rank = r22();
    let mut n = 0;
    for len in 0..=5 {
        for w in Word::all(rank, len) {
            n += 1;
            let wt = w.weight();
            for i in rank.indices() {
                let (e, f) = (w.eps(i), w.phi(i));
                let pairing = coroot_pairing(i, &wt);
                match i.kind() {
                    IndexKind::Odd => {
                        ensure(pairing >= 0, || format!("⟨h_0, wt {w}⟩ < 0"))?;
                        ensure(e + f == usize::from(pairing != 0), || format!("odd string at {w}"))?;
                    }
                    _ => ensure(f as i64 - e as i64 == pairing, || format!("φ − ε at {w}, index {i}"))?,
                }
                if let Some(x) = w.raise(i) {
                    ensure(x.weight() == &wt + &simple_root(i), || format!("wt e_{i} {w}"))?;
                    ensure(x.eps(i) + 1 == e || i.kind() == IndexKind::Odd, || format!("ε e_{i} {w}"))?;
                    ensure(x.lower(i).as_ref() == Some(&w), || format!("f e_{i} {w}"))?;
                }
                if let Some(x) = w.lower(i) {
                    ensure(x.weight() == &wt - &simple_root(i), || format!("wt f_{i} {w}"))?;
                    ensure(x.phi(i) + 1 == f || i.kind() == IndexKind::Odd, || format!("φ f_{i} {w}"))?;
                    ensure(x.raise(i).as_ref() == Some(&w), || format!("e f_{i} {w}"))?;
                }
            }
        }
    }
    Ok(format!("{n} words, 3 indices"))
}

fn commutation() -> Outcome {
    let all = SuperMatrix::enumerate(r22(), r22(), 4);
    first(&commutation_failures(&all))?;
    Ok(format!("{} matrices", all.len()))
}

fn highest_classification(rows: Rank, cols: Rank, bound: u32) -> Result<usize, String> {
    let d = decompose(rows, cols, bound);
    first(&d.failures)?;
    let highest = classify_highest(rows, cols, bound);
    for h in &highest {
        let (p, q) = h.rsk_pi();
        ensure(p.shape() == q.shape(), || format!("λ ≠ μ at {}", h.inner()))?;
        ensure(build_a_lambda(&p.shape(), rows, cols).as_ref() == Ok(h), || format!("{} is not A_λ", h.inner()))?;
    }
    // every λ that fits both ranks occurs exactly once
    let expected: usize = (0..=bound)
        .flat_map(Partition::of_size)
        .filter(|l| l.is_hook(rows) && l.is_hook(cols))
        .count();
    ensure(highest.len() == expected, || format!("{} highest elements, {expected} shapes", highest.len()))?;
    ensure(d.components.len() == expected, || "component count".into())?;
    Ok(expected)
}

fn rsk_theorem() -> Outcome {
    let a = highest_classification(r22(), r22(), 5)?;
    let b = highest_classification(Rank::new(3, 0), Rank::new(3, 0), 5)?;
    Ok(format!("{a} components at 2|2, {b} in the classical case"))
}

fn identities() -> Outcome {
    for which in [Identity::Cauchy, Identity::DualCauchy, Identity::Sym1, Identity::Sym2] {
        let r = verify_identity(which, r22(), r22(), 6);
        ensure(r.is_ok(), || format!("{which:?}: {r}"))?;
    }
    Ok("Cauchy, dual Cauchy, both symmetric identities to degree 6".into())
}

fn symmetric() -> Outcome {
    let d = decompose_symmetric(r22(), 4);
    first(&d.failures)?;
    for c in &d.components {
        let h = c.highest.as_ref().ok_or("missing highest element")?;
        ensure(h.o_statistic() == c.odd, || "𝔬(A_λ)".into())?;
    }
    Ok(format!("{} components", d.components.len()))
}

fn dual() -> Outcome {
    let d = decompose_dual(r22(), r22(), 4);
    first(&d.failures)?;
    for c in &d.components {
        ensure(c.partner == c.shape.conjugate(), || format!("partner of {}", c.shape))?;
        let h = c.highest.as_ref().ok_or("missing highest element")?;
        ensure(build_a_sharp_lambda(&c.shape, r22(), r22()).as_ref() == Ok(h), || format!("A♯ of {}", c.shape))?;
    }
    let all = DualMatrix::enumerate(r22(), r22(), 4);
    first(&rotation_failures(&all))?;
    Ok(format!("{} components, {} matrices rotated", d.components.len(), all.len()))
}

fn semi_infinite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    for _ in 0..200 {
        let u = rng.gen_range(1..=3);
        let a = random_semi_matrix(&mut rng, u, 3, 3, 4);
        first(&window_failures(&a, 2))?;
    }
    let d = decompose_semi(2, 2, 2, 3);
    first(&d.failures)?;
    let with_highest = d.components.iter().filter(|c| c.highest.is_some()).count();
    for c in &d.components {
        if let Some(h) = &c.highest {
            ensure(*h == build_script_a(&c.shape), || format!("highest of {}", c.shape))?;
            ensure(h.p1() == SemiTableau::highest(&c.shape), || "𝒫₁ of 𝒜_λ".into())?;
        }
    }
    let mut nontrivial = 0;
    for u in 1..=2 {
        for l in GeneralizedPartition::in_box(u, -3, 3) {
            let r = verify_fock_character(&l, 2, 2, 3);
            ensure(r.is_ok(), || format!("character of {l}: {r}"))?;
            nontrivial += usize::from(r.terms > 0);
        }
    }
    ensure(nontrivial > 0, || "every character slice is empty".into())?;
    Ok(format!("200 random windows, {with_highest} windowed 𝒜_λ, {nontrivial} non-empty character slices"))
}

/// Σ_{i ≤ j ≤ k} monomials of degree d in three variables.
fn complete(vars: &[String], d: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(vars.to_vec());
    if d < 0 {
        return out;
    }
    for a in 0..=d {
        for b in 0..=d - a {
            out.add_term(vec![a as i32, b as i32, (d - a - b) as i32], 1);
        }
    }
    out
}

/// Jacobi–Trudi: s_λ = det(h_{λ_i − i + j}).
fn jacobi_trudi(vars: &[String], lam: &Partition) -> LaurentPolynomial {
    let l = lam.len();
    let mut perm: Vec<usize> = (0..l).collect();
    let mut out = LaurentPolynomial::zero(vars.to_vec());
    fn permutations(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], i64), sign: i64) {
        if k == perm.len() {
            f(perm, sign);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permutations(k + 1, perm, f, if i == k { sign } else { -sign });
            perm.swap(k, i);
        }
    }
    permutations(
        0,
        &mut perm,
        &mut |s, sign| {
            let mut term = LaurentPolynomial::one(vars.to_vec());
            for (i, &j) in s.iter().enumerate() {
                term = term.mul(&complete(vars, lam.part(i + 1) as i64 - i as i64 + j as i64));
            }
            out = out.add(&term.scale(sign));
        },
        1,
    );
    out
}

/// Classical LR numbers c^λ_{μν}: skew tableaux of shape λ/μ and content ν
/// whose reverse row reading is a lattice word.
fn lr_brute(lam: &[u32], mu: &[u32], nu: &[u32]) -> i64 {
    let rows = lam.len();
    let mu_at = |r: usize| mu.get(r).copied().unwrap_or(0) as usize;
    if (0..rows.max(mu.len())).any(|r| mu_at(r) > lam.get(r).copied().unwrap_or(0) as usize) {
        return 0;
    }
    let cells: Vec<(usize, usize)> =
        (0..rows).flat_map(|r| (mu_at(r)..lam[r] as usize).map(move |c| (r, c))).collect();
    let total: u32 = nu.iter().sum();
    if cells.len() != total as usize {
        return 0;
    }
    let k = nu.len().max(1);
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        k: usize,
        fill: &mut BTreeMap<(usize, usize), usize>,
        nu: &[u32],
        count: &mut i64,
    ) {
        if idx == cells.len() {
            let mut content = vec![0u32; k];
            // reading: rows top to bottom, each right to left
            let mut order: Vec<&(usize, usize)> = cells.iter().collect();
            order.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            for cell in order {
                let v = fill[cell];
                content[v] += 1;
                if v > 0 && content[v] > content[v - 1] {
                    return;
                }
            }
            if content.iter().zip(nu).all(|(a, b)| a == b) {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[idx];
        for v in 0..k {
            if c > 0 {
                if let Some(&left) = fill.get(&(r, c - 1)) {
                    if left > v {
                        continue;
                    }
                }
            }
            if r > 0 {
                if let Some(&up) = fill.get(&(r - 1, c)) {
                    if up >= v {
                        continue;
                    }
                }
            }
            fill.insert((r, c), v);
            go(idx + 1, cells, k, fill, nu, count);
            fill.remove(&(r, c));
        }
    }
    let mut count = 0;
    go(0, &cells, k, &mut fill, nu, &mut count);
    count
}

fn classical() -> Outcome {
    let rank = Rank::new(3, 0);
    let vars = variables("x", rank);
    let mut n = 0;
    for size in 0..=5 {
        for lam in Partition::of_size(size) {
            let hs = hook_schur(rank, &lam).map_err(|e| e.to_string());
            let oracle = if lam.len() > 3 { LaurentPolynomial::zero(vars.clone()) } else { jacobi_trudi(&vars, &lam) };
            match hs {
                Ok(h) => ensure(h == oracle, || format!("hs_{lam} differs from Jacobi–Trudi"))?,
                Err(_) => ensure(oracle.is_zero(), || format!("hs_{lam} rejected but s_λ ≠ 0"))?,
            }
            n += 1;
        }
    }
    // N^λ_{μν} = c^{λ + (μ₁^u)}_{μᶜ, ν} with μᶜ the complement of μ in the u × μ₁ box
    let u = 3;
    let mut m = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for mu in Partition::of_size(a) {
                for nu in Partition::of_size(b) {
                    if mu.len() > u || nu.len() > u {
                        continue;
                    }
                    let got = lr_coefficients(&mu, &nu, u);
                    let top = mu.part(1);
                    let comp: Vec<u32> = (1..=u).rev().map(|k| top - mu.part(k)).collect();
                    let lo = -(top as i32);
                    let hi = b as i32;
                    for lam in GeneralizedPartition::in_box(u, lo, hi) {
                        let shifted: Vec<u32> = lam.parts().iter().map(|&x| (x + top as i32) as u32).collect();
                        let want = lr_brute(&shifted, &comp, nu.parts());
                        let have = got.get(&lam).copied().unwrap_or(0);
                        ensure(want == have, || format!("N^{lam}_{{{mu},{nu}}}: {have} vs oracle {want}"))?;
                        m += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{n} Schur functions, {m} LR coefficients"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden examples", golden, Duration::from_secs(1)),
        ("crystal axioms on words", crystal_axioms, Duration::from_secs(10)),
        ("bicrystal commutation", commutation, Duration::from_secs(120)),
        ("RSK highest weights", rsk_theorem, Duration::from_secs(300)),
        ("Cauchy identities", identities, Duration::from_secs(60)),
        ("symmetric matrices", symmetric, Duration::from_secs(120)),
        ("dual bicrystal and rotation", dual, Duration::from_secs(180)),
        ("semi-infinite correspondence", semi_infinite, Duration::from_secs(300)),
        ("classical cross-checks", classical, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (k, (name, f, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let timing = format!("{:.2}s of {}s", took.as_secs_f64(), budget.as_secs());
        match outcome {
            Ok(detail) if took <= budget => println!("PASS {} {name}: {detail} ({timing})", k + 1),
            Ok(detail) => {
                failed += 1;
                println!("FAIL {} {name}: over budget, {detail} ({timing})", k + 1)
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e} ({timing})", k + 1)
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
