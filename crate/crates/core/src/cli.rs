//! The `crystal` command line. `run` returns the exit code and the stdout
//! payload so tests can drive it without spawning a process.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::fs;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::alphabet::Rank;
use crate::biword::{IntMatrix, MatrixJson};
use crate::characters::{
    hook_schur, lr_coefficients, rational_schur, verify_fock_character, verify_identity, Identity, Report,
};
use crate::dual::{decompose_dual, rotation_failures, DualMatrix};
use crate::error::{CrystalError, Result};
use crate::matrix::{decompose, SuperMatrix};
use crate::partition::{GeneralizedPartition, Partition};
use crate::semi::{decompose_semi, random_semi_matrix, window_failures, SemiMatrix};
use crate::symmetric::{decompose_symmetric, SymmetricMatrix};
use crate::tableau::{enumerate_tableaux, highest_weight_tableau, tableau_component, HookTableau};

pub const DEFAULT_SEED: u64 = 20240611;

#[derive(Parser, Debug)]
#[command(name = "crystal", about = "Crystal graphs for gl(m|n)", disable_version_flag = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the hook tableaux of a shape.
    Tableaux(Flags),
    /// π(A) of a matrix, or π♯(A) with --dual.
    Rsk(Flags),
    /// Bicrystal decomposition of 𝐌 (or 𝐌♯ with --dual).
    Decompose(Flags),
    /// Decomposition of symmetric matrices with the 𝔬 statistic.
    Symmetric(Flags),
    /// π♯ and the rotation ρ of a file, or the 𝐌♯ checks without one.
    Dual(Flags),
    /// The semi-infinite matrix model.
    Semi {
        #[arg(value_enum)]
        action: SemiAction,
        #[command(flatten)]
        flags: Flags,
    },
    /// Characters: hook Schur, rational Schur, LR coefficients.
    Char {
        #[arg(value_enum)]
        which: CharKind,
        #[command(flatten)]
        flags: Flags,
    },
    /// Check an identity coefficientwise; prints OK or FAIL.
    Verify {
        #[arg(value_enum)]
        which: VerifyKind,
        #[command(flatten)]
        flags: Flags,
    },
    /// DOT export of the crystal graph 𝐁_{m|n}(λ).
    Dot(Flags),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SemiAction {
    P1,
    P2,
    Varpi,
    Decompose,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CharKind {
    HookSchur,
    RationalSchur,
    Lr,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum VerifyKind {
    Cauchy,
    DualCauchy,
    Sym1,
    Sym2,
    Character,
    Window,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    Count,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
struct Flags {
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    u: usize,
    #[arg(long, default_value_t = 0)]
    v: usize,
    /// Partition, e.g. 3,1,1.
    #[arg(long)]
    shape: Option<String>,
    /// Second partition for `char lr`.
    #[arg(long)]
    nu: Option<String>,
    /// Generalized partition, e.g. 2,0,-1.
    #[arg(long, allow_hyphen_values = true)]
    gshape: Option<String>,
    /// JSON input.
    #[arg(long, visible_alias = "input")]
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    /// Truncation: total x-degree, i.e. |λ| ≤ deg.
    #[arg(long, default_value_t = 6)]
    deg: usize,
    /// Entry sum bound for matrix enumeration.
    #[arg(long, default_value_t = 3)]
    bound: u32,
    /// Semi-infinite window m,n.
    #[arg(long)]
    window: Option<String>,
    /// Excitation cap for semi-infinite enumeration.
    #[arg(long, default_value_t = 3)]
    cap: usize,
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    symmetric: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random cases for `verify window`.
    #[arg(long, default_value_t = 200)]
    count: usize,
}

impl Flags {
    fn rank(&self) -> Rank {
        Rank::new(self.m, self.n)
    }

    fn shape(&self) -> Result<Partition> {
        match &self.shape {
            Some(s) => Partition::parse(s),
            None => Err(usage("--shape is required")),
        }
    }

    fn gshape(&self) -> Result<GeneralizedPartition> {
        match &self.gshape {
            Some(s) => GeneralizedPartition::parse(s),
            None => Err(usage("--gshape is required")),
        }
    }

    fn window(&self) -> Result<(usize, usize)> {
        let s = self.window.as_deref().unwrap_or("2,2");
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [a, b] => match (a.parse(), b.parse()) {
                (Ok(m), Ok(n)) => Ok((m, n)),
                _ => Err(usage(&format!("bad window '{s}'"))),
            },
            _ => Err(usage(&format!("window '{s}' must be m,n"))),
        }
    }

    fn read(&self) -> Result<String> {
        let path = self.file.as_ref().ok_or_else(|| usage("--file is required"))?;
        fs::read_to_string(path).map_err(|e| CrystalError::Parse(format!("{}: {e}", path.display())))
    }

    fn emit(&self, default: Emit) -> Emit {
        self.emit.unwrap_or(default)
    }
}

fn usage(msg: &str) -> CrystalError {
    CrystalError::Parse(msg.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn rows(t: &HookTableau) -> Vec<Vec<i32>> {
    t.row_codes()
}

fn matrix_json(file: &str) -> Result<IntMatrix> {
    let j: MatrixJson = serde_json::from_str(file).map_err(|e| CrystalError::Parse(e.to_string()))?;
    IntMatrix::from_json(&j)
}

/// Parse argv (including the program name) and dispatch.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let name = cli.command.name();
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => {
            let mut cmd = Cli::command();
            let help = match cmd.find_subcommand_mut(name) {
                Some(sub) => sub.render_help().to_string(),
                None => cmd.render_help().to_string(),
            };
            (2, format!("error: {e}\n\n{help}"))
        }
    }
}

fn ok(s: String) -> (i32, String) {
    (0, s)
}

fn verdict(report: &Report) -> (i32, String) {
    (if report.is_ok() { 0 } else { 1 }, report.to_string())
}

fn failures_verdict(failures: &[String], body: String) -> (i32, String) {
    if failures.is_empty() {
        (0, body)
    } else {
        let mut s = body;
        for f in failures.iter().take(20) {
            s.push_str(&format!("FAIL {f}\n"));
        }
        (1, s)
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Tableaux(_) => "tableaux",
            Command::Rsk(_) => "rsk",
            Command::Decompose(_) => "decompose",
            Command::Symmetric(_) => "symmetric",
            Command::Dual(_) => "dual",
            Command::Semi { .. } => "semi",
            Command::Char { .. } => "char",
            Command::Verify { .. } => "verify",
            Command::Dot(_) => "dot",
        }
    }
}

fn dispatch(cmd: Command) -> Result<(i32, String)> {
    match cmd {
        Command::Tableaux(f) => tableaux(&f),
        Command::Rsk(f) => rsk(&f),
        Command::Decompose(f) => decompose_cmd(&f),
        Command::Symmetric(f) => symmetric(&f),
        Command::Dual(f) => dual(&f),
        Command::Semi { action, flags } => semi(action, &flags),
        Command::Char { which, flags } => character(which, &flags),
        Command::Verify { which, flags } => verify(which, &flags),
        Command::Dot(f) => dot(&f),
    }
}

fn tableaux(f: &Flags) -> Result<(i32, String)> {
    let (rank, shape) = (f.rank(), f.shape()?);
    let all = enumerate_tableaux(rank, &shape)?;
    Ok(ok(match f.emit(Emit::Count) {
        Emit::Count => format!("{}\n", all.len()),
        Emit::Json => to_json(&all.iter().map(rows).collect::<Vec<_>>()) + "\n",
        Emit::Dot => component_dot(rank, &shape)?,
    }))
}

fn component_dot(rank: Rank, shape: &Partition) -> Result<String> {
    let h = highest_weight_tableau(rank, shape)?;
    let g = tableau_component(&h);
    Ok(g.to_dot("B", |t| {
        t.rows().iter().map(|r| r.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
    }))
}

fn rsk(f: &Flags) -> Result<(i32, String)> {
    let a = matrix_json(&f.read()?)?;
    let (p, q) = if f.dual {
        DualMatrix::new(a)?.rsk_pi_sharp()
    } else if f.symmetric {
        SymmetricMatrix::new(SuperMatrix::new(a)?)?.matrix().rsk_pi()
    } else {
        SuperMatrix::new(a)?.rsk_pi()
    };
    Ok(ok(to_json(&json!({"p1": rows(&p), "p2": rows(&q)})) + "\n"))
}

#[derive(Serialize)]
struct ComponentSummary {
    shape: Partition,
    partner: Partition,
    size: usize,
    highest: Option<MatrixJson>,
}

fn decompose_cmd(f: &Flags) -> Result<(i32, String)> {
    let (rows, cols) = (f.rank(), Rank::new(f.u, f.v));
    let (summary, failures) = if f.dual {
        let d = decompose_dual(rows, cols, f.bound);
        let all: Vec<DualMatrix> = d.components.iter().flat_map(|c| c.members.iter().cloned()).collect();
        let mut failures = d.failures.clone();
        failures.extend(rotation_failures(&all));
        let s: Vec<ComponentSummary> = d
            .components
            .iter()
            .map(|c| ComponentSummary {
                shape: c.shape.clone(),
                partner: c.partner.clone(),
                size: c.members.len(),
                highest: c.highest.as_ref().map(|h| h.inner().to_json()),
            })
            .collect();
        (s, failures)
    } else {
        let d = decompose(rows, cols, f.bound);
        let s: Vec<ComponentSummary> = d
            .components
            .iter()
            .map(|c| ComponentSummary {
                shape: c.shape.clone(),
                partner: c.partner.clone(),
                size: c.members.len(),
                highest: c.highest.as_ref().map(|h| h.inner().to_json()),
            })
            .collect();
        (s, d.failures)
    };
    let body = match f.emit(Emit::Count) {
        Emit::Json => to_json(&summary) + "\n",
        Emit::Dot => return Err(usage("decompose does not emit dot")),
        Emit::Count => {
            let mut s = format!("{} components\n", summary.len());
            for c in &summary {
                s.push_str(&format!("{} {} {}\n", c.shape, c.partner, c.size));
            }
            s
        }
    };
    Ok(failures_verdict(&failures, body))
}

fn symmetric(f: &Flags) -> Result<(i32, String)> {
    let d = decompose_symmetric(f.rank(), f.bound);
    let summary: Vec<_> = d
        .components
        .iter()
        .map(|c| json!({"odd": c.odd, "shape": c.shape, "size": c.members.len()}))
        .collect();
    let body = match f.emit(Emit::Count) {
        Emit::Json => to_json(&summary) + "\n",
        Emit::Dot => return Err(usage("symmetric does not emit dot")),
        Emit::Count => {
            let mut s = format!("{} components\n", d.components.len());
            for c in &d.components {
                s.push_str(&format!("o={} {} {}\n", c.odd, c.shape, c.members.len()));
            }
            s
        }
    };
    Ok(failures_verdict(&d.failures, body))
}

fn dual(f: &Flags) -> Result<(i32, String)> {
    if f.file.is_none() {
        let mut g = f.clone();
        g.dual = true;
        return decompose_cmd(&g);
    }
    let a = DualMatrix::new(matrix_json(&f.read()?)?)?;
    let (p, q) = a.rsk_pi_sharp();
    let out = json!({"p1": rows(&p), "p2": rows(&q), "rotated": a.rotate90().inner().to_json()});
    Ok(ok(to_json(&out) + "\n"))
}

fn semi(action: SemiAction, f: &Flags) -> Result<(i32, String)> {
    if action == SemiAction::Decompose {
        let (m, n) = f.window()?;
        let d = decompose_semi(f.u.max(1), m, n, f.cap);
        let body = match f.emit(Emit::Count) {
            Emit::Json => {
                let s: Vec<_> = d
                    .components
                    .iter()
                    .map(|c| json!({"shape": c.shape, "size": c.members.len(), "highest": c.highest}))
                    .collect();
                to_json(&s) + "\n"
            }
            Emit::Dot => return Err(usage("semi decompose does not emit dot")),
            Emit::Count => {
                let mut s = format!("{} shapes\n", d.components.len());
                for c in &d.components {
                    s.push_str(&format!("{} {}\n", c.shape, c.members.len()));
                }
                s
            }
        };
        return Ok(failures_verdict(&d.failures, body));
    }
    let a: SemiMatrix = serde_json::from_str(&f.read()?).map_err(|e| CrystalError::Parse(e.to_string()))?;
    let out = match action {
        SemiAction::P1 => to_json(&a.p1()),
        SemiAction::P2 => to_json(&a.p2()),
        _ => {
            let (p, q) = a.varpi();
            to_json(&json!({"p1": p, "p2": q}))
        }
    };
    Ok(ok(out + "\n"))
}

fn character(which: CharKind, f: &Flags) -> Result<(i32, String)> {
    let poly = match which {
        CharKind::HookSchur => hook_schur(f.rank(), &f.shape()?)?,
        CharKind::RationalSchur => rational_schur(&f.gshape()?),
        CharKind::Lr => {
            let mu = f.shape()?;
            let nu = Partition::parse(f.nu.as_deref().ok_or_else(|| usage("--nu is required"))?)?;
            let u = if f.u == 0 { mu.len().max(nu.len()) } else { f.u };
            let c = lr_coefficients(&mu, &nu, u);
            let body = match f.emit(Emit::Count) {
                Emit::Json => to_json(&c.iter().map(|(l, k)| json!({"shape": l, "coeff": k})).collect::<Vec<_>>()) + "\n",
                _ => c.iter().map(|(l, k)| format!("{l} {k}\n")).collect(),
            };
            return Ok(ok(body));
        }
    };
    Ok(ok(match f.emit.unwrap_or(Emit::Count) {
        Emit::Json => to_json(&poly.to_json()) + "\n",
        _ => format!("{poly}\n"),
    }))
}

fn verify(which: VerifyKind, f: &Flags) -> Result<(i32, String)> {
    let (x, y) = (f.rank(), Rank::new(f.u, f.v));
    let identity = match which {
        VerifyKind::Cauchy => Identity::Cauchy,
        VerifyKind::DualCauchy => Identity::DualCauchy,
        VerifyKind::Sym1 => Identity::Sym1,
        VerifyKind::Sym2 => Identity::Sym2,
        VerifyKind::Character => {
            let (m, n) = f.window()?;
            let r = verify_fock_character(&f.gshape()?, m, n, f.cap);
            let (code, s) = verdict(&r);
            return Ok((code, s + "\n"));
        }
        VerifyKind::Window => {
            let (m, n) = f.window()?;
            let u = f.u.max(1);
            let mut rng = ChaCha8Rng::seed_from_u64(f.seed);
            let mut failures = Vec::new();
            for _ in 0..f.count {
                let a = random_semi_matrix(&mut rng, u, m, n, f.cap);
                failures.extend(window_failures(&a, 2));
            }
            let (code, s) = failures_verdict(&failures, String::new());
            return Ok((code, if code == 0 { "OK\n".into() } else { s }));
        }
    };
    let (code, s) = verdict(&verify_identity(identity, x, y, f.deg));
    Ok((code, s + "\n"))
}

fn dot(f: &Flags) -> Result<(i32, String)> {
    Ok(ok(component_dot(f.rank(), &f.shape()?)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(s: &str) -> (i32, String) {
        run(std::iter::once("crystal").chain(s.split_whitespace()))
    }

    #[test]
    fn counts_tableaux() {
        assert_eq!(call("tableaux --m 1 --n 1 --shape 1 --emit count"), (0, "2\n".into()));
    }

    #[test]
    fn cauchy_is_ok() {
        let (code, out) = call("verify cauchy --m 1 --n 1 --u 1 --v 1 --deg 3");
        assert_eq!((code, out.trim()), (0, "OK"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call("tableaux --m 1").0, 2);
        assert_eq!(call("frobnicate").0, 2);
        let (code, out) = call("char rational-schur");
        assert_eq!(code, 2);
        assert!(out.contains("--gshape"), "{out}");
    }

    #[test]
    fn negative_gshape() {
        let (code, out) = call("char rational-schur --gshape 0,-1");
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "y-1^-1 + y-2^-1");
    }

    #[test]
    fn dot_has_labels() {
        let (code, out) = call("dot --m 1 --n 1 --shape 1");
        assert_eq!(code, 0);
        assert!(out.starts_with("digraph"));
        assert!(out.contains("[label=\"0\"]"));
    }
}
