//! Braid group actions by complexes of graded bimodules.
//!
//! The twist `T_a` is `P_a (x) _aP -> A` in cohomological degrees 0 and 1,
//! its inverse `A -> (P_a (x) _aP){-2}` in degrees -1 and 0.

mod complex;
mod minimize;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

pub use complex::{is_module_map, tensor_complexes, Complex};
pub use minimize::{check_chain_iso, complex_isomorphism, minimize, ComplexIso};

use crate::adjoint::{AdjointRep, Categorified, CObject, QMat};
use crate::linalg::Matrix;
use crate::modrep::{
    actgens_of, hom_space, projective, regular_bimodule, simple, Alg, GradedModule, ModError, Slot,
};
use crate::report::Report;
use crate::scalar::Rat;
use crate::zigzag::cartan::bareiss_inverse;
use crate::Laurent;

#[derive(Debug, Error)]
pub enum BraidError {
    #[error(transparent)]
    Mod(#[from] ModError),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vector of length {got} is not in the weight-0 subspace of rank {rank}")]
    NotWeightZero { got: usize, rank: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// One letter of a braid word: vertex and exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub vertex: usize,
    pub inverse: bool,
}

/// Parses `"a b a'"`: vertex labels separated by spaces, a trailing prime
/// marks an inverse.
pub fn parse_word(alg: &Alg, s: &str) -> Result<Vec<Letter>, BraidError> {
    s.split_whitespace()
        .map(|tok| {
            let (name, inverse) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let vertex = alg.vertex(name).map_err(|_| BraidError::UnknownVertex(name.to_string()))?;
            Ok(Letter { vertex, inverse })
        })
        .collect()
}

pub fn format_word(alg: &Alg, w: &[Letter]) -> String {
    w.iter()
        .map(|l| format!("{}{}", alg.vertex_labels()[l.vertex], if l.inverse { "'" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `P_v (x) _vP` with the coordinates of each basis pair `(x, y)`.
fn outer(alg: &Alg, v: usize) -> (GradedModule, Vec<(usize, usize)>) {
    let basis = alg.basis();
    let xs: Vec<usize> = (0..alg.dim()).filter(|&i| basis[i].tgt == v).collect();
    let ys: Vec<usize> = (0..alg.dim()).filter(|&i| basis[i].src == v).collect();
    let slot = |x: usize, y: usize| Slot::new(basis[x].src, basis[y].tgt, basis[x].deg + basis[y].deg);
    let mut dims: BTreeMap<Slot, usize> = BTreeMap::new();
    let mut local: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &x in &xs {
        for &y in &ys {
            let d = dims.entry(slot(x, y)).or_insert(0);
            local.insert((x, y), *d);
            *d += 1;
        }
    }
    let gens = actgens_of(alg, alg);
    let nl = alg.generators().len();
    let mut acts: Vec<BTreeMap<Slot, Matrix<Rat>>> = vec![BTreeMap::new(); gens.len()];
    for (k, g) in gens.iter().enumerate() {
        for &x in &xs {
            for &y in &ys {
                let s = slot(x, y);
                let Some(t) = g.target(s) else { continue };
                let img: Vec<((usize, usize), &Rat)> = if k < nl {
                    alg.mul_basis(g.elem, x).iter().map(|(z, c)| ((*z, y), c)).collect()
                } else {
                    alg.mul_basis(y, g.elem).iter().map(|(z, c)| ((x, *z), c)).collect()
                };
                for (pair, c) in img {
                    let m = acts[k].entry(s).or_insert_with(|| Matrix::zeros(dims[&t], dims[&s]));
                    m.set(local[&pair], local[&(x, y)], c.clone());
                }
            }
        }
    }
    let module = GradedModule::new(alg.clone(), alg.clone(), &dims, acts).expect("outer product shapes");
    let mut coords = vec![(0, 0); module.total_dim()];
    for (&(x, y), &i) in &local {
        let idx = module.offset(module.slot_index(slot(x, y)).expect("slot")) + i;
        coords[idx] = (x, y);
    }
    (module, coords)
}

/// `A` in degree 0.
pub fn identity_complex(alg: &Alg) -> Complex {
    Complex::concentrated(regular_bimodule(alg), 0)
}

/// `P_a (x) _aP -> A`, `x (x) y -> xy`, in degrees 0 and 1.
pub fn twist(alg: &Alg, a: usize) -> Result<Complex, BraidError> {
    let (x, coords) = outer(alg, a);
    let reg = regular_bimodule(alg);
    let at = complex::regular_coords(alg, &reg);
    let mut zeta = Matrix::zeros(reg.total_dim(), x.total_dim());
    for (col, &(p, q)) in coords.iter().enumerate() {
        for (z, c) in alg.mul_basis(p, q) {
            zeta.set(at[*z], col, c.clone());
        }
    }
    Complex::new(
        alg.clone(),
        alg.clone(),
        BTreeMap::from([(0, x), (1, reg)]),
        BTreeMap::from([(0, zeta)]),
    )
}

/// `A -> (P_a (x) _aP){-2}` in degrees -1 and 0; the differential spans the
/// bimodule maps `A -> P_a (x) _aP` of degree 2.
pub fn twist_inverse(alg: &Alg, a: usize) -> Result<Complex, BraidError> {
    let (x, _) = outer(alg, a);
    let reg = regular_bimodule(alg);
    let h = hom_space(&reg, &x, 2)?;
    if h.len() != 1 {
        return Err(BraidError::Invariant(format!(
            "expected a one-dimensional space of coevaluations, found {}",
            h.len()
        )));
    }
    Complex::new(
        alg.clone(),
        alg.clone(),
        BTreeMap::from([(-1, reg), (0, x.shift(-2))]),
        BTreeMap::from([(-1, h[0].clone())]),
    )
}

fn letter_complex(alg: &Alg, l: Letter) -> Result<Complex, BraidError> {
    if l.inverse {
        twist_inverse(alg, l.vertex)
    } else {
        twist(alg, l.vertex)
    }
}

/// Minimal complex of `T_(w1) (x) T_(w2) (x) ...`, minimizing after every factor.
pub fn word_complex(alg: &Alg, word: &[Letter]) -> Result<Complex, BraidError> {
    let mut cur = identity_complex(alg);
    for &l in word {
        cur = minimize(&tensor_complexes(&cur, &letter_complex(alg, l)?)?)?;
    }
    Ok(cur)
}

/// Minimal complex of `T_w (x)_A M` for a left module `M`.
pub fn apply_word(alg: &Alg, word: &[Letter], m: &GradedModule) -> Result<Complex, BraidError> {
    let w = word_complex(alg, word)?;
    minimize(&tensor_complexes(&w, &Complex::concentrated(m.clone(), 0))?)
}

fn compare(report: &mut Report, relation: &str, object: String, x: &Complex, y: &Complex) -> Result<(), BraidError> {
    match complex_isomorphism(x, y)? {
        ComplexIso::Iso(_) => report.push(relation, object, true, Some(x.shape_string())),
        ComplexIso::NotIso(why) => report.push(
            relation,
            object,
            false,
            Some(format!("{why}; lhs {} ; rhs {}", x.shape_string(), y.shape_string())),
        ),
    }
    Ok(())
}

/// Invertibility for every vertex, braid relations for adjacent pairs and
/// commutation for non-adjacent pairs. Adjacency is read off the algebra:
/// `a`, `b` are adjacent when `e_a A e_b` is nonzero.
pub fn verify_braid_relations(alg: &Alg) -> Result<Report, BraidError> {
    let n = alg.num_vertices();
    let label = |v: usize| alg.vertex_labels()[v].clone();
    let id = identity_complex(alg);
    let s = |v| Letter { vertex: v, inverse: false };
    let si = |v| Letter { vertex: v, inverse: true };
    let mut report = Report::new();
    for a in 0..n {
        compare(&mut report, "invertible", format!("{} {}'", label(a), label(a)), &word_complex(alg, &[s(a), si(a)])?, &id)?;
        compare(&mut report, "invertible", format!("{}' {}", label(a), label(a)), &word_complex(alg, &[si(a), s(a)])?, &id)?;
    }
    for a in 0..n {
        for b in a + 1..n {
            if alg.between(a, b).is_empty() {
                let lhs = word_complex(alg, &[s(a), s(b)])?;
                let rhs = word_complex(alg, &[s(b), s(a)])?;
                compare(&mut report, "commute", format!("{},{}", label(a), label(b)), &lhs, &rhs)?;
            } else {
                let lhs = word_complex(alg, &[s(a), s(b), s(a)])?;
                let rhs = word_complex(alg, &[s(b), s(a), s(b)])?;
                compare(&mut report, "braid", format!("{},{}", label(a), label(b)), &lhs, &rhs)?;
            }
        }
    }
    Ok(report)
}

/// `q E_a F_a - 1` on the weight-0 subspace, in the basis `h_1..h_r`.
pub fn sigma_matrix(rep: &AdjointRep, a: usize) -> QMat {
    let rank = rep.rs.rank();
    let ef = &rep.e[a] * &rep.f[a];
    let mut m = QMat::zeros(rank, rank);
    for i in 0..rank {
        for j in 0..rank {
            let mut v = ef.get(rep.h(i), rep.h(j)).shift(1);
            if i == j {
                v = &v - &Laurent::one();
            }
            m.set(i, j, v);
        }
    }
    m
}

/// Inverse over `Q[q, q^-1]`; the determinant must be a unit.
pub fn laurent_inverse(m: &QMat) -> Result<QMat, BraidError> {
    let n = m.rows();
    let rows: Vec<Vec<Laurent>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let (det, adj) = bareiss_inverse(&rows).map_err(|e| BraidError::Invariant(e.to_string()))?;
    let (e, c) = match det.terms().collect::<Vec<_>>().as_slice() {
        [(e, c)] => (*e, (*c).clone()),
        _ => return Err(BraidError::Invariant(format!("determinant {det} is not a unit"))),
    };
    let unit = Laurent::monomial(-e, Rat::one() / c);
    let mut out = QMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, &adj[i][j] * &unit);
        }
    }
    Ok(out)
}

/// Action of a braid word on a weight-0 vector given in the basis
/// `h_1..h_r`; the rightmost letter acts first.
pub fn braid_class_action(rep: &AdjointRep, word: &[Letter], v: &[Laurent]) -> Result<Vec<Laurent>, BraidError> {
    let rank = rep.rs.rank();
    if v.len() != rank {
        return Err(BraidError::NotWeightZero { got: v.len(), rank });
    }
    let mut cur = v.to_vec();
    for l in word.iter().rev() {
        if l.vertex >= rank {
            return Err(BraidError::UnknownVertex(l.vertex.to_string()));
        }
        let s = sigma_matrix(rep, l.vertex);
        let m = if l.inverse { laurent_inverse(&s)? } else { s };
        cur = m.mul_vec(&cur);
    }
    Ok(cur)
}

/// Alternating sum of the classes of the terms of a complex of left modules.
pub fn complex_class(cat: &Categorified, c: &Complex) -> Vec<Laurent> {
    let mut acc = vec![Laurent::zero(); cat.rep.dim()];
    for (i, m) in c.terms() {
        let cls = cat.class_of(&CObject::from_module(m.clone()));
        for (a, x) in acc.iter_mut().zip(cls) {
            *a = if i.rem_euclid(2) == 0 { &*a + &x } else { &*a - &x };
        }
    }
    acc
}

/// For every vertex `a` and every `P_b`, `L_b`: the alternating class of
/// `T_a (x) M` equals `(q E_a F_a - 1)[M]`, and the same for the minimized
/// complex.
pub fn verify_class_action(cat: &Categorified) -> Result<Report, BraidError> {
    let (es, fs, _) = cat.rep.dual_matrices();
    let alg = &cat.alg;
    let mut report = Report::new();
    for a in 0..cat.rank() {
        let t = twist(alg, a)?;
        let ef = &es[a] * &fs[a];
        let op = &ef.scale(&Laurent::q_pow(1)) - &QMat::identity(cat.rep.dim());
        for b in 0..cat.rank() {
            for (name, m) in [("P", projective(alg, b)), ("L", simple(alg, b))] {
                let raw = tensor_complexes(&t, &Complex::concentrated(m.clone(), 0))?;
                let min = minimize(&raw)?;
                let want = op.mul_vec(&cat.class_of(&CObject::from_module(m)));
                let (got, got_min) = (complex_class(cat, &raw), complex_class(cat, &min));
                let pass = got == want && got_min == want;
                report.push(
                    "class-action",
                    format!("T_{} {}_{}", cat.rep.label(a), name, cat.rep.label(b)),
                    pass,
                    (!pass).then(|| format!("complex {} vs expected {}", fmt_vec(&got), fmt_vec(&want))),
                );
            }
        }
    }
    // the weight-0 matrices satisfy the braid relations
    for a in 0..cat.rank() {
        for b in a + 1..cat.rank() {
            let (sa, sb) = (sigma_matrix(&cat.rep, a), sigma_matrix(&cat.rep, b));
            let adjacent = !alg.between(a, b).is_empty();
            let (lhs, rhs) = if adjacent {
                (&(&sa * &sb) * &sa, &(&sb * &sa) * &sb)
            } else {
                (&sa * &sb, &sb * &sa)
            };
            report.push(
                if adjacent { "class-braid" } else { "class-commute" },
                format!("{},{}", cat.rep.label(a), cat.rep.label(b)),
                lhs == rhs,
                None,
            );
        }
    }
    Ok(report)
}

fn fmt_vec(v: &[Laurent]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

#[cfg(test)]
mod tests;
