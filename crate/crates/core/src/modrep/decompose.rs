//! Krull-Schmidt decomposition and isomorphism testing.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, GradedModule, ModError};
use crate::linalg::Matrix;
use crate::scalar::Rat;

/// Direct summand with its inclusion into and projection from the parent.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: GradedModule,
    pub incl: Matrix<Rat>,
    pub proj: Matrix<Rat>,
}

#[derive(Clone, Debug)]
pub enum IsoDecision {
    /// Invertible intertwiner `M -> N`.
    Iso(Matrix<Rat>),
    NotIso(String),
}

impl IsoDecision {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoDecision::Iso(_))
    }
}

const SEED: u64 = 0x5eed_2a11;
const RANDOM_TRIES: usize = 48;

fn trace(m: &Matrix<Rat>) -> Rat {
    (0..m.rows()).fold(Rat::zero(), |acc, i| acc + m.get(i, i))
}

/// `dim End(M) / rad End(M)` via the trace form (characteristic zero).
fn semisimple_rank(end: &[Matrix<Rat>]) -> usize {
    let n = end.len();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = trace(&(&end[i] * &end[j]));
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    gram.rank()
}

fn lcm_den(coeffs: &[Rat]) -> BigInt {
    coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn eval_poly(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

/// Rational roots of a polynomial (increasing coefficients). Candidates
/// whose numerators or denominators are out of range are skipped.
fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let mut p: Vec<Rat> = p.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut roots = Vec::new();
    let lead_zero = p.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        roots.push(Rat::zero());
        p.drain(..lead_zero);
    }
    if p.len() < 2 {
        return roots;
    }
    let l = lcm_den(&p);
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let (Some(a0), Some(an)) = (ints[0].to_i64(), ints[ints.len() - 1].to_i64()) else {
        return roots;
    };
    if a0.abs() > 1_000_000_000_000 || an.abs() > 1_000_000_000_000 {
        return roots;
    }
    for num in divisors(a0) {
        for den in divisors(an) {
            for sgn in [1, -1] {
                let x = Rat::new((sgn * num).into(), den.into());
                if !roots.contains(&x) && eval_poly(&p, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

fn is_invertible(f: &Matrix<Rat>) -> bool {
    f.is_invertible()
}

/// Kernel and image of `f^N` per slot, as column bases.
type SlotBases = BTreeMap<usize, Matrix<Rat>>;

fn fitting_split(m: &GradedModule, f: &Matrix<Rat>) -> (SlotBases, SlotBases) {
    let mut ker = SlotBases::new();
    let mut img = SlotBases::new();
    for i in 0..m.slots().len() {
        let d = m.slot_dim(i);
        let off = m.offset(i);
        let block = f.sub_block(off, off, d, d);
        let p = block.pow(d as u32);
        let k = p.kernel();
        let c = p.column_space();
        ker.insert(i, Matrix::from_columns(d, &k));
        img.insert(i, Matrix::from_columns(d, &c));
    }
    (ker, img)
}

/// Splits along a non-nilpotent, non-invertible endomorphism.
fn split_by(m: &GradedModule, f: &Matrix<Rat>) -> Option<(Summand, Summand)> {
    let (ker, img) = fitting_split(m, f);
    let (s1, i1) = m.submodule(&ker);
    let (s2, i2) = m.submodule(&img);
    if s1.is_zero() || s2.is_zero() {
        return None;
    }
    let n = m.total_dim();
    let mut t = Matrix::zeros(n, n);
    t.put_block(0, 0, &i1);
    t.put_block(0, s1.total_dim(), &i2);
    let ti = t.inverse()?;
    let p1 = ti.sub_block(0, 0, s1.total_dim(), n);
    let p2 = ti.sub_block(s1.total_dim(), 0, s2.total_dim(), n);
    Some((
        Summand { module: s1, incl: i1, proj: p1 },
        Summand { module: s2, incl: i2, proj: p2 },
    ))
}

fn usable(f: &Matrix<Rat>) -> bool {
    !f.is_nilpotent() && !is_invertible(f)
}

/// Some `f - c` that is neither nilpotent nor invertible, if `f` has a
/// suitable rational eigenvalue.
fn shifted_candidate(m: &GradedModule, f: &Matrix<Rat>) -> Option<Matrix<Rat>> {
    if usable(f) {
        return Some(f.clone());
    }
    let mut tried: Vec<Rat> = Vec::new();
    for i in 0..m.slots().len() {
        let d = m.slot_dim(i);
        let off = m.offset(i);
        let block = f.sub_block(off, off, d, d);
        for lam in rational_roots(&block.char_poly()) {
            if tried.contains(&lam) {
                continue;
            }
            let g = f - &Matrix::scalar(f.rows(), lam.clone());
            if usable(&g) {
                return Some(g);
            }
            tried.push(lam);
        }
    }
    None
}

fn find_splitting(m: &GradedModule, end: &[Matrix<Rat>]) -> Option<Matrix<Rat>> {
    for f in end {
        if let Some(g) = shifted_candidate(m, f) {
            return Some(g);
        }
    }
    for a in end {
        for b in end {
            if let Some(g) = shifted_candidate(m, &(a * b)) {
                return Some(g);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let f = random_combination(&mut rng, end, m.total_dim(), m.total_dim());
        if let Some(g) = shifted_candidate(m, &f) {
            return Some(g);
        }
    }
    None
}

fn random_combination(rng: &mut impl Rng, basis: &[Matrix<Rat>], rows: usize, cols: usize) -> Matrix<Rat> {
    let mut f = Matrix::zeros(rows, cols);
    for b in basis {
        let c = Rat::from_integer(rng.gen_range(-3i64..=3).into());
        if !c.is_zero() {
            f = &f + &b.scale(&c);
        }
    }
    f
}

fn decompose_rec(m: &GradedModule) -> Result<Vec<Summand>, ModError> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let n = m.total_dim();
    let whole = || Summand {
        module: m.clone(),
        incl: Matrix::identity(n),
        proj: Matrix::identity(n),
    };
    let end = hom_space(m, m, 0)?;
    if semisimple_rank(&end) <= 1 {
        return Ok(vec![whole()]);
    }
    let f = find_splitting(m, &end).ok_or(ModError::NoSplitting)?;
    let (a, b) = split_by(m, &f).ok_or(ModError::NoSplitting)?;
    let mut out = Vec::new();
    for part in [a, b] {
        for s in decompose_rec(&part.module)? {
            out.push(Summand {
                module: s.module,
                incl: &part.incl * &s.incl,
                proj: &s.proj * &part.proj,
            });
        }
    }
    Ok(out)
}

/// Indecomposable summands, ordered by lowest degree then dimension.
pub fn decompose(m: &GradedModule) -> Result<Vec<Summand>, ModError> {
    let mut parts = decompose_rec(m)?;
    parts.sort_by_key(|s| (s.module.min_deg(), s.module.total_dim()));
    Ok(parts)
}

pub fn is_indecomposable(m: &GradedModule) -> Result<bool, ModError> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(semisimple_rank(&hom_space(m, m, 0)?) == 1)
}

/// For indecomposable `x`, `y`: an isomorphism `x -> y` if one exists.
/// Exact: `x` and `y` are isomorphic iff some `g_j f_i` is not nilpotent,
/// and then `f_i` is invertible.
pub fn iso_indecomposable(x: &GradedModule, y: &GradedModule) -> Result<Option<Matrix<Rat>>, ModError> {
    if x.dim_table() != y.dim_table() {
        return Ok(None);
    }
    let fs = hom_space(x, y, 0)?;
    if fs.is_empty() {
        return Ok(None);
    }
    let gs = hom_space(y, x, 0)?;
    for f in &fs {
        if is_invertible(f) {
            return Ok(Some(f.clone()));
        }
        for g in &gs {
            if !(g * f).is_nilpotent() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

fn describe(parts: &[Summand]) -> String {
    let items: Vec<String> = parts
        .iter()
        .map(|s| format!("{:?}", s.module.graded_dims()))
        .collect();
    format!("[{}]", items.join(", "))
}

pub fn is_isomorphic(m: &GradedModule, n: &GradedModule) -> Result<IsoDecision, ModError> {
    if !m.same_algebras(n) {
        return Err(ModError::AlgebraMismatch);
    }
    if m.dim_table() != n.dim_table() {
        return Ok(IsoDecision::NotIso(format!(
            "graded dimensions differ: {:?} vs {:?}",
            m.graded_dims(),
            n.graded_dims()
        )));
    }
    if m.is_zero() {
        return Ok(IsoDecision::Iso(Matrix::zeros(0, 0)));
    }
    let homs = hom_space(m, n, 0)?;
    if homs.is_empty() {
        return Ok(IsoDecision::NotIso("no degree-0 homomorphisms".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..8 {
        let f = random_combination(&mut rng, &homs, n.total_dim(), m.total_dim());
        if is_invertible(&f) {
            return Ok(IsoDecision::Iso(f));
        }
    }
    let pm = decompose(m)?;
    let pn = decompose(n)?;
    if pm.len() != pn.len() {
        return Ok(IsoDecision::NotIso(format!(
            "indecomposable summands differ: {} vs {}",
            describe(&pm),
            describe(&pn)
        )));
    }
    let mut used = vec![false; pn.len()];
    let mut iso = Matrix::zeros(n.total_dim(), m.total_dim());
    for x in &pm {
        let mut found = false;
        for (j, y) in pn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(f) = iso_indecomposable(&x.module, &y.module)? {
                iso = &iso + &(&(&y.incl * &f) * &x.proj);
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(IsoDecision::NotIso(format!(
                "indecomposable summands differ: {} vs {}",
                describe(&pm),
                describe(&pn)
            )));
        }
    }
    debug_assert!(iso.is_invertible());
    Ok(IsoDecision::Iso(iso))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_small_polys() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let p = vec![Rat::zero(), Rat::new((-3).into(), 2.into()), Rat::new(5.into(), 2.into()), Rat::one()];
        let mut r = rational_roots(&p);
        r.sort();
        assert_eq!(r, vec![Rat::from_integer((-3).into()), Rat::zero(), Rat::new(1.into(), 2.into())]);
        // x^2 - 2 has none
        let q = vec![Rat::from_integer((-2).into()), Rat::zero(), Rat::one()];
        assert!(rational_roots(&q).is_empty());
    }

    #[test]
    fn divisors_of_twelve() {
        let mut d = divisors(-12);
        d.sort();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
