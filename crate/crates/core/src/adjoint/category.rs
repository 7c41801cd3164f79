//! The category `C = C_0 + sum_mu C_mu` and the functors acting on it.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{build_adjoint_rep, AdjointRep};
use crate::modrep::{
    algebra_of, chi_dual, graded_hom, ground, is_isomorphic, projective, right_projective, simple, tensor_over,
    Alg, GradedModule, IsoDecision, ModError,
};
use crate::roots::{generate_roots, Graph};
use crate::zigzag::build_zigzag;
use crate::{Laurent, Rat};

/// Functors on `C`. `Psi` is contravariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fun {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
    Shift(i32),
    Psi,
    Omega,
}

/// Graded dimensions by degree.
pub type Dims = BTreeMap<i32, usize>;

/// Object of `C`: a graded vector space in each `C_mu` (keyed by root
/// index) and a module in `C_0`.
#[derive(Clone, Debug)]
pub struct CObject {
    pub vects: BTreeMap<usize, Dims>,
    pub module: GradedModule,
}

fn add_dims(into: &mut Dims, from: &Dims, shift: i32) {
    for (&n, &d) in from {
        if d > 0 {
            *into.entry(n + shift).or_insert(0) += d;
        }
    }
}

impl CObject {
    pub fn zero(alg: &Alg) -> Self {
        CObject { vects: BTreeMap::new(), module: GradedModule::zero(alg.clone(), ground()) }
    }

    pub fn vect(alg: &Alg, mu: usize, dims: Dims) -> Self {
        let mut x = Self::zero(alg);
        x.add_vect(mu, &dims, 0);
        x
    }

    pub fn from_module(m: GradedModule) -> Self {
        CObject { vects: BTreeMap::new(), module: m }
    }

    fn add_vect(&mut self, mu: usize, dims: &Dims, shift: i32) {
        let e = self.vects.entry(mu).or_default();
        add_dims(e, dims, shift);
        if e.is_empty() {
            self.vects.remove(&mu);
        }
    }

    pub fn sum(&self, other: &CObject) -> Result<CObject, ModError> {
        let mut out = self.clone();
        for (mu, d) in &other.vects {
            out.add_vect(*mu, d, 0);
        }
        out.module = sum_modules(&[&self.module, &other.module])?;
        Ok(out)
    }

    pub fn shift(&self, k: i32) -> CObject {
        CObject {
            vects: self.vects.iter().map(|(mu, d)| (*mu, d.iter().map(|(n, c)| (n + k, *c)).collect())).collect(),
            module: self.module.shift(k),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vects.is_empty() && self.module.is_zero()
    }

    pub fn describe(&self, rep: &AdjointRep) -> String {
        let mut parts = Vec::new();
        for (mu, d) in &self.vects {
            parts.push(format!("C_{}{:?}", rep.root_name(*mu), d));
        }
        if !self.module.is_zero() {
            parts.push(format!("M{:?}", self.module.graded_dims()));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn sum_modules(parts: &[&GradedModule]) -> Result<GradedModule, ModError> {
    let nonzero: Vec<&GradedModule> = parts.iter().copied().filter(|m| !m.is_zero()).collect();
    match nonzero.len() {
        0 => Ok(parts[0].clone()),
        1 => Ok(nonzero[0].clone()),
        _ => Ok(GradedModule::direct_sum(&nonzero)?.0),
    }
}

/// The category attached to a finite simply-laced Dynkin graph.
#[derive(Clone, Debug)]
pub struct Categorified {
    pub rep: AdjointRep,
    pub alg: Alg,
    proj: Vec<GradedModule>,
    rproj: Vec<GradedModule>,
}

#[derive(Debug, thiserror::Error)]
pub enum SetupError {
    #[error(transparent)]
    Graph(#[from] crate::roots::GraphError),
    #[error(transparent)]
    Algebra(#[from] crate::zigzag::AlgebraError),
}

impl Categorified {
    pub fn new(g: &Graph) -> Result<Self, SetupError> {
        let rs = generate_roots(g)?;
        let alg = algebra_of(build_zigzag(g)?);
        let n = g.num_vertices();
        Ok(Categorified {
            rep: build_adjoint_rep(&rs),
            proj: (0..n).map(|a| projective(&alg, a)).collect(),
            rproj: (0..n).map(|a| right_projective(&alg, a)).collect(),
            alg,
        })
    }

    pub fn rank(&self) -> usize {
        self.rep.rs.rank()
    }

    pub fn simple_root(&self, a: usize) -> usize {
        self.rep.root_index(&self.rep.rs.simple(a))
    }

    pub fn c_mu(&self, mu: usize) -> CObject {
        CObject::vect(&self.alg, mu, BTreeMap::from([(0, 1)]))
    }

    pub fn simple(&self, a: usize) -> CObject {
        CObject::from_module(simple(&self.alg, a))
    }

    pub fn projective(&self, a: usize) -> CObject {
        CObject::from_module(self.proj[a].clone())
    }

    /// `{C_mu} + {L_a, P_a}` with display names.
    pub fn family(&self) -> Vec<(String, CObject)> {
        let mut out: Vec<(String, CObject)> = (0..self.rep.num_roots())
            .map(|mu| (format!("C_{}", self.rep.root_name(mu)), self.c_mu(mu)))
            .collect();
        for a in 0..self.rank() {
            out.push((format!("L_{}", self.rep.label(a)), self.simple(a)));
            out.push((format!("P_{}", self.rep.label(a)), self.projective(a)));
        }
        out
    }

    /// `P_a (x) V{-1}` as a module.
    fn projective_tensor(&self, a: usize, dims: &Dims) -> Result<GradedModule, ModError> {
        let mut parts = Vec::new();
        for (&n, &d) in dims {
            for _ in 0..d {
                parts.push(self.proj[a].shift(n - 1));
            }
        }
        let refs: Vec<&GradedModule> = parts.iter().collect();
        if refs.is_empty() {
            return Ok(GradedModule::zero(self.alg.clone(), ground()));
        }
        sum_modules(&refs)
    }

    /// `_aP (x)_A M` as a graded vector space.
    fn restrict(&self, a: usize, m: &GradedModule) -> Result<Dims, ModError> {
        if m.is_zero() {
            return Ok(Dims::new());
        }
        Ok(tensor_over(&self.rproj[a], m)?.module.graded_dims())
    }

    fn raise(&self, a: usize, x: &CObject, up: bool) -> Result<CObject, ModError> {
        let rep = &self.rep;
        let sa = self.simple_root(a);
        let (from_zero_to, into_zero_from, pair_move) = if up {
            (sa, rep.neg(sa), -1)
        } else {
            (rep.neg(sa), sa, 1)
        };
        let mut out = CObject::zero(&self.alg);
        let mut mods = Vec::new();
        for (&mu, dims) in &x.vects {
            if mu == into_zero_from {
                mods.push(self.projective_tensor(a, dims)?);
            } else if rep.pair(mu, a) == pair_move {
                let mut r = rep.rs.roots[mu].clone();
                r[a] += if up { 1 } else { -1 };
                out.add_vect(rep.root_index(&r), dims, 0);
            }
        }
        let d = self.restrict(a, &x.module)?;
        out.add_vect(from_zero_to, &d, 0);
        if !mods.is_empty() {
            let refs: Vec<&GradedModule> = mods.iter().collect();
            out.module = sum_modules(&refs)?;
        }
        Ok(out)
    }

    pub fn apply(&self, f: Fun, x: &CObject) -> Result<CObject, ModError> {
        let rep = &self.rep;
        match f {
            Fun::E(a) => self.raise(a, x, true),
            Fun::F(a) => self.raise(a, x, false),
            Fun::K(a) | Fun::KInv(a) => {
                let sign = if matches!(f, Fun::K(_)) { 1 } else { -1 };
                let mut out = CObject::from_module(x.module.clone());
                for (&mu, d) in &x.vects {
                    out.add_vect(mu, d, sign * rep.pair(mu, a) as i32);
                }
                Ok(out)
            }
            Fun::Shift(k) => Ok(x.shift(k)),
            Fun::Psi => {
                let mut out = CObject::from_module(if x.module.is_zero() {
                    x.module.clone()
                } else {
                    chi_dual(&x.module)?
                });
                for (&mu, d) in &x.vects {
                    let dual: Dims = d.iter().map(|(n, c)| (-n, *c)).collect();
                    out.add_vect(mu, &dual, 0);
                }
                Ok(out)
            }
            Fun::Omega => {
                let mut out = CObject::from_module(x.module.clone());
                for (&mu, d) in &x.vects {
                    out.add_vect(rep.neg(mu), d, 0);
                }
                Ok(out)
            }
        }
    }

    /// Applies a composite; the rightmost functor acts first.
    pub fn apply_word(&self, word: &[Fun], x: &CObject) -> Result<CObject, ModError> {
        let mut cur = x.clone();
        for f in word.iter().rev() {
            cur = self.apply(*f, &cur)?;
        }
        Ok(cur)
    }

    /// Class in the dual canonical basis `x_mu`, `l_a`, with
    /// `[C_mu{n}] = q^n x_mu` and `[L_a{n}] = q^(n+1) l_a`.
    pub fn class_of(&self, x: &CObject) -> Vec<Laurent> {
        let r = self.rep.num_roots();
        let mut v = vec![Laurent::zero(); self.rep.dim()];
        for (&mu, d) in &x.vects {
            for (&n, &c) in d {
                v[mu] = &v[mu] + &Laurent::monomial(n, Rat::from_integer((c as i64).into()));
            }
        }
        // graded composition multiplicities are the component dimensions
        for (s, d) in x.module.dim_table() {
            let i = r + s.l;
            v[i] = &v[i] + &Laurent::monomial(s.deg + 1, Rat::from_integer((d as i64).into()));
        }
        v
    }

    /// `sum_i q^i dim Hom(X{i}, Y)`.
    pub fn hom(&self, x: &CObject, y: &CObject) -> Result<Laurent, ModError> {
        let mut acc = Laurent::zero();
        for (mu, dx) in &x.vects {
            let Some(dy) = y.vects.get(mu) else { continue };
            for (&n, &a) in dx {
                for (&m, &b) in dy {
                    acc = &acc + &Laurent::monomial(m - n, Rat::from_integer(((a * b) as i64).into()));
                }
            }
        }
        if !x.module.is_zero() && !y.module.is_zero() {
            acc = &acc + &graded_hom(&x.module, &y.module)?;
        }
        Ok(acc)
    }

    /// `Ok(witness)` with a checked certificate if `x ≅ y`, else `Err(reason)`.
    pub fn iso(&self, x: &CObject, y: &CObject) -> Result<Result<String, String>, ModError> {
        if x.vects != y.vects {
            return Ok(Err(format!(
                "weight components differ: {} vs {}",
                x.describe(&self.rep),
                y.describe(&self.rep)
            )));
        }
        if x.module.is_zero() && y.module.is_zero() {
            return Ok(Ok("equal graded dimensions".into()));
        }
        match is_isomorphic(&x.module, &y.module)? {
            IsoDecision::NotIso(why) => Ok(Err(why)),
            IsoDecision::Iso(f) => {
                let intertwines = (0..x.module.actgens().len())
                    .all(|k| &y.module.actgen_dense(k) * &f == &f * &x.module.actgen_dense(k));
                if intertwines && f.is_invertible() {
                    Ok(Ok(format!("invertible intertwiner of size {}", f.rows())))
                } else {
                    Ok(Err("certificate failed to check".into()))
                }
            }
        }
    }
}
