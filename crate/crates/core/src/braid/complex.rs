//! Bounded cochain complexes of graded (bi)modules.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use super::BraidError;
use crate::linalg::Matrix;
use crate::modrep::{same_alg, tensor_morphism, tensor_over, Alg, GradedModule, Slot};
use crate::scalar::Rat;

/// Cochain complex `... -> C^i -> C^(i+1) -> ...` with nonzero terms only.
/// `diff[i]` is the dense matrix of `d^i : C^i -> C^(i+1)`.
#[derive(Clone, Debug)]
pub struct Complex {
    left: Alg,
    right: Alg,
    pos: BTreeMap<i32, GradedModule>,
    diff: BTreeMap<i32, Matrix<Rat>>,
}

/// `f` maps each component of `src` into the component of `tgt` with the
/// same vertices and degree, and commutes with every action generator.
pub fn is_module_map(src: &GradedModule, tgt: &GradedModule, f: &Matrix<Rat>) -> bool {
    if f.rows() != tgt.total_dim() || f.cols() != src.total_dim() {
        return false;
    }
    for (j, s) in src.slots().iter().enumerate() {
        for c in src.offset(j)..src.offset(j) + src.slot_dim(j) {
            for (i, t) in tgt.slots().iter().enumerate() {
                if t == s {
                    continue;
                }
                for r in tgt.offset(i)..tgt.offset(i) + tgt.slot_dim(i) {
                    if !f.get(r, c).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    (0..src.actgens().len()).all(|k| &tgt.actgen_dense(k) * f == f * &src.actgen_dense(k))
}

impl Complex {
    /// Validates shapes, that each differential is a degree-0 module map,
    /// and `d^2 = 0`. Zero terms are dropped.
    pub fn new(
        left: Alg,
        right: Alg,
        pos: BTreeMap<i32, GradedModule>,
        diff: BTreeMap<i32, Matrix<Rat>>,
    ) -> Result<Self, BraidError> {
        let c = Self::unchecked(left, right, pos, diff)?;
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn unchecked(
        left: Alg,
        right: Alg,
        pos: BTreeMap<i32, GradedModule>,
        diff: BTreeMap<i32, Matrix<Rat>>,
    ) -> Result<Self, BraidError> {
        for m in pos.values() {
            if !same_alg(m.left(), &left) || !same_alg(m.right(), &right) {
                return Err(BraidError::Invariant("term over the wrong algebras".into()));
            }
        }
        let pos: BTreeMap<i32, GradedModule> = pos.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        let diff = diff
            .into_iter()
            .filter(|(i, _)| pos.contains_key(i) && pos.contains_key(&(i + 1)))
            .collect();
        Ok(Complex { left, right, pos, diff })
    }

    pub fn validate(&self) -> Result<(), BraidError> {
        for (&i, d) in &self.diff {
            let (s, t) = (&self.pos[&i], &self.pos[&(i + 1)]);
            if !is_module_map(s, t, d) {
                return Err(BraidError::Invariant(format!("d^{i} is not a degree-0 module map")));
            }
        }
        for (&i, d) in &self.diff {
            if let Some(d2) = self.diff.get(&(i + 1)) {
                if !(d2 * d).is_zero() {
                    return Err(BraidError::Invariant(format!("d^{} d^{i} != 0", i + 1)));
                }
            }
        }
        Ok(())
    }

    /// `M` placed in cohomological degree `i`.
    pub fn concentrated(m: GradedModule, i: i32) -> Self {
        let (l, r) = (m.left().clone(), m.right().clone());
        Complex { left: l, right: r, pos: BTreeMap::from([(i, m)]), diff: BTreeMap::new() }
            .drop_zero()
    }

    pub fn zero(left: Alg, right: Alg) -> Self {
        Complex { left, right, pos: BTreeMap::new(), diff: BTreeMap::new() }
    }

    fn drop_zero(mut self) -> Self {
        self.pos.retain(|_, m| !m.is_zero());
        self
    }

    pub fn left(&self) -> &Alg {
        &self.left
    }

    pub fn right(&self) -> &Alg {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.pos.is_empty()
    }

    /// Cohomological degrees with a nonzero term.
    pub fn degrees(&self) -> Vec<i32> {
        self.pos.keys().copied().collect()
    }

    pub fn term(&self, i: i32) -> Option<&GradedModule> {
        self.pos.get(&i)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GradedModule)> {
        self.pos.iter().map(|(i, m)| (*i, m))
    }

    /// `d^i`, zero when either end vanishes.
    pub fn differential(&self, i: i32) -> Matrix<Rat> {
        if let Some(d) = self.diff.get(&i) {
            return d.clone();
        }
        let dim = |k: i32| self.pos.get(&k).map_or(0, GradedModule::total_dim);
        Matrix::zeros(dim(i + 1), dim(i))
    }

    /// Alternating sum of component dimensions, `sum_i (-1)^i dim C^i_(l,r,n)`.
    pub fn euler_dims(&self) -> BTreeMap<Slot, i64> {
        let mut out: BTreeMap<Slot, i64> = BTreeMap::new();
        for (i, m) in &self.pos {
            let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            for (s, d) in m.dim_table() {
                *out.entry(s).or_insert(0) += sign * d as i64;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Per cohomological degree: graded dimensions of the term.
    pub fn shape(&self) -> Vec<(i32, BTreeMap<i32, usize>)> {
        self.pos.iter().map(|(i, m)| (*i, m.graded_dims())).collect()
    }

    pub fn shape_string(&self) -> String {
        if self.pos.is_empty() {
            return "0".into();
        }
        self.shape()
            .iter()
            .map(|(i, d)| {
                let parts: Vec<String> = d.iter().map(|(n, k)| format!("{k}q^{n}")).collect();
                format!("[{i}] {}", parts.join("+"))
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .pos
            .iter()
            .map(|(i, m)| {
                let dims: BTreeMap<String, usize> = m.graded_dims().iter().map(|(n, d)| (n.to_string(), *d)).collect();
                json!({"degree": i, "dim": m.total_dim(), "graded_dims": dims})
            })
            .collect();
        json!({"terms": terms})
    }
}

/// Total complex of `C (x)_A D`, with differential `d_C (x) 1 + (-1)^i 1 (x) d_D`.
pub fn tensor_complexes(c: &Complex, d: &Complex) -> Result<Complex, BraidError> {
    if !same_alg(c.right(), d.left()) {
        return Err(BraidError::Mod(crate::modrep::ModError::AlgebraMismatch));
    }
    let mut pieces = BTreeMap::new();
    for (&i, x) in &c.pos {
        for (&j, y) in &d.pos {
            let t = tensor_over(x, y)?;
            if !t.module.is_zero() {
                pieces.insert((i, j), t);
            }
        }
    }
    // per total degree: ordered pieces and their inclusions/projections
    let mut by_deg: BTreeMap<i32, Vec<(i32, i32)>> = BTreeMap::new();
    for &(i, j) in pieces.keys() {
        by_deg.entry(i + j).or_default().push((i, j));
    }
    let mut pos = BTreeMap::new();
    let mut incl: BTreeMap<(i32, i32), Matrix<Rat>> = BTreeMap::new();
    let mut proj: BTreeMap<(i32, i32), Matrix<Rat>> = BTreeMap::new();
    for (&n, keys) in &by_deg {
        let mods: Vec<&GradedModule> = keys.iter().map(|k| &pieces[k].module).collect();
        let (sum, inc, pr) = GradedModule::direct_sum(&mods)?;
        for (k, (a, b)) in keys.iter().zip(inc.into_iter().zip(pr)) {
            incl.insert(*k, a);
            proj.insert(*k, b);
        }
        pos.insert(n, sum);
    }
    let mut diff = BTreeMap::new();
    for (&n, keys) in &by_deg {
        let Some(tgt) = pos.get(&(n + 1)) else { continue };
        let mut dn = Matrix::zeros(tgt.total_dim(), pos[&n].total_dim());
        for &(i, j) in keys {
            let src = &pieces[&(i, j)];
            let idx = Matrix::identity(c.pos[&i].total_dim());
            let idy = Matrix::identity(d.pos[&j].total_dim());
            if let Some(t) = pieces.get(&(i + 1, j)) {
                let m = tensor_morphism(src, t, &c.differential(i), &idy);
                dn = &dn + &(&(&incl[&(i + 1, j)] * &m) * &proj[&(i, j)]);
            }
            if let Some(t) = pieces.get(&(i, j + 1)) {
                let mut m = tensor_morphism(src, t, &idx, &d.differential(j));
                if i.rem_euclid(2) == 1 {
                    m = -&m;
                }
                dn = &dn + &(&(&incl[&(i, j + 1)] * &m) * &proj[&(i, j)]);
            }
        }
        diff.insert(n, dn);
    }
    Complex::new(c.left().clone(), d.right().clone(), pos, diff)
}

/// Index of each algebra basis element in the regular bimodule `A`.
pub(crate) fn regular_coords(a: &Alg, reg: &GradedModule) -> Vec<usize> {
    let mut seen: BTreeMap<Slot, usize> = BTreeMap::new();
    a.basis()
        .iter()
        .map(|b| {
            let s = Slot::new(b.src, b.tgt, b.deg);
            let k = seen.entry(s).or_insert(0);
            let idx = reg.offset(reg.slot_index(s).expect("slot of A")) + *k;
            *k += 1;
            idx
        })
        .collect()
}
