//! Graded modules and bimodules over quiver algebras.

mod decompose;
mod hom;
mod module;
mod tensor;
mod typea;

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::Rat;
use crate::zigzag::QuiverAlgebra;

pub use decompose::{decompose, is_indecomposable, is_isomorphic, iso_indecomposable, IsoDecision, Summand};
pub use hom::{graded_hom, hom_dim, hom_space};
pub use module::{
    actgens_of, ground, left_inverse, op_add_scaled, op_compose, same_alg, ActGen, Alg, GradedModule, Op,
    Side, Slot,
};
pub use tensor::{tensor_morphism, tensor_over, Tensor};
pub use typea::{chain_order, matches_up_to_shift, random_quotient_module, typea_indecomposables};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error("malformed module: {0}")]
    Malformed(String),
    #[error("module relation violated: {0}")]
    Relation(String),
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("algebra has no anti-involution")]
    NoAntiInvolution,
    #[error("graph is not a chain")]
    NotChain,
    #[error("no splitting endomorphism found for a decomposable module")]
    NoSplitting,
}

/// Module spanned by a set of basis elements of `a`, acted on by
/// multiplication from the chosen sides.
fn regular(
    a: &Alg,
    left: Alg,
    right: Alg,
    elems: &[usize],
    slot_of: impl Fn(usize) -> Slot,
) -> GradedModule {
    let mut dims: BTreeMap<Slot, usize> = BTreeMap::new();
    let mut local: BTreeMap<usize, (Slot, usize)> = BTreeMap::new();
    for &e in elems {
        let s = slot_of(e);
        let d = dims.entry(s).or_insert(0);
        local.insert(e, (s, *d));
        *d += 1;
    }
    let gens = actgens_of(&left, &right);
    let mut acts: Vec<BTreeMap<Slot, Matrix<Rat>>> = vec![BTreeMap::new(); gens.len()];
    for (k, g) in gens.iter().enumerate() {
        let acts_on_a = match g.side {
            Side::Left => same_alg(&left, a),
            Side::Right => same_alg(&right, a),
        };
        if !acts_on_a {
            continue;
        }
        for &e in elems {
            let (s, i) = local[&e];
            let Some(t) = g.target(s) else { continue };
            let prod = match g.side {
                Side::Left => a.mul_basis(g.elem, e),
                Side::Right => a.mul_basis(e, g.elem),
            };
            for (z, c) in prod {
                let (tz, j) = local[z];
                debug_assert_eq!(tz, t);
                let (sd, td) = (dims[&s], dims[&t]);
                let m = acts[k].entry(s).or_insert_with(|| Matrix::zeros(td, sd));
                m.set(j, i, c.clone());
            }
        }
    }
    GradedModule::new(left, right, &dims, acts).expect("regular module shapes")
}

/// Left projective `P_v = A e_v`: paths ending at `v`.
pub fn projective(a: &Alg, v: usize) -> GradedModule {
    let elems: Vec<usize> = (0..a.dim()).filter(|&i| a.basis()[i].tgt == v).collect();
    regular(a, a.clone(), ground(), &elems, |i| {
        let b = &a.basis()[i];
        Slot::new(b.src, 0, b.deg)
    })
}

/// Right projective `_vP = e_v A`: paths starting at `v`.
pub fn right_projective(a: &Alg, v: usize) -> GradedModule {
    let elems: Vec<usize> = (0..a.dim()).filter(|&i| a.basis()[i].src == v).collect();
    regular(a, ground(), a.clone(), &elems, |i| {
        let b = &a.basis()[i];
        Slot::new(0, b.tgt, b.deg)
    })
}

/// `A` as a bimodule over itself.
pub fn regular_bimodule(a: &Alg) -> GradedModule {
    let elems: Vec<usize> = (0..a.dim()).collect();
    regular(a, a.clone(), a.clone(), &elems, |i| {
        let b = &a.basis()[i];
        Slot::new(b.src, b.tgt, b.deg)
    })
}

/// `A` as a left module over itself.
pub fn regular_left(a: &Alg) -> GradedModule {
    let elems: Vec<usize> = (0..a.dim()).collect();
    regular(a, a.clone(), ground(), &elems, |i| {
        let b = &a.basis()[i];
        Slot::new(b.src, 0, b.deg)
    })
}

/// Simple left module `L_v`, one-dimensional in degree 0.
pub fn simple(a: &Alg, v: usize) -> GradedModule {
    let dims = BTreeMap::from([(Slot::new(v, 0, 0), 1)]);
    let n = a.generators().len();
    GradedModule::new(a.clone(), ground(), &dims, vec![BTreeMap::new(); n]).expect("simple")
}

/// Graded vector space with the given dimension in each degree.
pub fn vector_space(dims: &BTreeMap<i32, usize>) -> GradedModule {
    let d: BTreeMap<Slot, usize> = dims.iter().map(|(&n, &k)| (Slot::new(0, 0, n), k)).collect();
    GradedModule::new(ground(), ground(), &d, Vec::new()).expect("vector space")
}

/// Graded dual with actions twisted by the anti-involutions of both algebras:
/// component `(l, r, -n)` is dual to `(l, r, n)`.
pub fn chi_dual(m: &GradedModule) -> Result<GradedModule, ModError> {
    let (la, ra) = (m.left().clone(), m.right().clone());
    let (lchi, rchi) = match (la.anti_involution(), ra.anti_involution()) {
        (Some(l), Some(r)) => (l.to_vec(), r.to_vec()),
        _ => return Err(ModError::NoAntiInvolution),
    };
    let dual = |s: Slot| Slot::new(s.l, s.r, -s.deg);
    let dims: BTreeMap<Slot, usize> = m.dim_table().into_iter().map(|(s, d)| (dual(s), d)).collect();
    let gens = m.actgens();
    let mut acts: Vec<BTreeMap<Slot, Matrix<Rat>>> = vec![BTreeMap::new(); gens.len()];
    for (k, g) in gens.iter().enumerate() {
        let (img, c) = match g.side {
            Side::Left => lchi[g.elem].clone(),
            Side::Right => rchi[g.elem].clone(),
        };
        let op = m.action_op(g.side, img);
        for (t, mat) in op.values() {
            acts[k].insert(dual(m.slots()[*t]), mat.transpose().scale(&c));
        }
    }
    GradedModule::new(la, ra, &dims, acts)
}

/// Random element of a module slot, with small integer entries.
pub(crate) fn small_vector(rng: &mut impl rand::Rng, d: usize) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..d).map(|_| Rat::from_integer(rng.gen_range(-2i64..=2).into())).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

#[cfg(test)]
pub(crate) fn unit_vec(d: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); d];
    v[i] = crate::scalar::int(1);
    v
}

pub fn algebra_of(a: QuiverAlgebra) -> Alg {
    std::sync::Arc::new(a)
}

#[cfg(test)]
mod tests;
