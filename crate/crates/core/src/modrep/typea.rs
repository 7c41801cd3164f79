//! Indecomposable modules over zigzag algebras of type A.

use std::collections::BTreeMap;

use rand::Rng;

use super::{ground, is_isomorphic, projective, simple, small_vector, Alg, GradedModule, ModError, Side, Slot};
use crate::linalg::Matrix;
use crate::scalar::Rat;

/// Neighbours in the underlying graph: pairs joined by a degree-1 basis element.
fn adjacency(a: &Alg) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); a.num_vertices()];
    for b in a.basis() {
        if b.deg == 1 && b.src != b.tgt && !adj[b.src].contains(&b.tgt) {
            adj[b.src].push(b.tgt);
        }
    }
    adj
}

/// Vertices of a chain in walking order from one end.
pub fn chain_order(a: &Alg) -> Result<Vec<usize>, ModError> {
    let adj = adjacency(a);
    let n = adj.len();
    if n == 0 || adj.iter().any(|v| v.len() > 2) {
        return Err(ModError::NotChain);
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    let start = (0..n).find(|&v| adj[v].len() == 1).ok_or(ModError::NotChain)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        if order.contains(&next) {
            return Err(ModError::NotChain);
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Err(ModError::NotChain);
    }
    Ok(order)
}

/// Interval `[i, j]` of the chain for the sink-source orientation in which
/// vertices at even positions are sources iff `parity == 0`. Sinks sit in
/// degree 0, sources in degree 1; the arrow element `(x|y)` with `x` a
/// source acts by 1, everything else by 0.
fn interval(a: &Alg, order: &[usize], parity: usize, i: usize, j: usize) -> GradedModule {
    let is_source = |pos: usize| pos % 2 == parity;
    let pos_of: BTreeMap<usize, usize> = order.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let mut dims = BTreeMap::new();
    for (p, &v) in order.iter().enumerate().take(j + 1).skip(i) {
        dims.insert(Slot::new(v, 0, if is_source(p) { 1 } else { 0 }), 1);
    }
    let gens = super::actgens_of(a, &ground());
    let mut acts: Vec<BTreeMap<Slot, Matrix<Rat>>> = vec![BTreeMap::new(); gens.len()];
    for (k, g) in gens.iter().enumerate() {
        debug_assert_eq!(g.side, Side::Left);
        if g.deg != 1 || g.src == g.tgt {
            continue;
        }
        let (px, py) = (pos_of[&g.src], pos_of[&g.tgt]);
        let inside = |p: usize| (i..=j).contains(&p);
        if is_source(px) && inside(px) && inside(py) {
            acts[k].insert(Slot::new(g.tgt, 0, 0), Matrix::identity(1));
        }
    }
    GradedModule::new(a.clone(), ground(), &dims, acts).expect("interval module")
}

/// Indecomposable graded modules over the zigzag algebra of a chain, one per
/// root: intervals for one sink-source orientation, intervals of length at
/// least two for the other, and the projectives.
pub fn typea_indecomposables(a: &Alg) -> Result<Vec<GradedModule>, ModError> {
    let order = chain_order(a)?;
    let n = order.len();
    let mut out = Vec::with_capacity(n * n + n);
    if n == 1 {
        out.push(simple(a, 0));
        out.push(projective(a, 0));
        return Ok(out);
    }
    for i in 0..n {
        for j in i..n {
            out.push(interval(a, &order, 0, i, j));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(interval(a, &order, 1, i, j));
        }
    }
    for &v in &order {
        out.push(projective(a, v));
    }
    Ok(out)
}

/// Index and shift `k` with `m ≅ list[index]{k}`, if any.
pub fn matches_up_to_shift(m: &GradedModule, list: &[GradedModule]) -> Result<Option<(usize, i32)>, ModError> {
    let Some(lo) = m.min_deg() else { return Ok(None) };
    for (i, c) in list.iter().enumerate() {
        if c.total_dim() != m.total_dim() {
            continue;
        }
        let Some(clo) = c.min_deg() else { continue };
        let k = lo - clo;
        let shifted = c.shift(k);
        if shifted.dim_table() != m.dim_table() {
            continue;
        }
        if is_isomorphic(&shifted, m)?.is_iso() {
            return Ok(Some((i, k)));
        }
    }
    Ok(None)
}

/// Quotient of a random sum of shifted projectives by the submodule generated
/// by a few random homogeneous elements. Nonzero, total dimension at most
/// `max_dim` (which must be at least the smallest projective's dimension).
pub fn random_quotient_module(a: &Alg, rng: &mut impl Rng, max_dim: usize) -> GradedModule {
    let nv = a.num_vertices();
    let projs: Vec<GradedModule> = (0..nv).map(|v| projective(a, v)).collect();
    let smallest = projs.iter().map(|p| p.total_dim()).min().unwrap_or(0);
    assert!(smallest <= max_dim && smallest > 0, "max_dim too small");
    loop {
        let mut parts: Vec<GradedModule> = Vec::new();
        let mut total = 0;
        let count = rng.gen_range(1..=3);
        for _ in 0..count {
            let v = rng.gen_range(0..nv);
            if total + projs[v].total_dim() > max_dim {
                continue;
            }
            total += projs[v].total_dim();
            parts.push(projs[v].shift(rng.gen_range(0..=2)));
        }
        if parts.is_empty() {
            continue;
        }
        let refs: Vec<&GradedModule> = parts.iter().collect();
        let (sum, _, _) = GradedModule::direct_sum(&refs).expect("same algebra");
        let nrel = rng.gen_range(0..=2);
        let mut gens = Vec::new();
        for _ in 0..nrel {
            let i = rng.gen_range(0..sum.slots().len());
            gens.push((sum.slots()[i], small_vector(rng, sum.slot_dim(i))));
        }
        let sub = sum.submodule_closure(&gens);
        let (q, _) = sum.quotient(&sub);
        if !q.is_zero() {
            return q;
        }
    }
}
