//! Balanced tensor products `X (x)_A M`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{GradedModule, ModError, Side, Slot};
use crate::linalg::{Matrix, SparseEchelon};
use crate::scalar::Rat;

/// `X (x)_A M` with the data needed to tensor morphisms.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub module: GradedModule,
    /// (slot of X, slot of M) -> (slot index in the result, raw offset)
    pieces: BTreeMap<(usize, usize), (usize, usize)>,
    /// per result slot: balancing relations in raw coordinates
    ech: Vec<SparseEchelon<Rat>>,
    /// per result slot: raw column -> position in the quotient basis
    pos: Vec<BTreeMap<usize, usize>>,
    /// per result slot: quotient basis vector -> (slot of X, slot of M, i, j)
    free: Vec<Vec<(usize, usize, usize, usize)>>,
    x_layout: Vec<(usize, usize)>,
    m_layout: Vec<(usize, usize)>,
    mdims: Vec<usize>,
}

/// Global basis index -> (slot, local index).
fn layout(m: &GradedModule) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(m.total_dim());
    for s in 0..m.slots().len() {
        for i in 0..m.slot_dim(s) {
            v.push((s, i));
        }
    }
    v
}

impl Tensor {
    fn raw_index(&self, p: usize, q: usize, i: usize, j: usize) -> Option<(usize, usize)> {
        self.pieces.get(&(p, q)).map(|&(s, off)| (s, off + i * self.mdims[q] + j))
    }

    /// Projects a raw vector of result slot `s` onto the quotient basis.
    fn project(&self, s: usize, raw: Vec<(usize, Rat)>) -> Vec<(usize, Rat)> {
        self.ech[s]
            .normal_form(raw)
            .into_iter()
            .map(|(c, x)| (self.pos[s][&c], x))
            .collect()
    }
}

pub fn tensor_over(x: &GradedModule, m: &GradedModule) -> Result<Tensor, ModError> {
    if !super::same_alg(x.right(), m.left()) {
        return Err(ModError::AlgebraMismatch);
    }
    let mid = x.right().clone();
    let mdims: Vec<usize> = (0..m.slots().len()).map(|q| m.slot_dim(q)).collect();
    let mut raw_dims: BTreeMap<Slot, usize> = BTreeMap::new();
    let mut raw_pieces: BTreeMap<(usize, usize), (Slot, usize)> = BTreeMap::new();
    for (p, sx) in x.slots().iter().enumerate() {
        for (q, sm) in m.slots().iter().enumerate() {
            if sx.r != sm.l {
                continue;
            }
            let s = Slot::new(sx.l, sm.r, sx.deg + sm.deg);
            let d = raw_dims.entry(s).or_insert(0);
            raw_pieces.insert((p, q), (s, *d));
            *d += x.slot_dim(p) * mdims[q];
        }
    }
    let mut ech: BTreeMap<Slot, SparseEchelon<Rat>> =
        raw_dims.iter().map(|(s, &d)| (*s, SparseEchelon::new(d))).collect();
    let raw = |p: usize, q: usize, i: usize, j: usize| -> (Slot, usize) {
        let (s, off) = raw_pieces[&(p, q)];
        (s, off + i * mdims[q] + j)
    };
    // balancing relations x g (x) m - x (x) g m
    let nlx = x.left().generators().len();
    for (gi, &g) in mid.generators().iter().enumerate() {
        let b = &mid.basis()[g];
        for (p, sx) in x.slots().iter().enumerate() {
            if sx.r != b.src {
                continue;
            }
            let right_x = x.op(nlx + gi).get(&p);
            for (q, sm) in m.slots().iter().enumerate() {
                if sm.l != b.tgt {
                    continue;
                }
                let left_m = m.op(gi).get(&q);
                for i in 0..x.slot_dim(p) {
                    for j in 0..mdims[q] {
                        let mut row: Vec<(usize, Rat)> = Vec::new();
                        let mut target = None;
                        if let Some((tp, mat)) = right_x {
                            for a in 0..mat.rows() {
                                let v = mat.get(a, i);
                                if !v.is_zero() {
                                    let (s, idx) = raw(*tp, q, a, j);
                                    target = Some(s);
                                    row.push((idx, v.clone()));
                                }
                            }
                        }
                        if let Some((tq, mat)) = left_m {
                            for c in 0..mat.rows() {
                                let v = mat.get(c, j);
                                if !v.is_zero() {
                                    let (s, idx) = raw(p, *tq, i, c);
                                    target = Some(s);
                                    row.push((idx, -v.clone()));
                                }
                            }
                        }
                        if let Some(s) = target {
                            ech.get_mut(&s).expect("slot").add_row(row);
                        }
                    }
                }
            }
        }
    }
    // surviving result slots in module order
    let mut kept: Vec<Slot> = ech
        .iter()
        .filter(|(s, e)| e.rank() < raw_dims[*s])
        .map(|(s, _)| *s)
        .collect();
    kept.sort_by_key(|s| (s.deg, s.l, s.r));
    let new_index: BTreeMap<Slot, usize> = kept.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let pieces: BTreeMap<(usize, usize), (usize, usize)> = raw_pieces
        .iter()
        .filter_map(|(k, (s, off))| new_index.get(s).map(|&i| (*k, (i, *off))))
        .collect();
    let mut t_ech = Vec::with_capacity(kept.len());
    let mut pos = Vec::with_capacity(kept.len());
    let mut free = Vec::with_capacity(kept.len());
    let mut dims = BTreeMap::new();
    for s in &kept {
        let e = ech.remove(s).expect("slot");
        let cols = e.free_columns();
        let mut starts: Vec<(usize, usize, usize)> = raw_pieces
            .iter()
            .filter(|(_, (ps, _))| ps == s)
            .map(|(&(p, q), &(_, off))| (off, p, q))
            .collect();
        starts.sort_unstable();
        let fr: Vec<_> = cols
            .iter()
            .map(|&c| {
                let k = starts.partition_point(|&(off, _, _)| off <= c) - 1;
                let (off, p, q) = starts[k];
                let local = c - off;
                (p, q, local / mdims[q], local % mdims[q])
            })
            .collect();
        pos.push(cols.iter().enumerate().map(|(a, &c)| (c, a)).collect());
        dims.insert(*s, cols.len());
        free.push(fr);
        t_ech.push(e);
    }
    let mut t = Tensor {
        module: GradedModule::zero(x.left().clone(), m.right().clone()),
        pieces,
        ech: t_ech,
        pos,
        free,
        x_layout: layout(x),
        m_layout: layout(m),
        mdims,
    };
    // left generators act on X, right generators on M
    let gens = super::actgens_of(x.left(), m.right());
    let nl = x.left().generators().len();
    let nlm = m.left().generators().len();
    let mut acts: Vec<BTreeMap<Slot, Matrix<Rat>>> = vec![BTreeMap::new(); gens.len()];
    for (k, g) in gens.iter().enumerate() {
        for (s, slot) in kept.iter().enumerate() {
            let Some(&ts) = g.target(*slot).and_then(|u| new_index.get(&u)) else { continue };
            let mut mat = Matrix::zeros(t.free[ts].len(), t.free[s].len());
            for (col, &(p, q, i, j)) in t.free[s].iter().enumerate() {
                let mut rawv: Vec<(usize, Rat)> = Vec::new();
                let (op, fixed) = match g.side {
                    Side::Left => (x.op(k).get(&p), false),
                    Side::Right => (m.op(nlm + (k - nl)).get(&q), true),
                };
                let Some((tgt, gm)) = op else { continue };
                let src_local = if fixed { j } else { i };
                for a in 0..gm.rows() {
                    let v = gm.get(a, src_local);
                    if v.is_zero() {
                        continue;
                    }
                    let hit = if fixed {
                        t.raw_index(p, *tgt, i, a)
                    } else {
                        t.raw_index(*tgt, q, a, j)
                    };
                    if let Some((rs, idx)) = hit {
                        debug_assert_eq!(rs, ts);
                        rawv.push((idx, v.clone()));
                    }
                }
                if rawv.is_empty() {
                    continue;
                }
                for (r, v) in t.project(ts, rawv) {
                    mat.set(r, col, v);
                }
            }
            if !mat.is_zero() {
                acts[k].insert(*slot, mat);
            }
        }
    }
    t.module = GradedModule::new(x.left().clone(), m.right().clone(), &dims, acts)?;
    debug_assert!(kept.iter().enumerate().all(|(i, s)| t.module.slot_index(*s) == Some(i)));
    Ok(t)
}

/// `f (x) g : X (x) M -> X' (x) M'` on quotient bases, for module maps
/// `f : X -> X'` and `g : M -> M'` given as dense matrices.
pub fn tensor_morphism(src: &Tensor, tgt: &Tensor, f: &Matrix<Rat>, g: &Matrix<Rat>) -> Matrix<Rat> {
    let sm = &src.module;
    let tm = &tgt.module;
    let mut out = Matrix::zeros(tm.total_dim(), sm.total_dim());
    let sx: BTreeMap<(usize, usize), usize> =
        src.x_layout.iter().enumerate().map(|(gi, &k)| (k, gi)).collect();
    let smv: BTreeMap<(usize, usize), usize> =
        src.m_layout.iter().enumerate().map(|(gi, &k)| (k, gi)).collect();
    for s in 0..sm.slots().len() {
        for (col, &(p, q, i, j)) in src.free[s].iter().enumerate() {
            let (gx, gm) = (sx[&(p, i)], smv[&(q, j)]);
            let fx: Vec<(usize, &Rat)> =
                (0..f.rows()).map(|r| (r, f.get(r, gx))).filter(|(_, v)| !v.is_zero()).collect();
            let gv: Vec<(usize, &Rat)> =
                (0..g.rows()).map(|r| (r, g.get(r, gm))).filter(|(_, v)| !v.is_zero()).collect();
            let mut by_slot: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
            for (a, va) in &fx {
                let (pa, ia) = tgt.x_layout[*a];
                for (b, vb) in &gv {
                    let (qb, jb) = tgt.m_layout[*b];
                    if let Some((ts, idx)) = tgt.raw_index(pa, qb, ia, jb) {
                        by_slot.entry(ts).or_default().push((idx, *va * *vb));
                    }
                }
            }
            for (ts, rawv) in by_slot {
                for (r, v) in tgt.project(ts, rawv) {
                    out.set(tm.offset(ts) + r, sm.offset(s) + col, v);
                }
            }
        }
    }
    out
}
