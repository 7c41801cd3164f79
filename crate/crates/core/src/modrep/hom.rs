//! Spaces of graded module homomorphisms.

use num_traits::Zero;

use super::{GradedModule, ModError};
use crate::linalg::{Matrix, SparseEchelon};
use crate::scalar::Rat;
use crate::Laurent;

struct HomSystem {
    /// per slot of M: (offset of its block among the unknowns, index of target slot in N)
    blocks: Vec<Option<(usize, usize)>>,
    nvars: usize,
    ech: SparseEchelon<Rat>,
}

/// Unknown blocks `X_s : M_s -> N_{s+shift}` and the intertwining equations
/// `g X = X g` for every action generator.
fn build(m: &GradedModule, n: &GradedModule, shift: i32) -> Result<HomSystem, ModError> {
    if !m.same_algebras(n) {
        return Err(ModError::AlgebraMismatch);
    }
    let mut blocks = Vec::with_capacity(m.slots().len());
    let mut nvars = 0;
    for (i, s) in m.slots().iter().enumerate() {
        match n.slot_index(s.shifted(shift)) {
            Some(j) => {
                blocks.push(Some((nvars, j)));
                nvars += m.slot_dim(i) * n.slot_dim(j);
            }
            None => blocks.push(None),
        }
    }
    let var = |i: usize, r: usize, c: usize| -> usize {
        let (off, _) = blocks[i].expect("block exists");
        off + r * m.slot_dim(i) + c
    };
    let mut ech = SparseEchelon::new(nvars);
    let gens = m.actgens();
    for (k, g) in gens.iter().enumerate() {
        for (i, s) in m.slots().iter().enumerate() {
            let Some(t) = g.target(*s) else { continue };
            let Some(tn) = n.slot_index(t.shifted(shift)) else { continue };
            let di = m.slot_dim(i);
            let dtn = n.slot_dim(tn);
            // N_g X_i
            let ng = blocks[i].and_then(|(_, j)| n.op(k).get(&j).map(|(_, mat)| mat));
            // X_t M_g
            let mg = m.op(k).get(&i);
            for p in 0..dtn {
                for q in 0..di {
                    let mut row: Vec<(usize, Rat)> = Vec::new();
                    if let Some(nm) = ng {
                        for r in 0..nm.cols() {
                            let v = nm.get(p, r);
                            if !v.is_zero() {
                                row.push((var(i, r, q), v.clone()));
                            }
                        }
                    }
                    if let Some((ti, mm)) = mg {
                        for r in 0..mm.rows() {
                            let v = mm.get(r, q);
                            if !v.is_zero() {
                                row.push((var(*ti, p, r), -v.clone()));
                            }
                        }
                    }
                    if !row.is_empty() {
                        ech.add_row(row);
                    }
                }
            }
        }
    }
    Ok(HomSystem { blocks, nvars, ech })
}

/// Basis of `Hom(M{shift}, N)`: maps `M_n -> N_{n+shift}`, as dense
/// matrices of shape `dim N x dim M`.
pub fn hom_space(m: &GradedModule, n: &GradedModule, shift: i32) -> Result<Vec<Matrix<Rat>>, ModError> {
    let sys = build(m, n, shift)?;
    let blocks = sys.blocks.clone();
    let kernel = sys.ech.kernel();
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut mat = Matrix::zeros(n.total_dim(), m.total_dim());
            for (x, c) in v {
                // locate the block containing variable x
                let (i, (off, j)) = blocks
                    .iter()
                    .enumerate()
                    .filter_map(|(i, b)| b.map(|b| (i, b)))
                    .rfind(|(_, (off, _))| *off <= x)
                    .expect("variable in some block");
                let local = x - off;
                let (r, col) = (local / m.slot_dim(i), local % m.slot_dim(i));
                mat.set(n.offset(j) + r, m.offset(i) + col, c);
            }
            mat
        })
        .collect())
}

pub fn hom_dim(m: &GradedModule, n: &GradedModule, shift: i32) -> Result<usize, ModError> {
    let sys = build(m, n, shift)?;
    Ok(sys.nvars - sys.ech.rank())
}

/// `sum_i q^i dim Hom(M{i}, N)`.
pub fn graded_hom(m: &GradedModule, n: &GradedModule) -> Result<Laurent, ModError> {
    if !m.same_algebras(n) {
        return Err(ModError::AlgebraMismatch);
    }
    let (Some(m0), Some(m1), Some(n0), Some(n1)) = (m.min_deg(), m.max_deg(), n.min_deg(), n.max_deg()) else {
        return Ok(Laurent::zero());
    };
    let mut terms = Vec::new();
    for i in (n0 - m1)..=(n1 - m0) {
        let d = hom_dim(m, n, i)?;
        if d > 0 {
            terms.push((i, Rat::from_integer((d as i64).into())));
        }
    }
    Ok(Laurent::from_terms(terms))
}
