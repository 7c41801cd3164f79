//! Gaussian elimination of complexes and isomorphism of minimal complexes.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::complex::{is_module_map, Complex};
use super::BraidError;
use crate::linalg::{Matrix, SparseEchelon};
use crate::modrep::{decompose, hom_space, is_isomorphic, GradedModule, IsoDecision};
use crate::scalar::Rat;

const SEED: u64 = 0x0b5a_1d00;

/// Complex as indecomposable summands per degree and block differentials
/// `blocks[i][y][x] : X_x -> Y_y`.
struct Blocked {
    parts: BTreeMap<i32, Vec<GradedModule>>,
    blocks: BTreeMap<i32, Vec<Vec<Matrix<Rat>>>>,
}

impl Blocked {
    fn from_complex(c: &Complex) -> Result<Self, BraidError> {
        let mut parts = BTreeMap::new();
        let mut maps = BTreeMap::new();
        for (i, m) in c.terms() {
            let s = decompose(m)?;
            parts.insert(i, s.iter().map(|x| x.module.clone()).collect::<Vec<_>>());
            maps.insert(i, s);
        }
        let mut blocks = BTreeMap::new();
        for (&i, src) in &maps {
            let Some(tgt) = maps.get(&(i + 1)) else { continue };
            let d = c.differential(i);
            let rows: Vec<Vec<Matrix<Rat>>> = tgt
                .iter()
                .map(|y| src.iter().map(|x| &(&y.proj * &d) * &x.incl).collect())
                .collect();
            blocks.insert(i, rows);
        }
        Ok(Blocked { parts, blocks })
    }

    /// First block that is an isomorphism of summands.
    fn find_iso(&self) -> Option<(i32, usize, usize)> {
        for (&i, rows) in &self.blocks {
            for (y, row) in rows.iter().enumerate() {
                for (x, b) in row.iter().enumerate() {
                    if b.is_square() && b.rows() > 0 && b.is_invertible() {
                        return Some((i, x, y));
                    }
                }
            }
        }
        None
    }

    /// Cancels the isomorphism `phi = blocks[i][y][x]`: the remaining
    /// differential in degree `i` becomes `eps - gamma phi^-1 delta`.
    fn cancel(&mut self, i: i32, x: usize, y: usize) {
        let rows = self.blocks.get_mut(&i).expect("degree");
        let phi_inv = rows[y][x].inverse().expect("invertible block");
        let ny = rows.len();
        let nx = rows[0].len();
        for y2 in 0..ny {
            if y2 == y || rows[y2][x].is_zero() {
                continue;
            }
            let gamma_phi = &rows[y2][x] * &phi_inv;
            for x2 in 0..nx {
                if x2 == x || rows[y][x2].is_zero() {
                    continue;
                }
                let corr = &gamma_phi * &rows[y][x2];
                rows[y2][x2] = &rows[y2][x2] - &corr;
            }
        }
        rows.remove(y);
        for r in rows.iter_mut() {
            r.remove(x);
        }
        if let Some(prev) = self.blocks.get_mut(&(i - 1)) {
            prev.remove(x);
        }
        if let Some(next) = self.blocks.get_mut(&(i + 1)) {
            for r in next.iter_mut() {
                r.remove(y);
            }
        }
        self.parts.get_mut(&i).expect("degree").remove(x);
        self.parts.get_mut(&(i + 1)).expect("degree").remove(y);
    }

    fn into_complex(self, like: &Complex) -> Result<Complex, BraidError> {
        let mut pos = BTreeMap::new();
        let mut incl = BTreeMap::new();
        let mut proj = BTreeMap::new();
        for (&i, ps) in &self.parts {
            if ps.is_empty() {
                continue;
            }
            let refs: Vec<&GradedModule> = ps.iter().collect();
            let (sum, inc, pr) = GradedModule::direct_sum(&refs)?;
            pos.insert(i, sum);
            incl.insert(i, inc);
            proj.insert(i, pr);
        }
        let mut diff = BTreeMap::new();
        for (i, rows) in &self.blocks {
            let (Some(src), Some(tgt)) = (pos.get(i), pos.get(&(i + 1))) else { continue };
            let mut d = Matrix::zeros(tgt.total_dim(), src.total_dim());
            for (y, row) in rows.iter().enumerate() {
                for (x, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        d = &d + &(&(&incl[&(i + 1)][y] * b) * &proj[i][x]);
                    }
                }
            }
            diff.insert(*i, d);
        }
        Complex::new(like.left().clone(), like.right().clone(), pos, diff)
    }
}

/// Homotopy-equivalent complex with no invertible component between
/// indecomposable summands in consecutive degrees.
pub fn minimize(c: &Complex) -> Result<Complex, BraidError> {
    let mut b = Blocked::from_complex(c)?;
    while let Some((i, x, y)) = b.find_iso() {
        b.cancel(i, x, y);
    }
    b.into_complex(c)
}

/// Outcome of comparing two complexes.
#[derive(Clone, Debug)]
pub enum ComplexIso {
    /// Chain isomorphism, one invertible module map per degree.
    Iso(BTreeMap<i32, Matrix<Rat>>),
    NotIso(String),
}

impl ComplexIso {
    pub fn is_iso(&self) -> bool {
        matches!(self, ComplexIso::Iso(_))
    }
}

/// Decides whether two complexes are isomorphic. For minimal complexes this
/// is homotopy equivalence. A positive answer carries a checked chain
/// isomorphism; a negative one a reason.
pub fn complex_isomorphism(c: &Complex, d: &Complex) -> Result<ComplexIso, BraidError> {
    if c.degrees() != d.degrees() {
        return Ok(ComplexIso::NotIso(format!("supports differ: {} vs {}", c.shape_string(), d.shape_string())));
    }
    for (i, m) in c.terms() {
        if let IsoDecision::NotIso(why) = is_isomorphic(m, d.term(i).expect("same support"))? {
            return Ok(ComplexIso::NotIso(format!("terms in degree {i} differ: {why}")));
        }
    }
    // chain maps f with d_D f^i = f^(i+1) d_C, as combinations of Hom bases
    let degs = c.degrees();
    let mut bases: BTreeMap<i32, (usize, Vec<Matrix<Rat>>)> = BTreeMap::new();
    let mut nvars = 0;
    for &i in &degs {
        let h = hom_space(c.term(i).expect("term"), d.term(i).expect("term"), 0)?;
        let n = h.len();
        bases.insert(i, (nvars, h));
        nvars += n;
    }
    let mut ech = SparseEchelon::new(nvars);
    for &i in &degs {
        if !bases.contains_key(&(i + 1)) {
            continue;
        }
        let (dc, dd) = (c.differential(i), d.differential(i));
        let mut contrib: Vec<(usize, Matrix<Rat>)> = Vec::new();
        let (o0, h0) = &bases[&i];
        for (k, f) in h0.iter().enumerate() {
            contrib.push((o0 + k, &dd * f));
        }
        let (o1, h1) = &bases[&(i + 1)];
        for (k, f) in h1.iter().enumerate() {
            contrib.push((o1 + k, -&(f * &dc)));
        }
        let (rows, cols) = (dd.rows(), dc.cols());
        for r in 0..rows {
            for col in 0..cols {
                let row: Vec<(usize, Rat)> = contrib
                    .iter()
                    .filter_map(|(v, m)| {
                        let x = m.get(r, col);
                        (!x.is_zero()).then(|| (*v, x.clone()))
                    })
                    .collect();
                if !row.is_empty() {
                    ech.add_row(row);
                }
            }
        }
    }
    let kernel = ech.dense_kernel();
    if kernel.is_empty() {
        return Ok(ComplexIso::NotIso("no nonzero chain maps".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..12 {
        let coeffs: Vec<Rat> = (0..kernel.len())
            .map(|_| Rat::from_integer(rng.gen_range(-4i64..=4).into()))
            .collect();
        let mut maps = BTreeMap::new();
        let mut ok = true;
        for &i in &degs {
            let (off, h) = &bases[&i];
            let (cm, dm) = (c.term(i).expect("term"), d.term(i).expect("term"));
            let mut f = Matrix::zeros(dm.total_dim(), cm.total_dim());
            for (k, b) in h.iter().enumerate() {
                let w: Rat = kernel.iter().zip(&coeffs).map(|(v, a)| &v[off + k] * a).sum();
                if !w.is_zero() {
                    f = &f + &b.scale(&w);
                }
            }
            if !f.is_invertible() {
                ok = false;
                break;
            }
            maps.insert(i, f);
        }
        if ok && check_chain_iso(c, d, &maps) {
            return Ok(ComplexIso::Iso(maps));
        }
    }
    Ok(ComplexIso::NotIso("no invertible chain map found".into()))
}

/// Every `f^i` is an invertible module map and `d_D f = f d_C`.
pub fn check_chain_iso(c: &Complex, d: &Complex, maps: &BTreeMap<i32, Matrix<Rat>>) -> bool {
    c.degrees().iter().all(|&i| {
        let (Some(f), Some(cm), Some(dm)) = (maps.get(&i), c.term(i), d.term(i)) else { return false };
        let commutes = match maps.get(&(i + 1)) {
            Some(g) => &d.differential(i) * f == g * &c.differential(i),
            None => true,
        };
        commutes && f.is_invertible() && is_module_map(cm, dm, f)
    })
}
