//! Finite-dimensional graded algebras given by a basis of paths and
//! structure constants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::linalg::{Matrix, SparseEchelon};
use crate::scalar::{rat_parts, Rat};

/// Sparse vector as sorted `(index, coefficient)` pairs with no zeros.
pub type SparseVec = Vec<(usize, Rat)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid graph: {0}")]
    Graph(#[from] crate::roots::GraphError),
    #[error("cocycle condition fails at vertex {vertex} for neighbours {triple:?}")]
    Cocycle { vertex: String, triple: Vec<String> },
    #[error("skew coefficient for vertex {0} must be nonzero")]
    ZeroSkew(String),
    #[error("path algebra with oriented cycle is infinite-dimensional")]
    OrientedCycle,
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

/// A basis element lying in `e_src A e_tgt` in the given degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElem {
    pub label: String,
    pub src: usize,
    pub tgt: usize,
    pub deg: i32,
}

/// Graded algebra with a basis adapted to a complete set of orthogonal
/// idempotents. Products are written left to right along paths: `x * y`
/// can be nonzero only if `x` ends where `y` starts.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverAlgebra {
    pub name: String,
    vertex_labels: Vec<String>,
    basis: Vec<BasisElem>,
    mult: Vec<Vec<SparseVec>>,
    idempotents: Vec<usize>,
    generators: Vec<usize>,
    /// Each basis element of positive degree as a combination of words in
    /// the generators (indices into `generators`).
    words: Vec<Vec<(Vec<usize>, Rat)>>,
    trace: Option<Vec<Rat>>,
    anti: Option<Vec<(usize, Rat)>>,
}

pub(crate) fn add_into(acc: &mut BTreeMap<usize, Rat>, v: &[(usize, Rat)], c: &Rat) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Rat::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

pub(crate) fn to_sparse(m: BTreeMap<usize, Rat>) -> SparseVec {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl QuiverAlgebra {
    /// Builds an algebra from its basis and a product rule on basis pairs.
    ///
    /// Degree 0 must be spanned by the idempotents; generators are computed.
    pub fn from_table(
        name: impl Into<String>,
        vertex_labels: Vec<String>,
        basis: Vec<BasisElem>,
        idempotents: Vec<usize>,
        mut product: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Self, AlgebraError> {
        let n = basis.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if basis[i].tgt != basis[j].src {
                    continue;
                }
                let mut p = product(i, j);
                p.retain(|(_, c)| !c.is_zero());
                p.sort_by_key(|(k, _)| *k);
                for (k, _) in &p {
                    let b = &basis[*k];
                    if b.deg != basis[i].deg + basis[j].deg
                        || b.src != basis[i].src
                        || b.tgt != basis[j].tgt
                    {
                        return Err(AlgebraError::Malformed(format!(
                            "product {} * {} has a term {} of wrong degree or endpoints",
                            basis[i].label, basis[j].label, b.label
                        )));
                    }
                }
                mult[i][j] = p;
            }
        }
        let mut alg = QuiverAlgebra {
            name: name.into(),
            vertex_labels,
            basis,
            mult,
            idempotents,
            generators: Vec::new(),
            words: Vec::new(),
            trace: None,
            anti: None,
        };
        alg.check_units()?;
        alg.compute_words()?;
        Ok(alg)
    }

    pub fn with_trace(mut self, trace: Vec<Rat>) -> Self {
        self.trace = Some(trace);
        self
    }

    /// Attaches a linear anti-involution given on basis elements as `b_i -> c * b_j`.
    pub fn with_anti_involution(mut self, anti: Vec<(usize, Rat)>) -> Self {
        self.anti = Some(anti);
        self
    }

    /// The ground field as a one-vertex algebra.
    pub fn ground() -> Self {
        Self::from_table(
            "k",
            vec!["*".into()],
            vec![BasisElem {
                label: "1".into(),
                src: 0,
                tgt: 0,
                deg: 0,
            }],
            vec![0],
            |_, _| vec![(0, Rat::one())],
        )
        .expect("ground field")
        .with_trace(vec![Rat::one()])
        .with_anti_involution(vec![(0, Rat::one())])
    }

    fn check_units(&self) -> Result<(), AlgebraError> {
        let nv = self.vertex_labels.len();
        if self.idempotents.len() != nv {
            return Err(AlgebraError::Malformed("one idempotent per vertex".into()));
        }
        for (v, &e) in self.idempotents.iter().enumerate() {
            let b = &self.basis[e];
            if b.src != v || b.tgt != v || b.deg != 0 {
                return Err(AlgebraError::Malformed(format!("{} is not at vertex {v}", b.label)));
            }
        }
        for (i, b) in self.basis.iter().enumerate() {
            if b.deg == 0 && !self.idempotents.contains(&i) {
                return Err(AlgebraError::Malformed(format!(
                    "degree 0 element {} is not an idempotent",
                    b.label
                )));
            }
            if b.deg < 0 {
                return Err(AlgebraError::Malformed(format!("negative degree {}", b.label)));
            }
            let unit = vec![(i, Rat::one())];
            if self.mult[self.idempotents[b.src]][i] != unit
                || self.mult[i][self.idempotents[b.tgt]] != unit
            {
                return Err(AlgebraError::Malformed(format!(
                    "idempotents do not act as units on {}",
                    b.label
                )));
            }
        }
        Ok(())
    }

    fn compute_words(&mut self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let max_deg = self.basis.iter().map(|b| b.deg).max().unwrap_or(0);
        let mut gens: Vec<usize> = Vec::new();
        let mut words: Vec<Vec<(Vec<usize>, Rat)>> = vec![Vec::new(); n];
        // spanning words per degree with their dense vectors
        let mut by_deg: BTreeMap<i32, Vec<(Vec<usize>, SparseVec)>> = BTreeMap::new();
        for d in 1..=max_deg {
            let in_deg: Vec<usize> = (0..n).filter(|&i| self.basis[i].deg == d).collect();
            if in_deg.is_empty() {
                continue;
            }
            let mut ech = SparseEchelon::<Rat>::new(n);
            let mut chosen: Vec<(Vec<usize>, SparseVec)> = Vec::new();
            for (gi, &g) in gens.iter().enumerate() {
                let dg = self.basis[g].deg;
                if let Some(ws) = by_deg.get(&(d - dg)) {
                    for (w, v) in ws {
                        let prod = self.mul_sparse(&[(g, Rat::one())], v);
                        if prod.is_empty() {
                            continue;
                        }
                        if ech.add_row(prod.clone()) {
                            let mut word = vec![gi];
                            word.extend_from_slice(w);
                            chosen.push((word, prod));
                        }
                    }
                }
            }
            for &i in &in_deg {
                let v = vec![(i, Rat::one())];
                if ech.add_row(v.clone()) {
                    gens.push(i);
                    chosen.push((vec![gens.len() - 1], v));
                }
            }
            // express basis elements in the chosen words
            let k = chosen.len();
            let mut m = Matrix::<Rat>::zeros(in_deg.len(), k);
            for (c, (_, v)) in chosen.iter().enumerate() {
                for (i, x) in v {
                    let r = in_deg.iter().position(|j| j == i).expect("degree-homogeneous");
                    m.set(r, c, x.clone());
                }
            }
            let inv = m.inverse().ok_or_else(|| {
                AlgebraError::Malformed("generator words do not form a basis".into())
            })?;
            for (c, (w, _)) in chosen.iter().enumerate() {
                let _ = w;
                for (r, &i) in in_deg.iter().enumerate() {
                    let coef = inv.get(c, r).clone();
                    if !coef.is_zero() {
                        words[i].push((chosen[c].0.clone(), coef));
                    }
                }
            }
            by_deg.insert(d, chosen);
        }
        self.generators = gens;
        self.words = words;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex(&self, label: &str) -> Result<usize, AlgebraError> {
        self.vertex_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| AlgebraError::UnknownVertex(label.to_string()))
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Words in the generators expressing basis element `i` (positive degree).
    pub fn words(&self, i: usize) -> &[(Vec<usize>, Rat)] {
        &self.words[i]
    }

    pub fn trace_form(&self) -> Option<&[Rat]> {
        self.trace.as_deref()
    }

    pub fn anti_involution(&self) -> Option<&[(usize, Rat)]> {
        self.anti.as_deref()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn mul_sparse(&self, x: &[(usize, Rat)], y: &[(usize, Rat)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let p = &self.mult[*i][*j];
                if !p.is_empty() {
                    add_into(&mut acc, p, &(a * b));
                }
            }
        }
        to_sparse(acc)
    }

    pub fn graded_dims(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for b in &self.basis {
            *m.entry(b.deg).or_insert(0) += 1;
        }
        m
    }

    /// Basis indices of `e_s A e_t`.
    pub fn between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].src == s && self.basis[i].tgt == t)
            .collect()
    }

    /// First basis triple violating `(xy)z = x(yz)`, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let xy = &self.mult[i][j];
                for k in 0..n {
                    if self.basis[j].tgt != self.basis[k].src {
                        continue;
                    }
                    let l = self.mul_sparse(xy, &[(k, Rat::one())]);
                    let r = self.mul_sparse(&[(i, Rat::one())], &self.mult[j][k]);
                    if l != r {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn trace_of(&self, x: &[(usize, Rat)]) -> Rat {
        let t = self.trace.as_ref().expect("algebra carries a trace form");
        x.iter().map(|(i, c)| &t[*i] * c).sum()
    }

    /// Matrix of `tr(b_i b_j)`.
    pub fn gram_matrix(&self) -> Matrix<Rat> {
        let n = self.dim();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.trace_of(&self.mult[i][j]));
            }
        }
        g
    }

    /// Graded Cartan matrix: entry `(a, b)` counts `e_a A e_b` by degree.
    pub fn graded_cartan(&self) -> Vec<Vec<crate::Laurent>> {
        let nv = self.num_vertices();
        let mut c = vec![vec![crate::Laurent::zero(); nv]; nv];
        for b in &self.basis {
            c[b.src][b.tgt] = &c[b.src][b.tgt] + &crate::Laurent::q_pow(b.deg);
        }
        c
    }

    /// JSON dump: basis table and nonzero structure constants.
    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|b| {
                json!({
                    "label": b.label,
                    "src": self.vertex_labels[b.src],
                    "tgt": self.vertex_labels[b.tgt],
                    "deg": b.deg,
                })
            })
            .collect();
        let mut products = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let p = &self.mult[i][j];
                if p.is_empty() {
                    continue;
                }
                let terms: Vec<Value> = p
                    .iter()
                    .map(|(k, c)| {
                        let (n, d) = rat_parts(c);
                        json!([self.basis[*k].label, n, d])
                    })
                    .collect();
                products.push(json!([self.basis[i].label, self.basis[j].label, terms]));
            }
        }
        json!({
            "name": self.name,
            "vertices": self.vertex_labels,
            "basis": basis,
            "products": products,
        })
    }
}

/// Linear map between algebras given by the images of basis elements.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap {
    pub images: Vec<SparseVec>,
}

impl AlgebraMap {
    fn apply(&self, x: &[(usize, Rat)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, c) in x {
            add_into(&mut acc, &self.images[*i], c);
        }
        to_sparse(acc)
    }

    /// Checks that the map is a degree-preserving bijective algebra
    /// homomorphism `a -> b`; returns a description of the first failure.
    pub fn check_isomorphism(&self, a: &QuiverAlgebra, b: &QuiverAlgebra) -> Result<(), String> {
        if a.dim() != b.dim() || self.images.len() != a.dim() {
            return Err("dimension mismatch".into());
        }
        for (i, img) in self.images.iter().enumerate() {
            for (k, _) in img {
                if b.basis[*k].deg != a.basis[i].deg {
                    return Err(format!("{} changes degree", a.basis[i].label));
                }
            }
        }
        let mut m = Matrix::<Rat>::zeros(a.dim(), a.dim());
        for (i, img) in self.images.iter().enumerate() {
            for (k, c) in img {
                m.set(*k, i, c.clone());
            }
        }
        if !m.is_invertible() {
            return Err("map is not bijective".into());
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.apply(&a.mult[i][j]);
                let rhs = b.mul_sparse(&self.images[i], &self.images[j]);
                if lhs != rhs {
                    return Err(format!(
                        "product {} * {} not preserved",
                        a.basis[i].label, a.basis[j].label
                    ));
                }
            }
        }
        Ok(())
    }
}
