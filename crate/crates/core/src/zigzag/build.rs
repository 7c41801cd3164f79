//! Zigzag, skew-zigzag, path algebras and trivial extensions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::{AlgebraError, AlgebraMap, BasisElem, QuiverAlgebra, SparseVec};
use crate::roots::{Graph, Orientation};
use crate::scalar::{int, Field, Rat};

fn elem(label: String, src: usize, tgt: usize, deg: i32) -> BasisElem {
    BasisElem {
        label,
        src,
        tgt,
        deg,
    }
}

/// Index layout of a (skew-)zigzag basis: idempotents, arrows, loops.
#[derive(Clone, Debug)]
pub struct ZigzagLayout {
    pub n: usize,
    /// Ordered pairs `(a, b)` of adjacent vertices, one per arrow `(a|b)`.
    pub arrows: Vec<(usize, usize)>,
    arrow_index: BTreeMap<(usize, usize), usize>,
}

impl ZigzagLayout {
    pub fn new(g: &Graph) -> Self {
        let n = g.num_vertices();
        let mut arrows = Vec::new();
        for a in 0..n {
            for &b in g.neighbors(a) {
                arrows.push((a, b));
            }
        }
        let arrow_index = arrows
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, n + i))
            .collect();
        ZigzagLayout {
            n,
            arrows,
            arrow_index,
        }
    }

    pub fn idempotent(&self, a: usize) -> usize {
        a
    }

    /// Basis index of the arrow `(a|b)`.
    pub fn arrow(&self, a: usize, b: usize) -> Option<usize> {
        self.arrow_index.get(&(a, b)).copied()
    }

    /// Basis index of the loop `l_a`.
    pub fn loop_at(&self, a: usize) -> usize {
        self.n + self.arrows.len() + a
    }

    pub fn dim(&self) -> usize {
        2 * self.n + self.arrows.len()
    }
}

/// Builds the algebra with `(a|b)(b|a) = loop_scale(a, b) * l_a`.
fn zigzag_like(
    g: &Graph,
    name: String,
    loop_scale: impl Fn(usize, usize) -> Rat,
) -> Result<QuiverAlgebra, AlgebraError> {
    let lay = ZigzagLayout::new(g);
    let n = lay.n;
    let labels = g.labels().to_vec();
    let mut basis = Vec::with_capacity(lay.dim());
    for a in 0..n {
        basis.push(elem(format!("e_{}", labels[a]), a, a, 0));
    }
    for &(a, b) in &lay.arrows {
        basis.push(elem(format!("({}|{})", labels[a], labels[b]), a, b, 1));
    }
    for a in 0..n {
        let label = if n == 1 {
            "X".to_string()
        } else {
            format!("l_{}", labels[a])
        };
        basis.push(elem(label, a, a, 2));
    }
    let degs: Vec<i32> = basis.iter().map(|b| b.deg).collect();
    let ends: Vec<(usize, usize)> = basis.iter().map(|b| (b.src, b.tgt)).collect();
    let narrows = lay.arrows.len();
    let alg = QuiverAlgebra::from_table(name, labels, basis, (0..n).collect(), |i, j| {
        if degs[i] == 0 {
            return vec![(j, Rat::one())];
        }
        if degs[j] == 0 {
            return vec![(i, Rat::one())];
        }
        if degs[i] == 1 && degs[j] == 1 {
            let (a, b) = ends[i];
            let (b2, c) = ends[j];
            debug_assert_eq!(b, b2);
            if a == c {
                return vec![(lay.loop_at(a), loop_scale(a, b))];
            }
        }
        Vec::new()
    })?;
    let trace = (0..lay.dim())
        .map(|i| if degs[i] == 2 { Rat::one() } else { Rat::zero() })
        .collect();
    let mut anti: Vec<(usize, Rat)> = (0..lay.dim()).map(|i| (i, Rat::one())).collect();
    for (k, &(a, b)) in lay.arrows.iter().enumerate() {
        anti[n + k] = (lay.arrow(b, a).expect("reverse arrow"), Rat::one());
    }
    debug_assert_eq!(anti.len(), 2 * n + narrows);
    Ok(alg.with_trace(trace).with_anti_involution(anti))
}

/// The zigzag algebra `A(G)`.
pub fn build_zigzag(g: &Graph) -> Result<QuiverAlgebra, AlgebraError> {
    if !g.is_connected() {
        return Err(crate::roots::GraphError::Disconnected.into());
    }
    zigzag_like(g, "A".into(), |_, _| Rat::one())
}

/// Coefficients `nu^a_{b,c}` with `(a|b|a) = nu^a_{b,c} (a|c|a)`.
///
/// Unspecified pairs default to the inverse of the reversed pair, or 1.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SkewCoefficients {
    values: BTreeMap<(usize, usize, usize), Rat>,
}

impl SkewCoefficients {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Rat) -> &mut Self {
        self.values.insert((a, b, c), v);
        self
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Rat {
        if b == c {
            return Rat::one();
        }
        if let Some(v) = self.values.get(&(a, b, c)) {
            return v.clone();
        }
        match self.values.get(&(a, c, b)) {
            Some(v) if !v.is_zero() => v.inv().expect("nonzero"),
            _ => Rat::one(),
        }
    }

    /// The sign choice on a cycle `0 - 1 - ... - (n-1) - 0` with
    /// `(i|i-1|i) + (i|i+1|i) = 0` at every vertex.
    pub fn alternating_cycle(n: usize) -> Self {
        let mut s = Self::new();
        for i in 0..n {
            s.set(i, (i + n - 1) % n, (i + 1) % n, int(-1));
        }
        s
    }

    /// Checks both cocycle identities at every vertex.
    pub fn validate(&self, g: &Graph) -> Result<(), AlgebraError> {
        for (&(a, b, c), v) in &self.values {
            if v.is_zero() {
                return Err(AlgebraError::ZeroSkew(g.label(a).to_string()));
            }
            if a >= g.num_vertices() || !g.adjacent(a, b) || !g.adjacent(a, c) {
                return Err(AlgebraError::Malformed(format!(
                    "skew coefficient at ({a}, {b}, {c}) is not on a pair of neighbours"
                )));
            }
        }
        for a in 0..g.num_vertices() {
            let nb = g.neighbors(a);
            let name = |v: &[usize]| -> Vec<String> { v.iter().map(|&x| g.label(x).to_string()).collect() };
            for &b in nb {
                for &c in nb {
                    if (self.get(a, b, c) * self.get(a, c, b)) != Rat::one() {
                        return Err(AlgebraError::Cocycle {
                            vertex: g.label(a).to_string(),
                            triple: name(&[b, c]),
                        });
                    }
                    for &d in nb {
                        let p = self.get(a, b, c) * self.get(a, c, d) * self.get(a, d, b);
                        if p != Rat::one() {
                            return Err(AlgebraError::Cocycle {
                                vertex: g.label(a).to_string(),
                                triple: name(&[b, c, d]),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Skew-zigzag algebra: `l_a = (a|b0|a)` for the first neighbour `b0` of `a`,
/// and `(a|b|a) = nu^a_{b,b0} l_a`.
pub fn build_skew(g: &Graph, nu: &SkewCoefficients) -> Result<QuiverAlgebra, AlgebraError> {
    if !g.is_connected() {
        return Err(crate::roots::GraphError::Disconnected.into());
    }
    nu.validate(g)?;
    let first: Vec<Option<usize>> = (0..g.num_vertices())
        .map(|a| g.neighbors(a).first().copied())
        .collect();
    zigzag_like(g, "A_skew".into(), |a, b| {
        nu.get(a, b, first[a].expect("vertex with an arrow"))
    })
}

/// Explicit isomorphism from a skew-zigzag algebra of a tree onto the
/// zigzag algebra, rescaling arrows.
pub fn skew_tree_isomorphism(g: &Graph, nu: &SkewCoefficients) -> Result<AlgebraMap, AlgebraError> {
    if !g.is_tree() {
        return Err(AlgebraError::Malformed("graph is not a tree".into()));
    }
    nu.validate(g)?;
    let n = g.num_vertices();
    let lay = ZigzagLayout::new(g);
    let b0 = |a: usize| g.neighbors(a).first().copied();
    let nu_first = |a: usize, b: usize| nu.get(a, b, b0(a).expect("neighbour"));
    // t_b nu^b_{a,b0(b)} = t_a nu^a_{b,b0(a)} along every edge
    let mut t: Vec<Option<Rat>> = vec![None; n];
    t[0] = Some(Rat::one());
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        let ta = t[a].clone().expect("visited");
        for &b in g.neighbors(a) {
            if t[b].is_none() {
                let tb = (nu_first(a, b) * ta.clone())
                    .div(&nu_first(b, a))
                    .expect("nonzero skew coefficient");
                t[b] = Some(tb);
                stack.push(b);
            }
        }
    }
    let t: Vec<Rat> = t.into_iter().map(|x| x.expect("tree is connected")).collect();
    let mut images: Vec<SparseVec> = (0..lay.dim()).map(|i| vec![(i, Rat::one())]).collect();
    for &(a, b) in &lay.arrows {
        let s = if a < b {
            nu_first(a, b) * t[a].clone()
        } else {
            Rat::one()
        };
        let i = lay.arrow(a, b).expect("arrow");
        images[i] = vec![(i, s)];
    }
    for a in 0..n {
        let i = lay.loop_at(a);
        images[i] = vec![(i, t[a].clone())];
    }
    Ok(AlgebraMap { images })
}

/// Path algebra of an oriented graph. `reduced` kills all paths of length
/// at least 2.
pub fn path_algebra(o: &Orientation, reduced: bool) -> Result<QuiverAlgebra, AlgebraError> {
    let g = &o.graph;
    let n = g.num_vertices();
    let labels = g.labels().to_vec();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(t, h) in &o.arrows {
        out[t].push(h);
    }
    // paths as vertex sequences
    let mut paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut frontier: Vec<Vec<usize>> = paths.clone();
    let max_len = if reduced { 1 } else { n };
    for len in 1..=n {
        let mut next = Vec::new();
        for p in &frontier {
            for &h in &out[*p.last().expect("nonempty")] {
                let mut q = p.clone();
                q.push(h);
                next.push(q);
            }
        }
        if next.is_empty() || len > max_len {
            break;
        }
        if len == n {
            return Err(AlgebraError::OrientedCycle);
        }
        if len <= max_len {
            paths.extend(next.iter().cloned());
        }
        frontier = next;
    }
    paths.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let index: BTreeMap<Vec<usize>, usize> =
        paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let basis: Vec<BasisElem> = paths
        .iter()
        .map(|p| {
            let label = if p.len() == 1 {
                format!("e_{}", labels[p[0]])
            } else {
                let parts: Vec<&str> = p.iter().map(|&v| labels[v].as_str()).collect();
                format!("({})", parts.join("|"))
            };
            elem(label, p[0], *p.last().expect("nonempty"), p.len() as i32 - 1)
        })
        .collect();
    let idem: Vec<usize> = (0..n).map(|v| index[&vec![v]]).collect();
    let name = if reduced { "B_red" } else { "B" };
    QuiverAlgebra::from_table(name, labels, basis, idem, |i, j| {
        let (p, q) = (&paths[i], &paths[j]);
        let mut r = p.clone();
        r.extend_from_slice(&q[1..]);
        match index.get(&r) {
            Some(&k) => vec![(k, Rat::one())],
            None => Vec::new(),
        }
    })
}

/// Trivial extension `T(B) = B + B*`, with `deg f_j = top - deg b_j`.
///
/// Basis: the basis of `B`, then the dual basis `f_j` labelled `D<label>`.
pub fn trivial_extension(b: &QuiverAlgebra, top: i32) -> Result<QuiverAlgebra, AlgebraError> {
    let n = b.dim();
    let mut basis: Vec<BasisElem> = b.basis().to_vec();
    for x in b.basis() {
        basis.push(elem(format!("D{}", x.label), x.tgt, x.src, top - x.deg));
    }
    // coefficient c^j_{ik} of b_j in b_i b_k
    let coef = |i: usize, k: usize, j: usize| -> Rat {
        b.mul_basis(i, k)
            .iter()
            .find(|(t, _)| *t == j)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    };
    let idem: Vec<usize> = (0..b.num_vertices()).map(|v| b.idempotent(v)).collect();
    let alg = QuiverAlgebra::from_table(
        format!("T({})", b.name),
        b.vertex_labels().to_vec(),
        basis,
        idem.clone(),
        |i, j| match (i < n, j < n) {
            (true, true) => b.mul_basis(i, j).clone(),
            (false, false) => Vec::new(),
            // b_i f_j = sum_k c^j_{ki} f_k
            (true, false) => (0..n)
                .map(|k| (n + k, coef(k, i, j - n)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            // f_j b_i = sum_k c^j_{ik} f_k
            (false, true) => (0..n)
                .map(|k| (n + k, coef(j, k, i - n)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        },
    )?;
    let mut trace = vec![Rat::zero(); 2 * n];
    for &e in &idem {
        trace[n + e] = Rat::one();
    }
    Ok(alg.with_trace(trace))
}

/// The isomorphism `T(B_red(o)) -> A(G)`: `D e_a -> l_a`, `D(a|b) -> (b|a)`.
pub fn trivial_extension_to_zigzag(
    o: &Orientation,
    t: &QuiverAlgebra,
    a: &QuiverAlgebra,
) -> Result<AlgebraMap, AlgebraError> {
    let lay = ZigzagLayout::new(&o.graph);
    let b = path_algebra(o, true)?;
    let n = b.dim();
    if t.dim() != 2 * n || a.dim() != lay.dim() {
        return Err(AlgebraError::Malformed("dimension mismatch".into()));
    }
    let target = |x: &BasisElem, dual: bool| -> usize {
        match (x.deg, dual) {
            (0, false) => lay.idempotent(x.src),
            (0, true) => lay.loop_at(x.src),
            (_, false) => lay.arrow(x.src, x.tgt).expect("arrow"),
            (_, true) => lay.arrow(x.tgt, x.src).expect("arrow"),
        }
    };
    let images = (0..2 * n)
        .map(|i| vec![(target(&b.basis()[i % n], i >= n), Rat::one())])
        .collect();
    Ok(AlgebraMap { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{all_orientations, sink_source_orientations};

    fn zz(name: &str) -> QuiverAlgebra {
        build_zigzag(&Graph::named(name).unwrap()).unwrap()
    }

    #[test]
    fn zigzag_dims() {
        let a = zz("A3");
        assert_eq!(a.graded_dims().into_iter().collect::<Vec<_>>(), vec![(0, 3), (1, 4), (2, 3)]);
        assert_eq!(a.dim(), 10);
        let a1 = zz("A1");
        assert_eq!(a1.graded_dims().into_iter().collect::<Vec<_>>(), vec![(0, 1), (2, 1)]);
        assert_eq!(a1.generators().len(), 1);
        let x = a1.basis_index("X").unwrap();
        assert!(a1.mul_basis(x, x).is_empty());
    }

    #[test]
    fn non_returning_paths_vanish() {
        let a = zz("A3");
        let ab = a.basis_index("(a|b)").unwrap();
        let bc = a.basis_index("(b|c)").unwrap();
        let ba = a.basis_index("(b|a)").unwrap();
        assert!(a.mul_basis(ab, bc).is_empty());
        let la = a.basis_index("l_a").unwrap();
        assert_eq!(a.mul_basis(ab, ba), &vec![(la, Rat::one())]);
    }

    #[test]
    fn associative_and_symmetric() {
        for name in ["A1", "A2", "A4", "D4", "affA2"] {
            let a = zz(name);
            assert_eq!(a.associativity_failure(), None, "{name}");
            let g = a.gram_matrix();
            assert_eq!(g, g.transpose());
            assert!(g.is_invertible());
        }
        assert_eq!(zz("A2").gram_matrix().rank(), 6);
    }

    #[test]
    fn skew_trivial_and_cycle() {
        let g = Graph::named("A3").unwrap();
        let s = build_skew(&g, &SkewCoefficients::new()).unwrap();
        let mut z = build_zigzag(&g).unwrap();
        z.name = s.name.clone();
        assert_eq!(s, z);
        let c = Graph::named("affA2").unwrap();
        let sk = build_skew(&c, &SkewCoefficients::alternating_cycle(3)).unwrap();
        assert_eq!(sk.associativity_failure(), None);
        assert!(sk.gram_matrix().is_invertible());
        // (i|i-1|i) + (i|i+1|i) = 0
        let p = |x: &str, y: &str| {
            let u = sk.basis_index(&format!("({x}|{y})")).unwrap();
            let v = sk.basis_index(&format!("({y}|{x})")).unwrap();
            sk.mul_basis(u, v).clone()
        };
        let sum = {
            let mut m = BTreeMap::new();
            super::super::algebra::add_into(&mut m, &p("b", "a"), &Rat::one());
            super::super::algebra::add_into(&mut m, &p("b", "c"), &Rat::one());
            m
        };
        assert!(sum.is_empty());
    }

    #[test]
    fn cocycle_violation_reported() {
        let g = Graph::named("D4").unwrap();
        // centre is vertex b with neighbours a, c, d
        let mut nu = SkewCoefficients::new();
        nu.set(1, 0, 2, int(2)).set(1, 2, 3, int(3)).set(1, 3, 0, int(5));
        assert!(matches!(build_skew(&g, &nu), Err(AlgebraError::Cocycle { .. })));
    }

    #[test]
    fn skew_tree_rescaling() {
        let g = Graph::named("D4").unwrap();
        let mut nu = SkewCoefficients::new();
        nu.set(1, 0, 2, int(2)).set(1, 2, 3, int(-3)).set(1, 0, 3, int(-6));
        let sk = build_skew(&g, &nu).unwrap();
        let z = build_zigzag(&g).unwrap();
        let phi = skew_tree_isomorphism(&g, &nu).unwrap();
        assert_eq!(phi.check_isomorphism(&sk, &z), Ok(()));
    }

    #[test]
    fn path_algebras() {
        let g = Graph::named("A2").unwrap();
        let o = &sink_source_orientations(&g)[0];
        let b = path_algebra(o, true).unwrap();
        assert_eq!(b.graded_dims().into_iter().collect::<Vec<_>>(), vec![(0, 2), (1, 1)]);
        let g3 = Graph::named("A3").unwrap();
        let lin = Orientation {
            graph: g3.clone(),
            arrows: vec![(0, 1), (1, 2)],
        };
        assert_eq!(path_algebra(&lin, false).unwrap().dim(), 6);
        assert_eq!(path_algebra(&lin, true).unwrap().dim(), 5);
        let cyc = Orientation {
            graph: Graph::named("affA2").unwrap(),
            arrows: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert_eq!(path_algebra(&cyc, false), Err(AlgebraError::OrientedCycle));
        assert!(path_algebra(&cyc, true).is_ok());
    }

    #[test]
    fn trivial_extension_is_zigzag() {
        for name in ["A2", "A3", "D4"] {
            let g = Graph::named(name).unwrap();
            let a = build_zigzag(&g).unwrap();
            for o in all_orientations(&g) {
                let b = path_algebra(&o, true).unwrap();
                let t = trivial_extension(&b, 2).unwrap();
                assert_eq!(t.dim(), 2 * b.dim());
                let phi = trivial_extension_to_zigzag(&o, &t, &a).unwrap();
                assert_eq!(phi.check_isomorphism(&t, &a), Ok(()), "{name}");
                let n = b.dim();
                assert!(t.mul_basis(n, n).is_empty());
            }
        }
    }
}
