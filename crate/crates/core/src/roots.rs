//! Simple graphs, Dynkin classification, sink-source orientations and
//! simply-laced root systems.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("loop at vertex {0:?}")]
    Loop(String),
    #[error("multiple edge between {0:?} and {1:?}")]
    MultipleEdge(String, String),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error("malformed graph JSON: {0}")]
    Json(String),
    #[error("{0} is not a finite Dynkin diagram")]
    NotFiniteType(String),
}

/// Finite simple graph with labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

fn default_label(i: usize, n: usize) -> String {
    if n <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{}", i + 1)
    }
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if labels.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::UnknownVertex(v.to_string()));
                }
            }
            if a == b {
                return Err(GraphError::Loop(labels[a].clone()));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(GraphError::MultipleEdge(labels[a].clone(), labels[b].clone()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &set {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(Graph {
            labels,
            edges: set,
            adj,
        })
    }

    /// Graph on `n` vertices with default labels `a, b, c, ...`.
    pub fn with_default_labels(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new((0..n).map(|i| default_label(i, n)).collect(), edges)
    }

    pub fn chain(n: usize) -> Result<Self, GraphError> {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::with_default_labels(n, &e)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::UnknownName(format!("cycle:{n}")));
        }
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        Self::with_default_labels(n, &e)
    }

    /// Chain `0 - 1 - ... - (len-1)` with one extra vertex attached to `at`.
    fn chain_with_branch(len: usize, at: usize) -> Result<Self, GraphError> {
        let mut e: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
        e.push((at, len));
        Self::with_default_labels(len + 1, &e)
    }

    /// Built-in graphs: `A1..A8`, `D4..D8`, `E6..E8`, `affA2`, `affD4`,
    /// `affE6..affE8`, `chain:<n>`, `cycle:<n>`.
    pub fn named(name: &str) -> Result<Self, GraphError> {
        let unknown = || GraphError::UnknownName(name.to_string());
        if let Some(n) = name.strip_prefix("chain:") {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            return Self::chain(n);
        }
        if let Some(n) = name.strip_prefix("cycle:") {
            return Self::cycle(n.parse().map_err(|_| unknown())?);
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match name {
            "affA2" => Self::cycle(3),
            "affD4" => Self::with_default_labels(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            "affE6" => Self::with_default_labels(
                7,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
            ),
            "affE7" => Self::chain_with_branch(7, 3),
            "affE8" => Self::chain_with_branch(8, 2),
            "E6" => Self::chain_with_branch(5, 2),
            "E7" => Self::chain_with_branch(6, 2),
            "E8" => Self::chain_with_branch(7, 2),
            _ => {
                if let Some(n) = name.strip_prefix('A') {
                    let n = num(n)?;
                    if (1..=8).contains(&n) {
                        return Self::chain(n);
                    }
                } else if let Some(n) = name.strip_prefix('D') {
                    let n = num(n)?;
                    if (4..=8).contains(&n) {
                        return Self::chain_with_branch(n - 1, n - 3);
                    }
                }
                Err(unknown())
            }
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self, GraphError> {
        let g: GraphJson = serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))?;
        let idx: BTreeMap<&str, usize> = g
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut edges = Vec::new();
        for (a, b) in &g.edges {
            let ia = *idx.get(a.as_str()).ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let ib = *idx.get(b.as_str()).ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            edges.push((ia, ib));
        }
        Self::new(g.vertices.clone(), &edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        })
        .expect("serializable")
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize, GraphError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.num_vertices()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.num_vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.num_edges() + 1 == self.num_vertices()
    }

    /// Proper 2-colouring of a connected graph, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.num_vertices();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].expect("coloured");
                for &w in &self.adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(d) if d == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.expect("coloured")).collect())
    }

    /// Lie-theoretic Cartan matrix: 2 on the diagonal, -1 on edges.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
            for &j in &self.adj[i] {
                row[j] = -1;
            }
        }
        m
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0i64; n]; n];
        for (a, b) in self.edges() {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// Whether some relabelling of vertices maps `self` onto `other`.
    pub fn is_isomorphic_to(&self, other: &Graph) -> bool {
        let n = self.num_vertices();
        if n != other.num_vertices() || self.num_edges() != other.num_edges() {
            return false;
        }
        let mut d1: Vec<_> = (0..n).map(|v| self.degree(v)).collect();
        let mut d2: Vec<_> = (0..n).map(|v| other.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == map.len() {
            return true;
        }
        for w in 0..map.len() {
            if used[w] || self.degree(v) != other.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| self.adjacent(u, v) == other.adjacent(map[u], w));
            if ok {
                map[v] = w;
                used[w] = true;
                if self.extend_iso(other, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinKind {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinClass {
    /// Finite type `X_n`.
    Finite(DynkinKind, usize),
    /// Affine type with `n + 1` vertices, written `affX_n`.
    Affine(DynkinKind, usize),
    Other,
}

impl DynkinClass {
    pub fn is_finite(&self) -> bool {
        matches!(self, DynkinClass::Finite(..))
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, DynkinClass::Affine(..))
    }

    /// Coxeter number of a finite type.
    pub fn coxeter_number(&self) -> Option<usize> {
        match *self {
            DynkinClass::Finite(DynkinKind::A, n) => Some(n + 1),
            DynkinClass::Finite(DynkinKind::D, n) => Some(2 * n - 2),
            DynkinClass::Finite(DynkinKind::E, 6) => Some(12),
            DynkinClass::Finite(DynkinKind::E, 7) => Some(18),
            DynkinClass::Finite(DynkinKind::E, 8) => Some(30),
            _ => None,
        }
    }
}

impl fmt::Display for DynkinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinClass::Finite(k, n) => write!(f, "{k:?}{n}"),
            DynkinClass::Affine(k, n) => write!(f, "aff{k:?}{n}"),
            DynkinClass::Other => write!(f, "other"),
        }
    }
}

/// Length of the arm leaving `center` through `first`, in a tree.
fn arm_length(g: &Graph, center: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    while g.degree(cur) == 2 {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

pub fn classify(g: &Graph) -> Result<DynkinClass, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.num_vertices();
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = degs.iter().copied().max().unwrap_or(0);
    use DynkinClass::*;
    use DynkinKind::*;
    if g.num_edges() == n {
        return Ok(if degs.iter().all(|&d| d == 2) {
            Affine(A, n - 1)
        } else {
            Other
        });
    }
    if g.num_edges() + 1 != n {
        return Ok(Other);
    }
    if max_deg <= 2 {
        return Ok(Finite(A, n));
    }
    if max_deg == 4 {
        return Ok(if n == 5 { Affine(D, 4) } else { Other });
    }
    if max_deg > 4 {
        return Ok(Other);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| degs[v] == 3).collect();
    match branch.len() {
        1 => {
            let c = branch[0];
            let mut arms: Vec<usize> = g.neighbors(c).iter().map(|&w| arm_length(g, c, w)).collect();
            arms.sort_unstable();
            Ok(match (arms[0], arms[1], arms[2]) {
                (1, 1, k) => Finite(D, k + 3),
                (1, 2, 2) => Finite(E, 6),
                (1, 2, 3) => Finite(E, 7),
                (1, 2, 4) => Finite(E, 8),
                (2, 2, 2) => Affine(E, 6),
                (1, 3, 3) => Affine(E, 7),
                (1, 2, 5) => Affine(E, 8),
                _ => Other,
            })
        }
        2 => {
            let forked = branch
                .iter()
                .all(|&c| g.neighbors(c).iter().filter(|&&w| g.degree(w) == 1).count() == 2);
            Ok(if forked { Affine(D, n - 1) } else { Other })
        }
        _ => Ok(Other),
    }
}

/// An orientation of every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub graph: Graph,
    /// `(tail, head)` for each edge, in the graph's edge order.
    pub arrows: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(t, _)| t != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, h)| h != v)
    }

    pub fn is_sink_source(&self) -> bool {
        (0..self.graph.num_vertices()).all(|v| self.is_sink(v) || self.is_source(v))
    }
}

/// The two orientations in which every vertex is a sink or a source; empty for
/// non-bipartite graphs.
pub fn sink_source_orientations(g: &Graph) -> Vec<Orientation> {
    let Some(colour) = g.bipartition() else {
        return Vec::new();
    };
    [false, true]
        .into_iter()
        .map(|src| Orientation {
            graph: g.clone(),
            arrows: g
                .edges()
                .map(|(a, b)| if colour[a] == src { (a, b) } else { (b, a) })
                .collect(),
        })
        .collect()
}

/// Every orientation of the edges of `g` (2^|E| of them).
pub fn all_orientations(g: &Graph) -> Vec<Orientation> {
    let edges: Vec<_> = g.edges().collect();
    (0u64..1 << edges.len())
        .map(|mask| Orientation {
            graph: g.clone(),
            arrows: edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
                .collect(),
        })
        .collect()
}

/// Root as integer coordinates in the basis of simple roots.
pub type Root = Vec<i64>;

/// Root system of a finite simply-laced Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub graph: Graph,
    pub pairing: Vec<Vec<i64>>,
    /// Sorted by height, then lexicographically; negatives come first.
    pub roots: Vec<Root>,
    index: BTreeMap<Root, usize>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.pairing.len()
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.pairing[i][j] * yj;
            }
        }
        s
    }

    pub fn simple(&self, a: usize) -> Root {
        let mut r = vec![0; self.rank()];
        r[a] = 1;
        r
    }

    /// `s_a(mu) = mu - (mu, alpha_a) alpha_a`.
    pub fn reflect(&self, a: usize, mu: &[i64]) -> Root {
        let mut r = mu.to_vec();
        r[a] -= self.pair(mu, &self.simple(a));
        r
    }

    pub fn index_of(&self, mu: &[i64]) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn is_root(&self, mu: &[i64]) -> bool {
        self.index.contains_key(mu)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.iter().any(|&c| c > 0))
    }
}

pub fn height(mu: &[i64]) -> i64 {
    mu.iter().sum()
}

/// Closure of the simple roots under all simple reflections.
pub fn generate_roots(g: &Graph) -> Result<RootSystem, GraphError> {
    let class = classify(g)?;
    if !class.is_finite() {
        return Err(GraphError::NotFiniteType(class.to_string()));
    }
    let mut rs = RootSystem {
        graph: g.clone(),
        pairing: g.cartan_matrix(),
        roots: Vec::new(),
        index: BTreeMap::new(),
    };
    let n = g.num_vertices();
    let mut found: BTreeSet<Root> = BTreeSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for a in 0..n {
        let s = rs.simple(a);
        found.insert(s.clone());
        queue.push_back(s);
    }
    while let Some(mu) = queue.pop_front() {
        for a in 0..n {
            let r = rs.reflect(a, &mu);
            if found.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Root> = found.into_iter().collect();
    roots.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)));
    rs.index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    rs.roots = roots;
    Ok(rs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(name: &str) -> String {
        classify(&Graph::named(name).unwrap()).unwrap().to_string()
    }

    #[test]
    fn classification_of_catalogue() {
        for n in 1..=8 {
            assert_eq!(cls(&format!("A{n}")), format!("A{n}"));
        }
        for n in 4..=8 {
            assert_eq!(cls(&format!("D{n}")), format!("D{n}"));
        }
        for n in 6..=8 {
            assert_eq!(cls(&format!("E{n}")), format!("E{n}"));
            assert_eq!(cls(&format!("affE{n}")), format!("affE{n}"));
        }
        assert_eq!(cls("affA2"), "affA2");
        assert_eq!(cls("affD4"), "affD4");
        assert_eq!(cls("cycle:5"), "affA4");
        assert_eq!(cls("chain:3"), "A3");
        let d5 = Graph::with_default_labels(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(classify(&d5).unwrap().to_string(), "affD5");
        let star5 = Graph::with_default_labels(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(classify(&star5).unwrap(), DynkinClass::Other);
    }

    #[test]
    fn invalid_graphs() {
        let l = vec!["a".to_string(), "b".to_string()];
        assert!(matches!(Graph::new(l.clone(), &[(0, 0)]), Err(GraphError::Loop(_))));
        assert!(matches!(
            Graph::new(l.clone(), &[(0, 1), (1, 0)]),
            Err(GraphError::MultipleEdge(..))
        ));
        let g = Graph::new(l, &[]).unwrap();
        assert_eq!(classify(&g), Err(GraphError::Disconnected));
        assert!(Graph::named("A9").is_err());
        assert!(Graph::named("Q").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let g = Graph::named("D4").unwrap();
        let s = g.to_json().to_string();
        assert_eq!(Graph::from_json_str(&s).unwrap(), g);
        let bad = r#"{"vertices":["a"],"edges":[["a","z"]]}"#;
        assert!(matches!(Graph::from_json_str(bad), Err(GraphError::UnknownVertex(_))));
    }

    #[test]
    fn root_counts() {
        let a1 = generate_roots(&Graph::named("A1").unwrap()).unwrap();
        assert_eq!(a1.roots, vec![vec![-1], vec![1]]);
        let a2 = generate_roots(&Graph::named("A2").unwrap()).unwrap();
        assert_eq!(a2.roots.len(), 6);
        assert!(generate_roots(&Graph::named("affA2").unwrap()).is_err());
    }

    #[test]
    fn orientations() {
        assert_eq!(sink_source_orientations(&Graph::named("A2").unwrap()).len(), 2);
        assert!(sink_source_orientations(&Graph::named("affA2").unwrap()).is_empty());
        let o = sink_source_orientations(&Graph::named("A4").unwrap());
        assert_eq!(o.len(), 2);
        for or in &o {
            assert!(or.is_sink_source());
        }
        assert_ne!(o[0], o[1]);
        assert_eq!(all_orientations(&Graph::named("A3").unwrap()).len(), 4);
    }

    #[test]
    fn isomorphism_of_graphs() {
        let g = Graph::with_default_labels(4, &[(2, 0), (2, 1), (2, 3)]).unwrap();
        assert!(g.is_isomorphic_to(&Graph::named("D4").unwrap()));
        assert!(!g.is_isomorphic_to(&Graph::named("A4").unwrap()));
    }
}
