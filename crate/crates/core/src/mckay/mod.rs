//! Finite subgroups of SU(2), their characters and McKay graphs.

mod cyclotomic;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};

use crate::linalg::Matrix;
use crate::roots::{classify, DynkinClass, Graph, GraphError};
use crate::scalar::Rat;
use crate::zigzag::{cartan_inverse, quadratic_dual_dims, quantum_cartan};
use crate::Laurent;

type Cyc = Cyclotomic;

#[derive(Debug, Error)]
pub enum McKayError {
    #[error("unknown group {0:?}; expected cyclic:<n>, binary-dihedral:<n>, 2T, 2O or 2I")]
    UnknownGroup(String),
    #[error("character table of {group} fails validation: {why}")]
    BadTable { group: String, why: String },
    #[error("{0} is not binary (does not contain -I)")]
    NotBinary(String),
    #[error("McKay graph of {group} is not an affine Dynkin diagram: {why}")]
    NoAffineMatch { group: String, why: String },
    #[error("multiplicity is not a nonnegative integer: {0}")]
    NotIntegral(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Conjugacy class: size and the exponent `k` with eigenvalues
/// `zeta_m^k, zeta_m^-k` in the defining representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub name: String,
    pub size: u64,
    pub k: i64,
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub name: String,
    pub chars: Vec<Cyc>,
}

impl Irrep {
    pub fn dim(&self) -> i64 {
        let d = self.chars[0].to_rat().expect("degree is rational");
        d.to_integer().try_into().expect("small degree")
    }
}

/// Finite subgroup of SU(2) with its character table over `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct FiniteSubgroupSU2 {
    pub name: String,
    pub order: u64,
    pub m: u32,
    pub classes: Vec<ConjClass>,
    /// Row 0 is the trivial representation.
    pub irreps: Vec<Irrep>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn class(name: impl Into<String>, size: u64, k: i64) -> ConjClass {
    ConjClass { name: name.into(), size, k }
}

fn ints(v: &[i64]) -> Vec<Cyc> {
    v.iter().map(|&x| Cyc::from_int(x)).collect()
}

fn cyclic(n: u64) -> FiniteSubgroupSU2 {
    let m = n as u32;
    let classes = (0..n).map(|j| class(format!("g^{j}"), 1, j as i64)).collect();
    let irreps = (0..n)
        .map(|a| Irrep {
            name: format!("chi{a}"),
            chars: (0..n).map(|j| Cyc::zeta_pow(m, (a * j) as i64)).collect(),
        })
        .collect();
    FiniteSubgroupSU2 { name: format!("cyclic:{n}"), order: n, m, classes, irreps }
}

/// Binary dihedral group of order `4n`, generated by
/// `a = diag(zeta_2n, zeta_2n^-1)` and `b` with `b^2 = a^n = -1`.
fn binary_dihedral(n: u64) -> FiniteSubgroupSU2 {
    let m = (2 * n * 4 / gcd(2 * n, 4)) as u32;
    let step = m as i64 / (2 * n as i64);
    let quarter = m as i64 / 4;
    // classes: 1, -1, {a^j, a^-j} for 0 < j < n, b, ba
    let mut classes = vec![class("1", 1, 0), class("-1", 1, n as i64 * step)];
    for j in 1..n {
        classes.push(class(format!("a^{j}"), 2, j as i64 * step));
    }
    classes.push(class("b", n, quarter));
    classes.push(class("ba", n, quarter));
    // one-dimensional: a -> alpha, b -> beta with beta^2 = alpha^n
    let mut irreps = Vec::new();
    let mut linear: Vec<(i64, Cyc)> = vec![(1, Cyc::from_int(1)), (1, Cyc::from_int(-1))];
    if n.is_multiple_of(2) {
        linear.push((-1, Cyc::from_int(1)));
        linear.push((-1, Cyc::from_int(-1)));
    } else {
        linear.push((-1, Cyc::zeta_pow(m, quarter)));
        linear.push((-1, Cyc::zeta_pow(m, -quarter)));
    }
    for (idx, (alpha, beta)) in linear.into_iter().enumerate() {
        let a = Cyc::from_int(alpha);
        let mut chars = vec![Cyc::from_int(1), Cyc::from_int(alpha.pow(n as u32))];
        for j in 1..n {
            chars.push(Cyc::from_int(alpha.pow(j as u32)));
        }
        chars.push(beta.clone());
        chars.push(beta * a);
        irreps.push(Irrep { name: format!("1_{idx}"), chars });
    }
    for h in 1..n {
        let sign = if h % 2 == 0 { 1 } else { -1 };
        let mut chars = vec![Cyc::from_int(2), Cyc::from_int(2 * sign)];
        for j in 1..n {
            chars.push(Cyc::two_cos(m, (h * j) as i64 * step));
        }
        chars.push(Cyc::zero());
        chars.push(Cyc::zero());
        irreps.push(Irrep { name: format!("2_{h}"), chars });
    }
    FiniteSubgroupSU2 { name: format!("binary-dihedral:{n}"), order: 4 * n, m, classes, irreps }
}

fn binary_tetrahedral() -> FiniteSubgroupSU2 {
    let m = 12;
    let w = Cyc::zeta_pow(m, 4);
    let w2 = w.conj();
    let one = Cyc::from_int(1);
    let lin = vec![one.clone(), one.clone(), one.clone(), w.clone(), w2.clone(), w.clone(), w2.clone()];
    let lin_bar: Vec<Cyc> = lin.iter().map(Cyc::conj).collect();
    let two = ints(&[2, -2, 0, -1, -1, 1, 1]);
    let times = |a: &[Cyc], b: &[Cyc]| a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()).collect::<Vec<_>>();
    let irreps = vec![
        Irrep { name: "1".into(), chars: ints(&[1; 7]) },
        Irrep { name: "1'".into(), chars: lin.clone() },
        Irrep { name: "1''".into(), chars: lin_bar.clone() },
        Irrep { name: "2".into(), chars: two.clone() },
        Irrep { name: "2'".into(), chars: times(&two, &lin) },
        Irrep { name: "2''".into(), chars: times(&two, &lin_bar) },
        Irrep { name: "3".into(), chars: ints(&[3, 3, -1, 0, 0, 0, 0]) },
    ];
    let classes = vec![
        class("1", 1, 0),
        class("-1", 1, 6),
        class("4a", 6, 3),
        class("3a", 4, 4),
        class("3b", 4, 4),
        class("6a", 4, 2),
        class("6b", 4, 2),
    ];
    FiniteSubgroupSU2 { name: "2T".into(), order: 24, m, classes, irreps }
}

fn binary_octahedral() -> FiniteSubgroupSU2 {
    let m = 24;
    let r2 = Cyc::two_cos(m, 3);
    let i = |x: i64| Cyc::from_int(x);
    let irreps = vec![
        Irrep { name: "1".into(), chars: ints(&[1; 8]) },
        Irrep { name: "1'".into(), chars: ints(&[1, 1, 1, -1, -1, 1, 1, -1]) },
        Irrep { name: "2'".into(), chars: ints(&[2, 2, 2, 0, 0, -1, -1, 0]) },
        Irrep { name: "3".into(), chars: ints(&[3, 3, -1, 1, 1, 0, 0, -1]) },
        Irrep { name: "3'".into(), chars: ints(&[3, 3, -1, -1, -1, 0, 0, 1]) },
        Irrep {
            name: "2".into(),
            chars: vec![i(2), i(-2), i(0), r2.clone(), -r2.clone(), i(-1), i(1), i(0)],
        },
        Irrep {
            name: "2''".into(),
            chars: vec![i(2), i(-2), i(0), -r2.clone(), r2, i(-1), i(1), i(0)],
        },
        Irrep { name: "4".into(), chars: ints(&[4, -4, 0, 0, 0, 1, -1, 0]) },
    ];
    let classes = vec![
        class("1", 1, 0),
        class("-1", 1, 12),
        class("4a", 6, 6),
        class("8a", 6, 3),
        class("8b", 6, 9),
        class("3a", 8, 8),
        class("6a", 8, 4),
        class("4b", 12, 6),
    ];
    FiniteSubgroupSU2 { name: "2O".into(), order: 48, m, classes, irreps }
}

fn binary_icosahedral() -> FiniteSubgroupSU2 {
    let m = 60;
    let phi = Cyc::from_int(1) + Cyc::two_cos(m, 12);
    let i = |x: i64| Cyc::from_int(x);
    let p = || phi.clone();
    let pm1 = || phi.clone() - i(1);
    let one_mp = || i(1) - phi.clone();
    let irreps = vec![
        Irrep { name: "1".into(), chars: ints(&[1; 9]) },
        Irrep { name: "2".into(), chars: vec![i(2), i(-2), i(0), i(-1), i(1), p(), pm1(), -p(), one_mp()] },
        Irrep { name: "2'".into(), chars: vec![i(2), i(-2), i(0), i(-1), i(1), one_mp(), -p(), pm1(), p()] },
        Irrep { name: "3".into(), chars: vec![i(3), i(3), i(-1), i(0), i(0), p(), one_mp(), p(), one_mp()] },
        Irrep { name: "3'".into(), chars: vec![i(3), i(3), i(-1), i(0), i(0), one_mp(), p(), one_mp(), p()] },
        Irrep { name: "4".into(), chars: ints(&[4, -4, 0, 1, -1, 1, -1, -1, 1]) },
        Irrep { name: "4'".into(), chars: ints(&[4, 4, 0, 1, 1, -1, -1, -1, -1]) },
        Irrep { name: "5".into(), chars: ints(&[5, 5, 1, -1, -1, 0, 0, 0, 0]) },
        Irrep { name: "6".into(), chars: ints(&[6, -6, 0, 0, 0, -1, 1, 1, -1]) },
    ];
    let classes = vec![
        class("1", 1, 0),
        class("-1", 1, 30),
        class("4a", 30, 15),
        class("3a", 20, 20),
        class("6a", 20, 10),
        class("10a", 12, 6),
        class("5a", 12, 12),
        class("5b", 12, 24),
        class("10b", 12, 18),
    ];
    FiniteSubgroupSU2 { name: "2I".into(), order: 120, m, classes, irreps }
}

/// `cyclic:<n>`, `binary-dihedral:<n>` (`n >= 2`; `n = 2` is `Q8`), `2T`,
/// `2O`, `2I`. The table is validated before it is returned.
pub fn build_group(name: &str) -> Result<FiniteSubgroupSU2, McKayError> {
    let unknown = || McKayError::UnknownGroup(name.to_string());
    let param = |p: &str| -> Result<u64, McKayError> { p.parse::<u64>().map_err(|_| unknown()) };
    let g = if let Some(n) = name.strip_prefix("cyclic:") {
        let n = param(n)?;
        if n == 0 || n > 360 {
            return Err(unknown());
        }
        cyclic(n)
    } else if let Some(n) = name.strip_prefix("binary-dihedral:") {
        let n = param(n)?;
        if !(2..=90).contains(&n) {
            return Err(unknown());
        }
        binary_dihedral(n)
    } else {
        match name {
            "Q8" => binary_dihedral(2),
            "2T" => binary_tetrahedral(),
            "2O" => binary_octahedral(),
            "2I" => binary_icosahedral(),
            _ => return Err(unknown()),
        }
    };
    g.validate()?;
    Ok(g)
}

impl FiniteSubgroupSU2 {
    fn fail(&self, why: String) -> McKayError {
        McKayError::BadTable { group: self.name.clone(), why }
    }

    /// Contains `-I`: some class has eigenvalue `-1`.
    pub fn is_binary(&self) -> bool {
        self.classes.iter().any(|c| 2 * c.k.rem_euclid(self.m as i64) == self.m as i64)
    }

    pub fn trivial(&self) -> usize {
        0
    }

    /// Character of the defining representation.
    pub fn defining_character(&self) -> Vec<Cyc> {
        self.classes.iter().map(|c| Cyc::two_cos(self.m, c.k)).collect()
    }

    /// Character of `S^n C^2`: `sum_j lambda^(n - 2j)`.
    pub fn sym_power_character(&self, n: u32) -> Vec<Cyc> {
        self.classes
            .iter()
            .map(|c| {
                (0..=n as i64).fold(Cyc::zero(), |acc, j| acc + Cyc::zeta_pow(self.m, c.k * (n as i64 - 2 * j)))
            })
            .collect()
    }

    /// Character of `Lambda^2 C^2`: `(chi(g)^2 - chi(g^2)) / 2`.
    pub fn exterior_square_character(&self) -> Vec<Cyc> {
        let half = Cyc::rational(Rat::new(1.into(), 2.into()));
        self.classes
            .iter()
            .map(|c| {
                let x = Cyc::two_cos(self.m, c.k);
                (x.clone() * x - Cyc::two_cos(self.m, 2 * c.k)) * half.clone()
            })
            .collect()
    }

    /// `(1/|G|) sum_g chi(g) conj(psi(g))`.
    pub fn inner(&self, chi: &[Cyc], psi: &[Cyc]) -> Cyc {
        let mut acc = Cyc::zero();
        for ((c, x), y) in self.classes.iter().zip(chi).zip(psi) {
            acc = acc + Cyc::from_int(c.size as i64) * x.clone() * y.conj();
        }
        acc * Cyc::rational(Rat::new(1.into(), (self.order as i64).into()))
    }

    /// Multiplicity of irrep `a` in a character, checked integral and nonnegative.
    pub fn multiplicity(&self, chi: &[Cyc], a: usize) -> Result<u64, McKayError> {
        let v = self.inner(chi, &self.irreps[a].chars);
        match v.to_rat() {
            Some(r) if r.is_integer() && r >= Rat::zero() => Ok(r.to_integer().try_into().expect("small")),
            _ => Err(McKayError::NotIntegral(format!("{v}"))),
        }
    }

    fn product(a: &[Cyc], b: &[Cyc]) -> Vec<Cyc> {
        a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()).collect()
    }

    /// Row and column orthogonality, `sum dim^2 = |G|`, class sizes, and
    /// that the defining character is a character.
    pub fn validate(&self) -> Result<(), McKayError> {
        let n = self.classes.len();
        if self.irreps.len() != n || self.irreps.iter().any(|r| r.chars.len() != n) {
            return Err(self.fail("table is not square".into()));
        }
        if self.classes.iter().map(|c| c.size).sum::<u64>() != self.order {
            return Err(self.fail("class sizes do not add up to the order".into()));
        }
        if self.classes[0].k != 0 || self.irreps[0].chars.iter().any(|x| !x.is_one()) {
            return Err(self.fail("first class and first row must be trivial".into()));
        }
        let dims: i64 = self.irreps.iter().map(|r| r.dim() * r.dim()).sum();
        if dims != self.order as i64 {
            return Err(self.fail(format!("sum of squared degrees is {dims}")));
        }
        // X D X^* = |G| I with D = diag(class sizes), over Q(zeta_m)
        let x = Matrix::from_rows(self.irreps.iter().map(|r| r.chars.clone()).collect());
        let d = Matrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { Cyc::from_int(self.classes[i].size as i64) } else { Cyc::zero() }).collect())
                .collect(),
        );
        let xstar = Matrix::from_rows(
            (0..n).map(|j| (0..n).map(|i| x.get(i, j).conj()).collect()).collect(),
        );
        let rows = &(&x * &d) * &xstar;
        if rows != Matrix::scalar(n, Cyc::from_int(self.order as i64)) {
            return Err(self.fail("row orthogonality fails".into()));
        }
        // X^* X = |G| D^-1
        let cols = &xstar * &x;
        for i in 0..n {
            for j in 0..n {
                let want = if i == j {
                    Cyc::rational(Rat::new((self.order as i64).into(), (self.classes[i].size as i64).into()))
                } else {
                    Cyc::zero()
                };
                if cols.get(i, j) != &want {
                    return Err(self.fail(format!("column orthogonality fails at ({i}, {j})")));
                }
            }
        }
        let def = self.defining_character();
        if def[0] != Cyc::from_int(2) {
            return Err(self.fail("defining character has degree != 2".into()));
        }
        for a in 0..n {
            self.multiplicity(&def, a).map_err(|e| self.fail(format!("defining character: {e}")))?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.name,
            "order": self.order,
            "zeta_order": self.m,
            "binary": self.is_binary(),
            "classes": self.classes.iter().map(|c| json!({"name": c.name, "size": c.size, "eigenvalue_exponent": c.k})).collect::<Vec<_>>(),
            "irreps": self.irreps.iter().map(|r| json!({
                "name": r.name,
                "dim": r.dim(),
                "character": r.chars.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// McKay graph: vertices are irreps, `a ~ b` with the multiplicity of `V_b`
/// in `C^2 (x) V_a`, matched against the affine catalogue.
#[derive(Clone, Debug)]
pub struct McKayGraph {
    pub graph: Graph,
    pub class: DynkinClass,
}

pub fn mckay_graph(g: &FiniteSubgroupSU2) -> Result<McKayGraph, McKayError> {
    let n = g.irreps.len();
    let def = g.defining_character();
    let no_match = |why: String| McKayError::NoAffineMatch { group: g.name.clone(), why };
    let mut edges = Vec::new();
    for a in 0..n {
        let t = FiniteSubgroupSU2::product(&def, &g.irreps[a].chars);
        for b in 0..n {
            let k = g.multiplicity(&t, b)?;
            match (k, a.cmp(&b)) {
                (0, _) => {}
                (_, std::cmp::Ordering::Equal) => {
                    return Err(no_match(format!("loop at {} of multiplicity {k}", g.irreps[a].name)))
                }
                (1, std::cmp::Ordering::Less) => edges.push((a, b)),
                (1, _) => {}
                _ => {
                    return Err(no_match(format!(
                        "{k} edges between {} and {}",
                        g.irreps[a].name, g.irreps[b].name
                    )))
                }
            }
        }
    }
    let graph = Graph::new(g.irreps.iter().map(|r| r.name.clone()).collect(), &edges)?;
    let class = classify(&graph)?;
    if !class.is_affine() {
        return Err(no_match(format!("classified as {class}")));
    }
    Ok(McKayGraph { graph, class })
}

fn require_binary(g: &FiniteSubgroupSU2) -> Result<(), McKayError> {
    if g.is_binary() {
        Ok(())
    } else {
        Err(McKayError::NotBinary(g.name.clone()))
    }
}

pub fn sym_power_multiplicity(g: &FiniteSubgroupSU2, a: usize, n: u32) -> Result<u64, McKayError> {
    g.multiplicity(&g.sym_power_character(n), a)
}

/// One row of the sym-power table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPowerRow {
    pub irrep: String,
    pub n: u32,
    pub multiplicity: u64,
    /// `(-1)^n` times the `q^n` coefficient of the `(a, t)` entry of the
    /// inverse quantum Cartan matrix of the McKay graph.
    pub cartan_value: Option<i64>,
    /// `dim e_a A^!_n e_t` for the quadratic dual, when requested.
    pub dual_value: Option<i64>,
}

impl SymPowerRow {
    pub fn matches(&self) -> bool {
        self.cartan_value.is_none_or(|c| c == self.multiplicity as i64)
            && self.dual_value.is_none_or(|d| d == self.multiplicity as i64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "irrep": self.irrep,
            "n": self.n,
            "multiplicity": self.multiplicity,
            "cartan_value": self.cartan_value,
            "dual_value": self.dual_value,
            "match": self.matches(),
        })
    }
}

fn rat_to_i64(r: &Rat) -> i64 {
    crate::scalar::rat_to_i64(r).expect("integral series coefficient")
}

/// `(-1)^n [q^n] (C^-1)_(a,t)` for `n <= order`.
pub fn inverse_cartan_multiplicities(g: &FiniteSubgroupSU2, order: usize) -> Result<Vec<Vec<i64>>, McKayError> {
    require_binary(g)?;
    let mg = mckay_graph(g)?;
    let inv = cartan_inverse(&mg.graph, order)?;
    let t = g.trivial();
    Ok((0..g.irreps.len())
        .map(|a| {
            (0..=order)
                .map(|n| {
                    let c = rat_to_i64(&inv.entries[a][t].coeff(n));
                    if n % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect()
        })
        .collect())
}

pub fn inverse_cartan_multiplicity(g: &FiniteSubgroupSU2, a: usize, n: u32) -> Result<i64, McKayError> {
    Ok(inverse_cartan_multiplicities(g, n as usize)?[a][n as usize])
}

/// Sym-power multiplicities for `n <= nmax`, optionally with the inverse
/// Cartan values and the quadratic dual dimensions up to `dual_max`.
pub fn sym_power_table(
    g: &FiniteSubgroupSU2,
    nmax: u32,
    with_cartan: bool,
    dual_max: Option<u32>,
) -> Result<Vec<SymPowerRow>, McKayError> {
    let cartan = if with_cartan { Some(inverse_cartan_multiplicities(g, nmax as usize)?) } else { None };
    let dual = match dual_max {
        Some(d) => {
            require_binary(g)?;
            let mg = mckay_graph(g)?;
            Some((d, quadratic_dual_dims(&mg.graph, d as usize)))
        }
        None => None,
    };
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let chi = g.sym_power_character(n);
        for (a, r) in g.irreps.iter().enumerate() {
            rows.push(SymPowerRow {
                irrep: r.name.clone(),
                n,
                multiplicity: g.multiplicity(&chi, a)?,
                cartan_value: cartan.as_ref().map(|c| c[a][n as usize]),
                dual_value: dual
                    .as_ref()
                    .filter(|(d, _)| n <= *d)
                    .map(|(_, s)| rat_to_i64(&s[a][g.trivial()].coeff(n as usize))),
            });
        }
    }
    Ok(rows)
}

/// Graded Cartan matrix of `Lambda(C^2) # G` from characters:
/// entry `(a, b) = sum_i q^i <Lambda^i C^2 (x) V_b, V_a>`.
pub fn cross_product_cartan(g: &FiniteSubgroupSU2) -> Result<Vec<Vec<Laurent>>, McKayError> {
    require_binary(g)?;
    let n = g.irreps.len();
    let ext = [g.irreps[g.trivial()].chars.clone(), g.defining_character(), g.exterior_square_character()];
    let mut out = vec![vec![Laurent::zero(); n]; n];
    for (i, lam) in ext.iter().enumerate() {
        for b in 0..n {
            let t = FiniteSubgroupSU2::product(lam, &g.irreps[b].chars);
            for (a, row) in out.iter_mut().enumerate() {
                let k = g.multiplicity(&t, a)?;
                if k > 0 {
                    row[b] = &row[b] + &Laurent::monomial(i as i32, Rat::from_integer((k as i64).into()));
                }
            }
        }
    }
    Ok(out)
}

/// Whether the cross-product Cartan matrix equals the quantum Cartan matrix
/// of the McKay graph.
pub fn cross_product_matches(g: &FiniteSubgroupSU2) -> Result<bool, McKayError> {
    let mg = mckay_graph(g)?;
    Ok(cross_product_cartan(g)? == quantum_cartan(&mg.graph))
}

#[cfg(test)]
mod tests;
