//! Graded bimodules over a pair of quiver algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::ModError;
use crate::linalg::{Matrix, SparseEchelon};
use crate::scalar::{fmt_rat, Rat};
use crate::zigzag::QuiverAlgebra;

pub type Alg = Arc<QuiverAlgebra>;

/// Component index: left vertex, right vertex, degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub l: usize,
    pub r: usize,
    pub deg: i32,
}

impl Slot {
    pub fn new(l: usize, r: usize, deg: i32) -> Self {
        Slot { l, r, deg }
    }

    pub fn shifted(self, k: i32) -> Self {
        Slot {
            deg: self.deg + k,
            ..self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A generator of one of the two algebras, acting on the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActGen {
    pub side: Side,
    pub elem: usize,
    pub src: usize,
    pub tgt: usize,
    pub deg: i32,
}

impl ActGen {
    /// Slot reached from `s`, if the generator can act there.
    pub fn target(&self, s: Slot) -> Option<Slot> {
        match self.side {
            Side::Left if s.l == self.tgt => Some(Slot::new(self.src, s.r, s.deg + self.deg)),
            Side::Right if s.r == self.src => Some(Slot::new(s.l, self.tgt, s.deg + self.deg)),
            _ => None,
        }
    }
}

/// Block operator: source slot index -> (target slot index, matrix).
pub type Op = BTreeMap<usize, (usize, Matrix<Rat>)>;

/// A direct sum with its inclusions and projections.
pub type DirectSum = (GradedModule, Vec<Matrix<Rat>>, Vec<Matrix<Rat>>);

/// Graded `(L, R)`-bimodule. Left modules use the ground field on the right,
/// right modules on the left; vector spaces use it on both sides.
#[derive(Clone, Debug)]
pub struct GradedModule {
    left: Alg,
    right: Alg,
    slots: Vec<Slot>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
    index: BTreeMap<Slot, usize>,
    /// per action generator: block operator
    acts: Vec<Op>,
}

pub fn same_alg(a: &Alg, b: &Alg) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn ground() -> Alg {
    thread_local! {
        static K: Alg = Arc::new(QuiverAlgebra::ground());
    }
    K.with(Arc::clone)
}

pub fn actgens_of(left: &QuiverAlgebra, right: &QuiverAlgebra) -> Vec<ActGen> {
    let mk = |side, a: &QuiverAlgebra, g: usize| {
        let b = &a.basis()[g];
        ActGen {
            side,
            elem: g,
            src: b.src,
            tgt: b.tgt,
            deg: b.deg,
        }
    };
    left.generators()
        .iter()
        .map(|&g| mk(Side::Left, left, g))
        .chain(right.generators().iter().map(|&g| mk(Side::Right, right, g)))
        .collect()
}

impl GradedModule {
    /// Builds a module from component dimensions and generator actions,
    /// keyed by source slot. Actions are not checked against the algebra
    /// relations; call [`GradedModule::validate`] for untrusted input.
    pub fn new(
        left: Alg,
        right: Alg,
        dims: &BTreeMap<Slot, usize>,
        acts: Vec<BTreeMap<Slot, Matrix<Rat>>>,
    ) -> Result<Self, ModError> {
        let mut m = Self::skeleton(left, right, dims);
        let gens = m.actgens();
        if acts.len() != gens.len() {
            return Err(ModError::Malformed(format!(
                "expected {} generator actions, got {}",
                gens.len(),
                acts.len()
            )));
        }
        for (k, blocks) in acts.into_iter().enumerate() {
            for (s, mat) in blocks {
                let sd = m.dim_at(s);
                let t = gens[k].target(s);
                let td = t.map_or(0, |t| m.dim_at(t));
                if mat.cols() != sd || mat.rows() != td {
                    return Err(ModError::Malformed(format!(
                        "action block at {s:?} has shape {}x{}, expected {td}x{sd}",
                        mat.rows(),
                        mat.cols()
                    )));
                }
                if sd == 0 || td == 0 || mat.is_zero() {
                    continue;
                }
                let (si, ti) = (m.index[&s], m.index[&t.expect("nonzero target")]);
                m.acts[k].insert(si, (ti, mat));
            }
        }
        Ok(m)
    }

    fn skeleton(left: Alg, right: Alg, dims: &BTreeMap<Slot, usize>) -> Self {
        let mut slots: Vec<Slot> = dims.iter().filter(|(_, &d)| d > 0).map(|(s, _)| *s).collect();
        slots.sort_by_key(|s| (s.deg, s.l, s.r));
        let dimv: Vec<usize> = slots.iter().map(|s| dims[s]).collect();
        let mut offsets = Vec::with_capacity(slots.len());
        let mut total = 0;
        for d in &dimv {
            offsets.push(total);
            total += d;
        }
        let index = slots.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let ng = left.generators().len() + right.generators().len();
        GradedModule {
            left,
            right,
            slots,
            dims: dimv,
            offsets,
            total,
            index,
            acts: vec![BTreeMap::new(); ng],
        }
    }

    pub fn zero(left: Alg, right: Alg) -> Self {
        Self::skeleton(left, right, &BTreeMap::new())
    }

    pub fn left(&self) -> &Alg {
        &self.left
    }

    pub fn right(&self) -> &Alg {
        &self.right
    }

    pub fn actgens(&self) -> Vec<ActGen> {
        actgens_of(&self.left, &self.right)
    }

    pub fn same_algebras(&self, other: &GradedModule) -> bool {
        same_alg(&self.left, &other.left) && same_alg(&self.right, &other.right)
    }

    pub fn total_dim(&self) -> usize {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn slot_index(&self, s: Slot) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn dim_at(&self, s: Slot) -> usize {
        self.index.get(&s).map_or(0, |&i| self.dims[i])
    }

    pub fn slot_dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    pub fn op(&self, k: usize) -> &Op {
        &self.acts[k]
    }

    pub fn min_deg(&self) -> Option<i32> {
        self.slots.iter().map(|s| s.deg).min()
    }

    pub fn max_deg(&self) -> Option<i32> {
        self.slots.iter().map(|s| s.deg).max()
    }

    /// Dimensions keyed by slot.
    pub fn dim_table(&self) -> BTreeMap<Slot, usize> {
        self.slots.iter().copied().zip(self.dims.iter().copied()).collect()
    }

    /// Total dimension in each degree.
    pub fn graded_dims(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for (s, d) in self.slots.iter().zip(&self.dims) {
            *m.entry(s.deg).or_insert(0) += d;
        }
        m
    }

    /// `sum_n dim M_{l,r,n} q^n`.
    pub fn graded_dim_at(&self, l: usize, r: usize) -> crate::Laurent {
        crate::Laurent::from_terms(
            self.slots
                .iter()
                .zip(&self.dims)
                .filter(|(s, _)| s.l == l && s.r == r)
                .map(|(s, d)| (s.deg, Rat::from_integer((*d as i64).into()))),
        )
    }

    /// `M{k}`: every component moved up by `k` degrees.
    pub fn shift(&self, k: i32) -> Self {
        let mut m = self.clone();
        m.slots = self.slots.iter().map(|s| s.shifted(k)).collect();
        m.index = m.slots.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        m
    }

    /// Dense matrix of the action of a basis element of the left or right
    /// algebra.
    pub fn action_op(&self, side: Side, elem: usize) -> Op {
        let alg = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        let b = &alg.basis()[elem];
        if b.deg == 0 {
            // idempotent: projector onto matching slots
            let mut op = Op::new();
            for (i, s) in self.slots.iter().enumerate() {
                let hit = match side {
                    Side::Left => s.l == b.src,
                    Side::Right => s.r == b.src,
                };
                if hit {
                    op.insert(i, (i, Matrix::identity(self.dims[i])));
                }
            }
            return op;
        }
        let offset = match side {
            Side::Left => 0,
            Side::Right => self.left.generators().len(),
        };
        let mut acc = Op::new();
        for (word, c) in alg.words(elem) {
            let mut ops = word.iter().map(|&g| &self.acts[offset + g]);
            let first = ops.next().expect("nonempty word").clone();
            let prod = ops.fold(first, |a, b| match side {
                Side::Left => op_compose(&a, b),
                Side::Right => op_compose(b, &a),
            });
            op_add_scaled(&mut acc, &prod, c);
        }
        acc
    }

    pub fn op_to_dense(&self, op: &Op) -> Matrix<Rat> {
        let mut m = Matrix::zeros(self.total, self.total);
        for (&s, (t, mat)) in op {
            m.put_block(self.offsets[*t], self.offsets[s], mat);
        }
        m
    }

    pub fn actgen_dense(&self, k: usize) -> Matrix<Rat> {
        self.op_to_dense(&self.acts[k])
    }

    /// Checks every defining relation of both algebras and that the two
    /// actions commute.
    pub fn validate(&self) -> Result<(), ModError> {
        let gens = self.actgens();
        let nl = self.left.generators().len();
        for (k, g) in gens.iter().enumerate() {
            let alg = if g.side == Side::Left { &self.left } else { &self.right };
            let gop = &self.acts[k];
            for y in 0..alg.dim() {
                let yop = self.action_op(g.side, y);
                let (lhs, prod) = match g.side {
                    Side::Left => (op_compose(gop, &yop), alg.mul_basis(g.elem, y)),
                    Side::Right => (op_compose(gop, &yop), alg.mul_basis(y, g.elem)),
                };
                let mut rhs = Op::new();
                for (z, c) in prod {
                    op_add_scaled(&mut rhs, &self.action_op(g.side, *z), c);
                }
                if !op_eq(&lhs, &rhs) {
                    return Err(ModError::Relation(format!(
                        "{} {} {} fails",
                        if g.side == Side::Left { "left" } else { "right" },
                        alg.basis()[g.elem].label,
                        alg.basis()[y].label
                    )));
                }
            }
            if g.side == Side::Left {
                for (k2, _) in gens.iter().enumerate().skip(nl) {
                    let ab = op_compose(gop, &self.acts[k2]);
                    let ba = op_compose(&self.acts[k2], gop);
                    if !op_eq(&ab, &ba) {
                        return Err(ModError::Relation("left and right actions do not commute".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Direct sum with inclusions (`M -> sum`) and projections (`sum -> M`).
    pub fn direct_sum(parts: &[&GradedModule]) -> Result<DirectSum, ModError> {
        let first = parts.first().ok_or_else(|| ModError::Malformed("empty direct sum".into()))?;
        for p in parts {
            if !p.same_algebras(first) {
                return Err(ModError::AlgebraMismatch);
            }
        }
        let mut dims: BTreeMap<Slot, usize> = BTreeMap::new();
        // local offset of each part inside each slot
        let mut local: Vec<BTreeMap<Slot, usize>> = Vec::new();
        for p in parts {
            let mut lo = BTreeMap::new();
            for (s, d) in p.slots.iter().zip(&p.dims) {
                let e = dims.entry(*s).or_insert(0);
                lo.insert(*s, *e);
                *e += d;
            }
            local.push(lo);
        }
        let mut sum = Self::skeleton(first.left.clone(), first.right.clone(), &dims);
        let mut incl = Vec::new();
        let mut proj = Vec::new();
        for (pi, p) in parts.iter().enumerate() {
            let mut inc = Matrix::zeros(sum.total, p.total);
            for (i, s) in p.slots.iter().enumerate() {
                let si = sum.index[s];
                let base = sum.offsets[si] + local[pi][s];
                for j in 0..p.dims[i] {
                    inc.set(base + j, p.offsets[i] + j, Rat::one());
                }
            }
            proj.push(inc.transpose());
            incl.push(inc);
            for (k, op) in p.acts.iter().enumerate() {
                for (&s, (t, mat)) in op {
                    let (ss, ts) = (p.slots[s], p.slots[*t]);
                    let (si, ti) = (sum.index[&ss], sum.index[&ts]);
                    let entry = sum.acts[k]
                        .entry(si)
                        .or_insert_with(|| (ti, Matrix::zeros(sum.dims[ti], sum.dims[si])));
                    entry.1.put_block(local[pi][&ts], local[pi][&ss], mat);
                }
            }
        }
        Ok((sum, incl, proj))
    }

    /// Graded subspace spanned per slot by the given vectors (in slot coordinates),
    /// closed under the action. Returns per-slot echelon forms.
    pub fn submodule_closure(&self, gens: &[(Slot, Vec<Rat>)]) -> Vec<SparseEchelon<Rat>> {
        let mut ech: Vec<SparseEchelon<Rat>> = self.dims.iter().map(|&d| SparseEchelon::new(d)).collect();
        let mut queue: Vec<(usize, Vec<Rat>)> = Vec::new();
        for (s, v) in gens {
            if let Some(&i) = self.index.get(s) {
                queue.push((i, v.clone()));
            }
        }
        while let Some((i, v)) = queue.pop() {
            let sparse: Vec<(usize, Rat)> = v.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            if !ech[i].add_row(sparse) {
                continue;
            }
            for op in &self.acts {
                if let Some((t, mat)) = op.get(&i) {
                    let w = mat.mul_vec(&v);
                    if w.iter().any(|x| !x.is_zero()) {
                        queue.push((*t, w));
                    }
                }
            }
        }
        ech
    }

    /// Quotient by a graded submodule given per slot; returns the quotient
    /// and the projection matrix.
    pub fn quotient(&self, sub: &[SparseEchelon<Rat>]) -> (GradedModule, Matrix<Rat>) {
        let free: Vec<Vec<usize>> = sub.iter().map(|e| e.free_columns()).collect();
        let mut dims = BTreeMap::new();
        for (i, s) in self.slots.iter().enumerate() {
            dims.insert(*s, free[i].len());
        }
        let mut q = Self::skeleton(self.left.clone(), self.right.clone(), &dims);
        let pos: Vec<BTreeMap<usize, usize>> = free
            .iter()
            .map(|f| f.iter().enumerate().map(|(a, &b)| (b, a)).collect())
            .collect();
        let project = |i: usize, v: Vec<(usize, Rat)>| -> Vec<(usize, Rat)> {
            sub[i]
                .normal_form(v)
                .into_iter()
                .map(|(c, x)| (pos[i][&c], x))
                .collect()
        };
        let mut p = Matrix::zeros(q.total, self.total);
        for (i, s) in self.slots.iter().enumerate() {
            let Some(&qi) = q.index.get(s) else { continue };
            for j in 0..self.dims[i] {
                for (c, x) in project(i, vec![(j, Rat::one())]) {
                    p.set(q.offsets[qi] + c, self.offsets[i] + j, x);
                }
            }
        }
        for (k, op) in self.acts.iter().enumerate() {
            for (&s, (t, mat)) in op {
                let (Some(&qs), Some(&qt)) = (q.index.get(&self.slots[s]), q.index.get(&self.slots[*t])) else {
                    continue;
                };
                let mut m = Matrix::zeros(q.dims[qt], q.dims[qs]);
                for (a, &col) in free[s].iter().enumerate() {
                    let img: Vec<(usize, Rat)> = (0..mat.rows())
                        .filter(|&r| !mat.get(r, col).is_zero())
                        .map(|r| (r, mat.get(r, col).clone()))
                        .collect();
                    for (c, x) in project(*t, img) {
                        m.set(c, a, x);
                    }
                }
                if !m.is_zero() {
                    q.acts[k].insert(qs, (qt, m));
                }
            }
        }
        (q, p)
    }

    /// Submodule with the given per-slot bases (columns, full rank, stable
    /// under the action); returns it with its inclusion and a left inverse.
    pub fn submodule(&self, bases: &BTreeMap<usize, Matrix<Rat>>) -> (GradedModule, Matrix<Rat>) {
        let mut dims = BTreeMap::new();
        for (&i, b) in bases {
            dims.insert(self.slots[i], b.cols());
        }
        let mut sub = Self::skeleton(self.left.clone(), self.right.clone(), &dims);
        let mut inc = Matrix::zeros(self.total, sub.total);
        for (&i, b) in bases {
            if b.cols() == 0 {
                continue;
            }
            let si = sub.index[&self.slots[i]];
            inc.put_block(self.offsets[i], sub.offsets[si], b);
        }
        // coordinates: B x = v solved through a left inverse of B
        let left_inv: BTreeMap<usize, Matrix<Rat>> = bases
            .iter()
            .filter(|(_, b)| b.cols() > 0)
            .map(|(&i, b)| (i, left_inverse(b)))
            .collect();
        for (k, op) in self.acts.iter().enumerate() {
            for (&s, (t, mat)) in op {
                let (Some(bs), Some(li)) = (bases.get(&s), left_inv.get(t)) else { continue };
                if bs.cols() == 0 {
                    continue;
                }
                let m = &(li * mat) * bs;
                if !m.is_zero() {
                    let (ss, ts) = (sub.index[&self.slots[s]], sub.index[&self.slots[*t]]);
                    sub.acts[k].insert(ss, (ts, m));
                }
            }
        }
        (sub, inc)
    }

    /// JSON: component table and generator action blocks.
    pub fn to_json(&self) -> Value {
        let vl = |a: &QuiverAlgebra, v: usize| a.vertex_labels()[v].clone();
        let comps: Vec<Value> = self
            .slots
            .iter()
            .zip(&self.dims)
            .map(|(s, d)| json!({"left": vl(&self.left, s.l), "right": vl(&self.right, s.r), "deg": s.deg, "dim": d}))
            .collect();
        let gens = self.actgens();
        let mut actions = Vec::new();
        for (k, op) in self.acts.iter().enumerate() {
            let g = gens[k];
            let alg = if g.side == Side::Left { &self.left } else { &self.right };
            for (&s, (_, mat)) in op {
                let slot = self.slots[s];
                let rows: Vec<Vec<String>> = (0..mat.rows())
                    .map(|r| mat.row(r).iter().map(fmt_rat).collect())
                    .collect();
                actions.push(json!({
                    "side": if g.side == Side::Left { "left" } else { "right" },
                    "gen": alg.basis()[g.elem].label,
                    "from": {"left": vl(&self.left, slot.l), "right": vl(&self.right, slot.r), "deg": slot.deg},
                    "matrix": rows,
                }));
            }
        }
        json!({"components": comps, "actions": actions})
    }

    /// Parses the JSON form produced by [`GradedModule::to_json`] and
    /// validates every relation.
    pub fn from_json(left: Alg, right: Alg, v: &Value) -> Result<Self, ModError> {
        let bad = |m: &str| ModError::Malformed(m.to_string());
        let vertex = |a: &QuiverAlgebra, x: Option<&Value>| -> Result<usize, ModError> {
            match x.and_then(Value::as_str) {
                None if a.num_vertices() == 1 => Ok(0),
                None => Err(bad("missing vertex")),
                Some(l) => a.vertex(l).map_err(|e| ModError::Malformed(e.to_string())),
            }
        };
        let slot_of = |o: &Value| -> Result<Slot, ModError> {
            Ok(Slot::new(
                vertex(&left, o.get("left").or_else(|| o.get("vertex")))?,
                vertex(&right, o.get("right"))?,
                o.get("deg").and_then(Value::as_i64).ok_or_else(|| bad("missing deg"))? as i32,
            ))
        };
        let mut dims = BTreeMap::new();
        for c in v.get("components").and_then(Value::as_array).ok_or_else(|| bad("missing components"))? {
            let d = c.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing dim"))? as usize;
            *dims.entry(slot_of(c)?).or_insert(0) += d;
        }
        let gens = actgens_of(&left, &right);
        let mut acts: Vec<BTreeMap<Slot, Matrix<Rat>>> = vec![BTreeMap::new(); gens.len()];
        for a in v.get("actions").and_then(Value::as_array).map(Vec::as_slice).unwrap_or(&[]) {
            let side = match a.get("side").and_then(Value::as_str).unwrap_or("left") {
                "left" => Side::Left,
                "right" => Side::Right,
                _ => return Err(bad("side must be left or right")),
            };
            let alg = if side == Side::Left { &left } else { &right };
            let label = a.get("gen").and_then(Value::as_str).ok_or_else(|| bad("missing gen"))?;
            let elem = alg.basis_index(label).ok_or_else(|| ModError::Malformed(format!("unknown generator {label}")))?;
            let k = gens
                .iter()
                .position(|g| g.side == side && g.elem == elem)
                .ok_or_else(|| ModError::Malformed(format!("{label} is not a generator")))?;
            let from = slot_of(a.get("from").ok_or_else(|| bad("missing from"))?)?;
            let rows = a.get("matrix").and_then(Value::as_array).ok_or_else(|| bad("missing matrix"))?;
            let mut data = Vec::new();
            for r in rows {
                let mut row = Vec::new();
                for x in r.as_array().ok_or_else(|| bad("matrix rows must be arrays"))? {
                    row.push(parse_entry(x).ok_or_else(|| bad("bad matrix entry"))?);
                }
                data.push(row);
            }
            let cols = dims.get(&from).copied().unwrap_or(0);
            let mat = if data.is_empty() {
                Matrix::zeros(0, cols)
            } else {
                Matrix::from_rows(data)
            };
            acts[k].insert(from, mat);
        }
        let m = Self::new(left, right, &dims, acts)?;
        m.validate()?;
        Ok(m)
    }
}

fn parse_entry(x: &Value) -> Option<Rat> {
    match x {
        Value::Number(n) => crate::scalar::parse_rat(&n.to_string(), "1"),
        Value::String(s) => match s.split_once('/') {
            Some((a, b)) => crate::scalar::parse_rat(a, b),
            None => crate::scalar::parse_rat(s, "1"),
        },
        _ => None,
    }
}

/// Left inverse of a matrix with independent columns.
pub fn left_inverse(b: &Matrix<Rat>) -> Matrix<Rat> {
    let bt = b.transpose();
    let g = &bt * b;
    let gi = g.inverse().expect("independent columns");
    &gi * &bt
}

/// `a * b` (apply `b` first).
pub fn op_compose(a: &Op, b: &Op) -> Op {
    let mut out = Op::new();
    for (&s, (m, mb)) in b {
        if let Some((t, ma)) = a.get(m) {
            let p = ma * mb;
            if !p.is_zero() {
                out.insert(s, (*t, p));
            }
        }
    }
    out
}

pub fn op_add_scaled(acc: &mut Op, x: &Op, c: &Rat) {
    for (&s, (t, m)) in x {
        let scaled = m.scale(c);
        match acc.get_mut(&s) {
            Some((t0, m0)) => {
                debug_assert_eq!(t0, t);
                *m0 = &*m0 + &scaled;
            }
            None => {
                acc.insert(s, (*t, scaled));
            }
        }
    }
    acc.retain(|_, (_, m)| !m.is_zero());
}

pub fn op_eq(a: &Op, b: &Op) -> bool {
    let nz = |o: &Op| -> BTreeMap<usize, (usize, Matrix<Rat>)> {
        o.iter().filter(|(_, (_, m))| !m.is_zero()).map(|(k, v)| (*k, v.clone())).collect()
    };
    nz(a) == nz(b)
}
