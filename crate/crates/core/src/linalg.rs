//! Dense and sparse exact linear algebra over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds an `rows x cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// Block placement: copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn sub_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                m.set(i, c, self.get(r, c).clone());
            }
        }
        m
    }

    /// Reduces `self` in place to reduced row echelon form and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let v = self.get(row, c).clone();
                if !v.is_zero() {
                    self.set(row, c, v * inv.clone());
                }
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let pv = self.get(row, c).clone();
                    if pv.is_zero() {
                        continue;
                    }
                    let v = self.get(r, c).clone() - factor.clone() * pv;
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    /// Basis of the column space, as a subset of the columns (pivot columns).
    pub fn column_space(&self) -> Vec<Vec<F>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.put_block(0, 0, self);
        aug.put_block(0, n, &Self::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.sub_block(0, n, n, n))
    }

    /// Solves `self * x = b` for one particular solution.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        aug.put_block(0, 0, self);
        for (i, v) in b.iter().enumerate() {
            aug.set(i, self.cols, v.clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return F::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = m.get(r, col).clone() * inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(col, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.rows == 0 || self.pow(self.rows as u32).is_zero()
    }

    /// Characteristic polynomial `det(x I - self)`, coefficients in increasing degree.
    pub fn char_poly(&self) -> Vec<F> {
        // Faddeev-LeVerrier
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zeros(n, n);
        let mut c_prev = F::one();
        for k in 1..=n {
            let mut mk = self.matmul(&m);
            for i in 0..n {
                let v = mk.get(i, i).clone() + c_prev.clone();
                mk.set(i, i, v);
            }
            m = mk;
            let am = self.matmul(&m);
            let mut tr = F::zero();
            for i in 0..n {
                tr = tr + am.get(i, i).clone();
            }
            let ck = -(tr * F::from_i64(k as i64).inv().expect("char 0"));
            coeffs[n - k] = ck.clone();
            c_prev = ck;
        }
        coeffs
    }
}

fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize], ncols: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (i, &p) in pivots.iter().enumerate() {
            let e = r.get(i, free);
            if !e.is_zero() {
                v[p] = -e.clone();
            }
        }
        basis.push(v);
    }
    basis
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, o: &Matrix<F>) -> Matrix<F> {
        self.matmul(o)
    }
}

/// Block diagonal matrix.
pub fn block_diag<F: Field>(blocks: &[&Matrix<F>]) -> Matrix<F> {
    let r: usize = blocks.iter().map(|b| b.rows()).sum();
    let c: usize = blocks.iter().map(|b| b.cols()).sum();
    let mut m = Matrix::zeros(r, c);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        m.put_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    m
}

/// Incremental sparse Gaussian elimination, used to find kernels of large,
/// very sparse linear systems (intertwiner equations, balancing relations).
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    ncols: usize,
    /// pivot column -> row with leading coefficient 1 at that column
    pivots: BTreeMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, row: impl IntoIterator<Item = (usize, F)>) -> BTreeMap<usize, F> {
        let mut work: BTreeMap<usize, F> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.ncols);
            if v.is_zero() {
                continue;
            }
            let e = work.entry(c).or_insert_with(F::zero);
            *e = e.clone() + v;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).next().map(|(c, v)| (*c, v.clone()));
            let Some((c, v)) = next else { break };
            if let Some(prow) = self.pivots.get(&c) {
                for (pc, pv) in prow {
                    let e = work.entry(*pc).or_insert_with(F::zero);
                    *e = e.clone() - v.clone() * pv.clone();
                    if e.is_zero() {
                        work.remove(pc);
                    }
                }
            }
            cursor = c + 1;
        }
        work
    }

    /// Adds a row; returns `true` when it increased the rank.
    pub fn add_row(&mut self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        let work = self.reduce(row);
        let Some((&lead, lv)) = work.iter().next() else {
            return false;
        };
        let inv = lv.inv().expect("nonzero");
        let normalized: Vec<(usize, F)> = work
            .iter()
            .map(|(c, v)| (*c, v.clone() * inv.clone()))
            .collect();
        self.pivots.insert(lead, normalized);
        true
    }

    /// Whether the vector lies in the row space.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Reduces a vector modulo the row space; the result has no entries at pivot columns.
    pub fn normal_form(&self, row: impl IntoIterator<Item = (usize, F)>) -> BTreeMap<usize, F> {
        self.reduce(row)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect()
    }

    /// Fully reduces pivot rows so that every pivot row vanishes on the other pivot columns.
    fn back_substitute(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for c in cols {
            let row = self.pivots.remove(&c).expect("pivot");
            let mut work: BTreeMap<usize, F> = row.into_iter().collect();
            let later: Vec<usize> = work.keys().filter(|&&k| k > c).copied().collect();
            for k in later {
                let Some(v) = work.get(&k).cloned() else { continue };
                if let Some(prow) = self.pivots.get(&k) {
                    for (pc, pv) in prow {
                        let e = work.entry(*pc).or_insert_with(F::zero);
                        *e = e.clone() - v.clone() * pv.clone();
                        if e.is_zero() {
                            work.remove(pc);
                        }
                    }
                }
            }
            self.pivots.insert(c, work.into_iter().collect());
        }
    }

    /// Basis of the solution space `{x : r . x = 0 for every added row r}`,
    /// one vector per free column, as sparse vectors.
    pub fn kernel(mut self) -> Vec<Vec<(usize, F)>> {
        self.back_substitute();
        let free = self.free_columns();
        let mut index_of_free = vec![usize::MAX; self.ncols];
        for (i, &f) in free.iter().enumerate() {
            index_of_free[f] = i;
        }
        let mut basis: Vec<Vec<(usize, F)>> = free.iter().map(|&f| vec![(f, F::one())]).collect();
        for (&p, row) in &self.pivots {
            for (c, v) in row {
                if *c == p {
                    continue;
                }
                let i = index_of_free[*c];
                debug_assert!(i != usize::MAX);
                basis[i].push((p, -v.clone()));
            }
        }
        for b in &mut basis {
            b.sort_by_key(|(c, _)| *c);
        }
        basis
    }

    pub fn dense_kernel(self) -> Vec<Vec<F>> {
        let n = self.ncols;
        self.kernel()
            .into_iter()
            .map(|sv| {
                let mut v = vec![F::zero(); n];
                for (c, x) in sv {
                    v[c] = x;
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rat};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.determinant(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let a = m(&[&[1, 2, 3, 4, 0], &[2, 4, 6, 8, 1], &[0, 1, 1, 0, 0]]);
        let mut s = SparseEchelon::new(5);
        for r in 0..3 {
            s.add_row(a.row(r).iter().cloned().enumerate());
        }
        let k = s.dense_kernel();
        assert_eq!(k.len(), a.kernel().len());
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_char_poly() {
        let a = m(&[&[2, 0], &[1, 3]]);
        let x = a.solve(&[int(2), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        // (x-2)(x-3) = 6 - 5x + x^2
        assert_eq!(a.char_poly(), vec![int(6), int(-5), int(1)]);
        assert!(m(&[&[0, 1], &[0, 0]]).is_nilpotent());
        assert_eq!(a.scale(&rat(1, 2)).get(1, 0), &rat(1, 2));
    }
}
