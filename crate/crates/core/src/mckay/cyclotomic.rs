//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::scalar::{fmt_rat, Field, Rat};

/// Coefficients of the `m`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache").get(&m) {
        return p.clone();
    }
    assert!(m >= 1, "cyclotomic index must be positive");
    // x^m - 1 divided by every Phi_d, d | m, d < m
    let mut num = vec![Rat::zero(); m as usize + 1];
    num[0] = -Rat::one();
    num[m as usize] = Rat::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().expect("cache").insert(m, p.clone());
    p
}

/// Quotient of polynomials when the monic divisor divides exactly.
fn div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![Rat::zero(); num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] = &rem[i + j] - &(&c * dj);
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// Element of `Q(zeta_m)` in the power basis `1, z, ..., z^(phi(m)-1)`,
/// `z = exp(2 pi i / m)`. Rationals carry `m = 0` and combine with any field.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    m: u32,
    c: Vec<Rat>,
}

impl Cyclotomic {
    pub fn rational(r: Rat) -> Self {
        Cyclotomic { m: 0, c: vec![r] }.normalized()
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rat::from_integer(n.into()))
    }

    /// `zeta_m^k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut c = vec![Rat::zero(); e + 1];
        c[e] = Rat::one();
        Self::reduce(m, c)
    }

    /// `zeta_m^k + zeta_m^-k`.
    pub fn two_cos(m: u32, k: i64) -> Self {
        Self::zeta_pow(m, k) + Self::zeta_pow(m, -k)
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    fn reduce(m: u32, mut c: Vec<Rat>) -> Self {
        if m == 0 {
            return Cyclotomic { m, c }.normalized();
        }
        let phi = cyclotomic_polynomial(m);
        let d = phi.len() - 1;
        for i in (d..c.len()).rev() {
            let top = c[i].clone();
            if top.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate() {
                c[i - d + j] = &c[i - d + j] - &(&top * pj);
            }
        }
        c.truncate(d);
        Cyclotomic { m, c }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
        if self.c.len() <= 1 {
            self.m = 0;
        }
        self
    }

    fn common(&self, other: &Self) -> u32 {
        match (self.m, other.m) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "cyclotomic numbers from different fields");
                a
            }
        }
    }

    /// The rational value, if this number is rational.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.m != 0 {
            return None;
        }
        Some(self.c.first().cloned().unwrap_or_else(Rat::zero))
    }

    /// Complex conjugation `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        if self.m == 0 {
            return self.clone();
        }
        let m = self.m as usize;
        let mut c = vec![Rat::zero(); m];
        for (k, x) in self.c.iter().enumerate() {
            c[(m - k) % m] += x;
        }
        Self::reduce(self.m, c)
    }

    /// Galois image `zeta -> zeta^j` for `j` coprime to the conductor.
    pub fn galois(&self, j: u32) -> Self {
        if self.m == 0 {
            return self.clone();
        }
        let m = self.m as usize;
        let mut c = vec![Rat::zero(); m];
        for (k, x) in self.c.iter().enumerate() {
            c[(k * j as usize) % m] += x;
        }
        Self::reduce(self.m, c)
    }

    /// Matrix of multiplication by `self` on the power basis.
    fn mult_matrix(&self) -> Matrix<Rat> {
        let d = cyclotomic_polynomial(self.m).len() - 1;
        let mut mat = Matrix::zeros(d, d);
        for j in 0..d {
            let mut basis = vec![Rat::zero(); j + 1];
            basis[j] = Rat::one();
            let col = self.clone() * Self::reduce(self.m, basis);
            for (i, x) in col.c.iter().enumerate() {
                mat.set(i, j, x.clone());
            }
        }
        mat
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic { m: 0, c: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Add for Cyclotomic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let m = self.common(&o);
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).cloned().unwrap_or_else(Rat::zero);
                let b = o.c.get(i).cloned().unwrap_or_else(Rat::zero);
                a + b
            })
            .collect();
        Cyclotomic { m, c }.normalized()
    }
}

impl Neg for Cyclotomic {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { m: self.m, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Sub for Cyclotomic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for Cyclotomic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let m = self.common(&o);
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::reduce(m, c)
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rat() {
            return Some(Self::rational(r.recip()));
        }
        let mat = self.mult_matrix();
        let mut e0 = vec![Rat::zero(); mat.rows()];
        e0[0] = Rat::one();
        let sol = mat.solve(&e0)?;
        Some(Self::reduce(self.m, sol))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }

    fn from_rat(r: &Rat) -> Self {
        Self::rational(r.clone())
    }
}

impl fmt::Display for Cyclotomic {
    /// Polynomial in `z = zeta_m`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = *x < Rat::zero();
            let a = if neg { -x.clone() } else { x.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mono = match k {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{k}"),
            };
            let coef = if k > 0 && a.is_one() { String::new() } else { fmt_rat(&a) };
            let sep = if !coef.is_empty() && !mono.is_empty() { "*" } else { "" };
            write!(f, "{sign}{coef}{sep}{mono}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (m={})", self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let ints = |m| -> Vec<i64> {
            cyclotomic_polynomial(m).iter().map(|x| x.to_integer().try_into().unwrap()).collect()
        };
        assert_eq!(ints(1), vec![-1, 1]);
        assert_eq!(ints(4), vec![1, 0, 1]);
        assert_eq!(ints(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(ints(60).len(), 17);
    }

    #[test]
    fn identities() {
        // zeta_8 + zeta_8^-1 squared is 2
        let r2 = Cyclotomic::two_cos(24, 3);
        assert_eq!(r2.clone() * r2, Cyclotomic::from_int(2));
        // golden ratio: phi^2 = phi + 1
        let phi = Cyclotomic::from_int(1) + Cyclotomic::two_cos(60, 12);
        assert_eq!(phi.clone() * phi.clone(), phi + Cyclotomic::from_int(1));
        // 1 + w + w^2 = 0
        let w = Cyclotomic::zeta_pow(12, 4);
        assert!((Cyclotomic::from_int(1) + w.clone() + w.clone() * w.clone()).is_zero());
        assert_eq!(w.conj(), w.clone() * w);
        assert_eq!(Cyclotomic::zeta_pow(12, 6), Cyclotomic::from_int(-1));
    }

    proptest! {
        #[test]
        fn field_axioms(a in proptest::collection::vec(-3i64..4, 1..8), b in proptest::collection::vec(-3i64..4, 1..8)) {
            let mk = |v: &[i64]| v.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, &x)| {
                acc + Cyclotomic::from_int(x) * Cyclotomic::zeta_pow(60, k as i64 * 7)
            });
            let (x, y) = (mk(&a), mk(&b));
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
            prop_assert_eq!(x.galois(7).galois(43), x.clone());
            if !x.is_zero() {
                prop_assert_eq!(x.inv().unwrap() * x.clone(), Cyclotomic::one());
            }
        }
    }
}
