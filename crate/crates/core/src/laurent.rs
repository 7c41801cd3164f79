//! Laurent polynomials and truncated power series in `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::scalar::{fmt_rat, parse_rat, rat_parts, Field, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("negative argument {0} to quantum integer")]
    NegativeQuantumInteger(i64),
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("quotient has a pole of order {0} at q = 0 and is not a power series")]
    NotAPowerSeries(i32),
    #[error("malformed Laurent polynomial: {0}")]
    Parse(String),
}

/// Sparse Laurent polynomial `sum c_k q^k` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<F> {
    coeffs: BTreeMap<i32, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, F)>) -> Self {
        let mut p = LaurentPoly {
            coeffs: BTreeMap::new(),
        };
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn monomial(exp: i32, c: F) -> Self {
        Self::from_terms([(exp, c)])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(exp, F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    fn add_term(&mut self, e: i32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.coeffs.remove(&e);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, e: i32) -> F {
        self.coeffs.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &F)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Replaces `q` by `q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Replaces `q` by `-q`.
    pub fn negate_variable(&self) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, if e % 2 == 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    /// Substitution `q := x` for a unit `x` of the field.
    pub fn eval(&self, x: &F) -> F {
        let inv = x.inv();
        let mut acc = F::zero();
        for (e, c) in &self.coeffs {
            let base = if *e >= 0 {
                x.clone()
            } else {
                inv.clone().expect("evaluation at zero of a negative power")
            };
            let mut p = F::one();
            for _ in 0..e.unsigned_abs() {
                p = p * base.clone();
            }
            acc = acc + c.clone() * p;
        }
        acc
    }

    pub fn eval_at_minus_one(&self) -> F {
        self.eval(&-F::one())
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Exact quotient `self / d` if `d` divides `self` in `F[q, q^{-1}]`.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let dmin = d.min_exp().expect("nonzero");
        let dmax = d.max_exp().expect("nonzero");
        let lead_inv = d.coeff(dmax).inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let span = dmax - dmin;
        while !rem.is_zero() {
            let rmax = rem.max_exp().expect("nonzero");
            let rmin = rem.min_exp().expect("nonzero");
            if rmax - rmin < span {
                return Ok(None);
            }
            let t = Self::monomial(rmax - dmax, rem.coeff(rmax) * lead_inv.clone());
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }
}

impl LaurentPoly<Rat> {
    /// JSON form: list of `[exponent, numerator, denominator]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(e, c)| {
                    let (n, d) = rat_parts(c);
                    json!([e, n, d])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self, LaurentError> {
        let bad = || LaurentError::Parse(v.to_string());
        let arr = v.as_array().ok_or_else(bad)?;
        let mut terms = Vec::new();
        for t in arr {
            let t = t.as_array().ok_or_else(bad)?;
            if t.len() != 3 {
                return Err(bad());
            }
            let e = t[0].as_i64().ok_or_else(bad)? as i32;
            let s = |x: &Value| match x {
                Value::String(s) => Some(s.clone()),
                Value::Number(n) => Some(n.to_string()),
                _ => None,
            };
            let n = s(&t[1]).ok_or_else(bad)?;
            let d = s(&t[2]).ok_or_else(bad)?;
            terms.push((e, parse_rat(&n, &d).ok_or_else(bad)?));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Quantum integer `[i] = q^{i-1} + q^{i-3} + ... + q^{1-i}`.
pub fn quantum_integer<F: Field>(i: i64) -> Result<LaurentPoly<F>, LaurentError> {
    if i < 0 {
        return Err(LaurentError::NegativeQuantumInteger(i));
    }
    let i = i as i32;
    Ok(LaurentPoly::from_terms(
        (0..i).map(|j| (i - 1 - 2 * j, F::one())),
    ))
}

/// `(q^n - q^{-n}) / (q - q^{-1})` for any integer `n`; equals `[n]` for `n >= 0`.
pub fn signed_quantum_integer<F: Field>(n: i64) -> LaurentPoly<F> {
    let p = quantum_integer::<F>(n.abs()).expect("non-negative");
    if n < 0 {
        -p
    } else {
        p
    }
}

impl<F: Field> Zero for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for LaurentPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Add for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, o: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut r = self.clone();
        for (e, c) in &o.coeffs {
            r.add_term(*e, c.clone());
        }
        r
    }
}

impl<F: Field> Sub for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, o: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut r = self.clone();
        for (e, c) in &o.coeffs {
            r.add_term(*e, -c.clone());
        }
        r
    }
}

impl<F: Field> Mul for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, o: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                r.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        r
    }
}

impl<F: Field> Neg for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for LaurentPoly<F> {
            type Output = LaurentPoly<F>;
            fn $m(self, o: LaurentPoly<F>) -> LaurentPoly<F> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        -&self
    }
}

impl fmt::Display for LaurentPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = crate::scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            let body = if var.is_empty() {
                fmt_rat(&abs)
            } else if abs.is_one() {
                var
            } else {
                format!("{}*{}", fmt_rat(&abs), var)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for LaurentPoly<Rat> {
    type Err = LaurentError;

    /// Parses the canonical text form, e.g. `q^-1 + 2 - 3/2*q^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split into signed terms; a '-' right after '^' belongs to the exponent
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev = '\0';
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != '^' {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = ch;
        }
        terms.push(cur);
        let mut p = Self::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1i64, b.to_string()),
                None => (1, t.trim_start_matches('+').to_string()),
            };
            let (coef, var) = match body.find('q') {
                None => (body.as_str(), ""),
                Some(i) => {
                    let (c, v) = body.split_at(i);
                    (c.trim_end_matches('*'), v)
                }
            };
            let c = if coef.is_empty() {
                Rat::one()
            } else if let Some((n, d)) = coef.split_once('/') {
                parse_rat(n, d).ok_or_else(bad)?
            } else {
                parse_rat(coef, "1").ok_or_else(bad)?
            };
            let e = if var.is_empty() {
                0
            } else if var == "q" {
                1
            } else {
                var.strip_prefix("q^")
                    .ok_or_else(bad)?
                    .parse::<i32>()
                    .map_err(|_| bad())?
            };
            p.add_term(e, c * Rat::from_i64(sign));
        }
        Ok(p)
    }
}

/// Power series in `q` truncated after `q^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = F::one();
        s
    }

    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = F>) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    /// Truncation of a Laurent polynomial with no negative powers.
    pub fn from_laurent(p: &LaurentPoly<F>, order: usize) -> Result<Self, LaurentError> {
        if let Some(m) = p.min_exp() {
            if m < 0 {
                return Err(LaurentError::NotAPowerSeries(-m));
            }
        }
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if (e as usize) <= order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> F {
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_laurent(&self) -> LaurentPoly<F> {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i32, c.clone())),
        )
    }

    /// Replaces `q` by `-q`.
    pub fn negate_variable(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
                .collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    fn common_order(&self, o: &Self) -> usize {
        self.order().min(o.order())
    }
}

impl<F: Field> Add for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn add(self, o: &TruncatedSeries<F>) -> TruncatedSeries<F> {
        let n = self.common_order(o);
        TruncatedSeries::from_coeffs(n, (0..=n).map(|i| self.coeff(i) + o.coeff(i)))
    }
}

impl<F: Field> Sub for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn sub(self, o: &TruncatedSeries<F>) -> TruncatedSeries<F> {
        let n = self.common_order(o);
        TruncatedSeries::from_coeffs(n, (0..=n).map(|i| self.coeff(i) - o.coeff(i)))
    }
}

impl<F: Field> Mul for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn mul(self, o: &TruncatedSeries<F>) -> TruncatedSeries<F> {
        let n = self.common_order(o);
        let mut out: TruncatedSeries<F> = TruncatedSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if o.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] =
                    out.coeffs[i + j].clone() + self.coeffs[i].clone() * o.coeffs[j].clone();
            }
        }
        out
    }
}

impl<F: Field> Neg for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn neg(self) -> TruncatedSeries<F> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.to_laurent(), self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The unique power series `s` with `den * s = num` modulo `q^{order+1}`.
pub fn series_expand<F: Field>(
    num: &LaurentPoly<F>,
    den: &LaurentPoly<F>,
    order: usize,
) -> Result<TruncatedSeries<F>, LaurentError> {
    if den.is_zero() {
        return Err(LaurentError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(TruncatedSeries::zero(order));
    }
    let k = den.min_exp().expect("nonzero");
    // num / den = q^{-k} num / d0 with d0(0) != 0
    let d0 = den.shift(-k);
    let n0 = num.shift(-k);
    let lowest = n0.min_exp().expect("nonzero");
    if lowest < 0 {
        return Err(LaurentError::NotAPowerSeries(-lowest));
    }
    let c0_inv = d0.coeff(0).inv().expect("normalized constant term");
    let mut s: Vec<F> = vec![F::zero(); order + 1];
    for n in 0..=order {
        let mut acc = n0.coeff(n as i32);
        for j in 1..=n {
            let d = d0.coeff(j as i32);
            if !d.is_zero() && !s[n - j].is_zero() {
                acc = acc - d * s[n - j].clone();
            }
        }
        s[n] = acc * c0_inv.clone();
    }
    Ok(TruncatedSeries::from_coeffs(order, s))
}

/// Default truncation order for power series.
pub const DEFAULT_ORDER: usize = 12;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::Laurent;
    use proptest::prelude::*;

    fn q() -> Laurent {
        Laurent::q_pow(1)
    }

    #[test]
    fn multiplication_examples() {
        let p = &q() + &Laurent::q_pow(-1);
        assert_eq!(&p * &p, "q^-2 + 2 + q^2".parse().unwrap());
        assert!((&p * &Laurent::zero()).is_zero());
        let a = &Laurent::one() + &Laurent::q_pow(2);
        let det = &(&a * &a) - &Laurent::q_pow(2);
        assert_eq!(det, "1 + q^2 + q^4".parse().unwrap());
    }

    #[test]
    fn bar_examples() {
        let p: Laurent = "q + 2*q^3".parse().unwrap();
        assert_eq!(p.bar(), "2*q^-3 + q^-1".parse().unwrap());
        let p: Laurent = "1 + q^2".parse().unwrap();
        assert_eq!(p.bar(), "1 + q^-2".parse().unwrap());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer::<Rat>(2).unwrap(), "q^-1 + q".parse().unwrap());
        assert!(quantum_integer::<Rat>(0).unwrap().is_zero());
        assert_eq!(quantum_integer::<Rat>(3).unwrap(), "q^-2 + 1 + q^2".parse().unwrap());
        assert_eq!(
            quantum_integer::<Rat>(-1),
            Err(LaurentError::NegativeQuantumInteger(-1))
        );
        for i in 0..=50 {
            let p = quantum_integer::<Rat>(i).unwrap();
            assert!(p.is_bar_invariant());
            assert_eq!(p.num_terms() as i64, i);
        }
    }

    #[test]
    fn evaluation_at_minus_one() {
        let p: Laurent = "1 + q^2".parse().unwrap();
        assert_eq!(p.eval_at_minus_one(), int(2));
        assert_eq!(q().eval_at_minus_one(), int(-1));
        assert_eq!((&q() + &Laurent::q_pow(-1)).eval_at_minus_one(), int(-2));
    }

    #[test]
    fn series_examples() {
        let one = Laurent::one();
        let s = series_expand(&one, &"1 - q".parse().unwrap(), 3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(1), int(1), int(1)]);

        let num: Laurent = "1 + q^2".parse().unwrap();
        let den: Laurent = "1 + q^2 + q^4".parse().unwrap();
        let s = series_expand(&num, &den, 8).unwrap();
        let back = &TruncatedSeries::from_laurent(&den, 8).unwrap() * &s;
        assert_eq!(back, TruncatedSeries::from_laurent(&num, 8).unwrap());

        let z = series_expand(&Laurent::zero(), &den, 5).unwrap();
        assert!(z.is_zero());

        assert_eq!(
            series_expand(&one, &Laurent::zero(), 3),
            Err(LaurentError::ZeroDenominator)
        );
        assert_eq!(
            series_expand(&one, &q(), 3),
            Err(LaurentError::NotAPowerSeries(1))
        );
        // q^-1 * (q^2) / (q^-1 (1 - q)) is a genuine series
        let s = series_expand(&Laurent::q_pow(1), &"q^-1 - 1".parse().unwrap(), 4).unwrap();
        assert_eq!(s.coeff(0), int(0));
        assert_eq!(s.coeff(2), int(1));
    }

    #[test]
    fn text_and_json_forms() {
        let p: Laurent = "q^-1 + 2 + 3*q^2".parse().unwrap();
        assert_eq!(p.to_string(), "q^-1 + 2 + 3*q^2");
        let r = Laurent::from_terms([(0, rat(-1, 2)), (3, int(-1))]);
        assert_eq!(r.to_string(), "-1/2 - q^3");
        assert_eq!(r.to_string().parse::<Laurent>().unwrap(), r);
        assert_eq!(Laurent::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(Laurent::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a: Laurent = "1 + q^2 + q^4".parse().unwrap();
        let b: Laurent = "q^-1 - q".parse().unwrap();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), Some(a.clone()));
        assert_eq!(a.div_exact(&"1 + q".parse().unwrap()).unwrap(), None);
        let num = &Laurent::q_pow(3) - &Laurent::q_pow(-3);
        let den = &q() - &Laurent::q_pow(-1);
        assert_eq!(num.div_exact(&den).unwrap(), Some(quantum_integer(3).unwrap()));
    }

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-6i32..6, -5i64..5), 0..6)
            .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn bar_is_ring_involution(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn series_remultiplies(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            let n = 10;
            match series_expand(&a, &b, n) {
                Ok(s) => {
                    let k = b.min_exp().unwrap();
                    let d = TruncatedSeries::from_laurent(&b.shift(-k), n).unwrap();
                    let lhs = &d * &s;
                    let rhs = TruncatedSeries::from_laurent(&a.shift(-k), n).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
                Err(LaurentError::NotAPowerSeries(_)) => {
                    prop_assert!(a.shift(-b.min_exp().unwrap()).min_exp().unwrap() < 0);
                }
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }
}
