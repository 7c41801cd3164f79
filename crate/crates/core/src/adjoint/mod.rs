//! The adjoint representation of `U_q(g)` and its categorification.

mod category;
mod qmat;
mod verify;

use num_traits::{One, Zero};

use crate::laurent::quantum_integer;
use crate::report::Report;
use crate::roots::RootSystem;
use crate::Laurent;

pub use category::{CObject, Categorified, Fun, SetupError};
pub use qmat::QMat;
pub use verify::{
    verify_adjunctions, verify_decategorification, verify_dualities, verify_euler_form, verify_functor_relations,
};

/// Generators of `U_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

/// `c * g_1 g_2 ... g_k`.
pub type Monomial = (Laurent, Vec<Gen>);

/// Matrices of the generators on `R`, indexed by simple roots, in the
/// canonical basis `x_mu` (in root order) followed by `h_a`.
#[derive(Clone, Debug)]
pub struct AdjointRep {
    pub rs: RootSystem,
    pub e: Vec<QMat>,
    pub f: Vec<QMat>,
    pub k: Vec<QMat>,
    pub k_inv: Vec<QMat>,
    /// Gram matrix of the semilinear form in the canonical basis.
    pub gram: QMat,
}

fn q2() -> Laurent {
    quantum_integer(2).expect("non-negative")
}

impl AdjointRep {
    pub fn dim(&self) -> usize {
        self.rs.roots.len() + self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.rs.roots.len()
    }

    pub fn x(&self, mu: usize) -> usize {
        mu
    }

    pub fn h(&self, a: usize) -> usize {
        self.num_roots() + a
    }

    pub fn root_index(&self, mu: &[i64]) -> usize {
        self.rs.index_of(mu).expect("root")
    }

    pub fn neg(&self, mu: usize) -> usize {
        let m: Vec<i64> = self.rs.roots[mu].iter().map(|c| -c).collect();
        self.root_index(&m)
    }

    /// `(mu, alpha_a)`.
    pub fn pair(&self, mu: usize, a: usize) -> i64 {
        self.rs.pair(&self.rs.roots[mu], &self.rs.simple(a))
    }

    pub fn label(&self, a: usize) -> &str {
        self.rs.graph.label(a)
    }

    pub fn root_name(&self, mu: usize) -> String {
        let r = &self.rs.roots[mu];
        let parts: Vec<String> = r.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }

    pub fn gen_matrix(&self, g: Gen) -> &QMat {
        match g {
            Gen::E(a) => &self.e[a],
            Gen::F(a) => &self.f[a],
            Gen::K(a) => &self.k[a],
            Gen::KInv(a) => &self.k_inv[a],
        }
    }

    pub fn eval(&self, terms: &[Monomial]) -> QMat {
        let n = self.dim();
        let mut acc = QMat::zeros(n, n);
        for (c, word) in terms {
            let mut m = QMat::identity(n);
            for g in word {
                m = &m * self.gen_matrix(*g);
            }
            acc = &acc + &m.scale(c);
        }
        acc
    }

    /// `<u, v>` for canonical coordinates: antilinear in `u`.
    pub fn form(&self, u: &[Laurent], v: &[Laurent]) -> Laurent {
        let gv = self.gram.mul_vec(v);
        u.iter().zip(&gv).fold(Laurent::zero(), |acc, (a, b)| &acc + &(&a.bar() * b))
    }

    /// `<u, w>` with `u` in canonical and `w` in dual canonical coordinates.
    pub fn pairing(&self, u: &[Laurent], w: &[Laurent]) -> Laurent {
        u.iter().zip(w).fold(Laurent::zero(), |acc, (a, b)| &acc + &(&a.bar() * b))
    }

    /// Canonical coordinates to dual canonical ones: `h_a = sum_b <h_b, h_a> l_b`.
    pub fn to_dual(&self) -> QMat {
        let (n, r) = (self.dim(), self.num_roots());
        let mut t = QMat::identity(n);
        for a in 0..self.rs.rank() {
            for b in 0..self.rs.rank() {
                t.set(r + b, r + a, self.gram.get(r + b, r + a).clone());
            }
        }
        t
    }

    /// Generator matrices in the dual canonical basis `x_mu`, `l_a`, derived
    /// from the categorical description of the simples.
    pub fn dual_matrices(&self) -> (Vec<QMat>, Vec<QMat>, Vec<QMat>) {
        let (n, r) = (self.dim(), self.num_roots());
        let rank = self.rs.rank();
        let qinv = Laurent::q_pow(-1);
        let mut es = Vec::new();
        let mut fs = Vec::new();
        for a in 0..rank {
            let mut e = QMat::zeros(n, n);
            let mut f = QMat::zeros(n, n);
            let pa = self.root_index(&self.rs.simple(a));
            let na = self.neg(pa);
            for mu in 0..r {
                match self.pair(mu, a) {
                    -1 => {
                        let t = self.add_simple(mu, a, 1);
                        e.set(t, mu, Laurent::one());
                    }
                    1 => {
                        let t = self.add_simple(mu, a, -1);
                        f.set(t, mu, Laurent::one());
                    }
                    _ => {}
                }
            }
            // E x_{-a} = h_a and F x_a = h_a, written in the l basis
            for b in 0..rank {
                let g = self.gram.get(r + b, r + a).clone();
                e.set(r + b, na, g.clone());
                f.set(r + b, pa, g);
            }
            e.set(pa, r + a, qinv.clone());
            f.set(na, r + a, qinv.clone());
            es.push(e);
            fs.push(f);
        }
        (es, fs, self.k.clone())
    }

    fn add_simple(&self, mu: usize, a: usize, sign: i64) -> usize {
        let mut m = self.rs.roots[mu].clone();
        m[a] += sign;
        self.root_index(&m)
    }

    /// `psi_R` on canonical coordinates: bar every coordinate.
    pub fn psi_canonical(&self, v: &[Laurent]) -> Vec<Laurent> {
        v.iter().map(Laurent::bar).collect()
    }

    /// `psi_R` on dual canonical coordinates, using `psi_R(l_a) = q^2 l_a`.
    pub fn psi_dual(&self, v: &[Laurent]) -> Vec<Laurent> {
        let r = self.num_roots();
        v.iter()
            .enumerate()
            .map(|(i, c)| if i < r { c.bar() } else { c.bar().shift(2) })
            .collect()
    }

    /// `omega_R`: `x_mu <-> x_{-mu}`, `h_a` (and `l_a`) fixed.
    pub fn omega_matrix(&self) -> QMat {
        let (n, r) = (self.dim(), self.num_roots());
        let mut w = QMat::zeros(n, n);
        for mu in 0..r {
            w.set(self.neg(mu), mu, Laurent::one());
        }
        for i in r..n {
            w.set(i, i, Laurent::one());
        }
        w
    }
}

/// Tabulated action of `E`, `F`, `K` on `x_mu`, `h_a`.
pub fn build_adjoint_rep(rs: &RootSystem) -> AdjointRep {
    let r = rs.roots.len();
    let rank = rs.rank();
    let n = r + rank;
    let mut rep = AdjointRep {
        rs: rs.clone(),
        e: Vec::new(),
        f: Vec::new(),
        k: Vec::new(),
        k_inv: Vec::new(),
        gram: QMat::zeros(n, n),
    };
    for mu in 0..r {
        rep.gram.set(mu, mu, Laurent::one());
    }
    for a in 0..rank {
        for b in 0..rank {
            let v = if a == b {
                &Laurent::one() + &Laurent::q_pow(2)
            } else if rs.pairing[a][b] == -1 {
                Laurent::q_pow(1)
            } else {
                Laurent::zero()
            };
            rep.gram.set(r + a, r + b, v);
        }
    }
    for a in 0..rank {
        let mut e = QMat::zeros(n, n);
        let mut f = QMat::zeros(n, n);
        let mut k = QMat::zeros(n, n);
        let mut ki = QMat::zeros(n, n);
        let pa = rep.root_index(&rs.simple(a));
        let na = rep.neg(pa);
        for mu in 0..r {
            let p = rep.pair(mu, a);
            k.set(mu, mu, Laurent::q_pow(p as i32));
            ki.set(mu, mu, Laurent::q_pow(-p as i32));
            match p {
                1 => f.set(rep.add_simple(mu, a, -1), mu, Laurent::one()),
                -1 => e.set(rep.add_simple(mu, a, 1), mu, Laurent::one()),
                _ => {}
            }
        }
        f.set(r + a, pa, Laurent::one());
        e.set(r + a, na, Laurent::one());
        for b in 0..rank {
            k.set(r + b, r + b, Laurent::one());
            ki.set(r + b, r + b, Laurent::one());
            let c = if a == b {
                q2()
            } else if rs.pairing[b][a] == -1 {
                Laurent::one()
            } else {
                continue;
            };
            e.set(pa, r + b, c.clone());
            f.set(na, r + b, c);
        }
        rep.e.push(e);
        rep.f.push(f);
        rep.k.push(k);
        rep.k_inv.push(ki);
    }
    rep
}

fn single(c: Laurent, word: Vec<Gen>) -> Vec<Monomial> {
    vec![(c, word)]
}

/// `tau`: antilinear anti-automorphism with `tau(E) = q F K^-1`,
/// `tau(F) = q E K`, `tau(K) = K^-1`.
pub fn tau(terms: &[Monomial]) -> Vec<Monomial> {
    terms
        .iter()
        .map(|(c, word)| {
            let mut coef = c.bar();
            let mut out = Vec::new();
            for g in word.iter().rev() {
                match *g {
                    Gen::E(a) => {
                        coef = coef.shift(1);
                        out.extend([Gen::F(a), Gen::KInv(a)]);
                    }
                    Gen::F(a) => {
                        coef = coef.shift(1);
                        out.extend([Gen::E(a), Gen::K(a)]);
                    }
                    Gen::K(a) => out.push(Gen::KInv(a)),
                    Gen::KInv(a) => out.push(Gen::K(a)),
                }
            }
            (coef, out)
        })
        .collect()
}

/// `psi`: antilinear automorphism fixing `E`, `F` and inverting `K`.
pub fn psi(terms: &[Monomial]) -> Vec<Monomial> {
    terms
        .iter()
        .map(|(c, word)| {
            let w = word
                .iter()
                .map(|g| match *g {
                    Gen::K(a) => Gen::KInv(a),
                    Gen::KInv(a) => Gen::K(a),
                    other => other,
                })
                .collect();
            (c.bar(), w)
        })
        .collect()
}

/// `omega`: linear automorphism swapping `E` and `F` and inverting `K`.
pub fn omega(terms: &[Monomial]) -> Vec<Monomial> {
    terms
        .iter()
        .map(|(c, word)| {
            let w = word
                .iter()
                .map(|g| match *g {
                    Gen::E(a) => Gen::F(a),
                    Gen::F(a) => Gen::E(a),
                    Gen::K(a) => Gen::KInv(a),
                    Gen::KInv(a) => Gen::K(a),
                })
                .collect();
            (c.clone(), w)
        })
        .collect()
}

fn gen_name(rep: &AdjointRep, g: Gen) -> String {
    match g {
        Gen::E(a) => format!("E_{}", rep.label(a)),
        Gen::F(a) => format!("F_{}", rep.label(a)),
        Gen::K(a) => format!("K_{}", rep.label(a)),
        Gen::KInv(a) => format!("K_{}^-1", rep.label(a)),
    }
}

/// Every defining relation of `U_q` as an exact matrix identity.
pub fn verify_uq_relations(rep: &AdjointRep) -> Report {
    let mut rep_out = Report::new();
    let n = rep.dim();
    let rank = rep.rs.rank();
    let id = QMat::identity(n);
    let q2 = q2();
    let lab = |a: usize| rep.label(a).to_string();
    let mut check = |name: String, lhs: QMat, rhs: QMat| {
        let pass = lhs == rhs;
        let witness = if pass { None } else { Some(format!("difference has {} nonzero entries", (&lhs - &rhs).nonzero_count())) };
        rep_out.push(name, "R", pass, witness);
    };
    for a in 0..rank {
        let (e, f, k, ki) = (&rep.e[a], &rep.f[a], &rep.k[a], &rep.k_inv[a]);
        check(format!("K_{0} K_{0}^-1 = 1", lab(a)), k * ki, id.clone());
        check(format!("K_{0}^-1 K_{0} = 1", lab(a)), ki * k, id.clone());
        for b in 0..rank {
            let (eb, fb, kb) = (&rep.e[b], &rep.f[b], &rep.k[b]);
            let p = rep.rs.pairing[a][b] as i32;
            if a < b {
                check(format!("K_{} K_{} = K_{} K_{}", lab(a), lab(b), lab(b), lab(a)), k * kb, kb * k);
            }
            check(
                format!("K_{} E_{} = q^{} E_{} K_{}", lab(a), lab(b), p, lab(b), lab(a)),
                k * eb,
                (eb * k).scale(&Laurent::q_pow(p)),
            );
            check(
                format!("K_{} F_{} = q^{} F_{} K_{}", lab(a), lab(b), -p, lab(b), lab(a)),
                k * fb,
                (fb * k).scale(&Laurent::q_pow(-p)),
            );
            let comm = &(e * fb) - &(fb * e);
            if a == b {
                // (q - q^-1)(EF - FE) = K - K^-1
                let qq = &Laurent::q_pow(1) - &Laurent::q_pow(-1);
                check(format!("[E_{0}, F_{0}] = (K_{0} - K_{0}^-1)/(q - q^-1)", lab(a)), comm.scale(&qq), k - ki);
            } else {
                check(format!("[E_{}, F_{}] = 0", lab(a), lab(b)), comm, QMat::zeros(n, n));
            }
            if a < b && p == 0 {
                check(format!("E_{} E_{} = E_{} E_{}", lab(a), lab(b), lab(b), lab(a)), e * eb, eb * e);
                check(format!("F_{} F_{} = F_{} F_{}", lab(a), lab(b), lab(b), lab(a)), f * fb, fb * f);
            }
            if p == -1 {
                for (x, y, nm) in [(e, eb, "E"), (f, fb, "F")] {
                    let x2 = x * x;
                    let lhs = &(&(&x2 * y) - &(&(x * y) * x).scale(&q2)) + &(y * &x2);
                    check(
                        format!("{nm}_{0}^2 {nm}_{1} - [2] {nm}_{0} {nm}_{1} {nm}_{0} + {nm}_{1} {nm}_{0}^2 = 0", lab(a), lab(b)),
                        lhs,
                        QMat::zeros(n, n),
                    );
                }
            }
        }
    }
    rep_out
}

/// Properties of the semilinear form and of the involutions on `R`.
pub fn verify_form_and_involutions(rep: &AdjointRep) -> Report {
    let mut out = Report::new();
    let n = rep.dim();
    let rank = rep.rs.rank();
    let g = &rep.gram;
    let gens: Vec<Gen> = (0..rank).flat_map(|a| [Gen::E(a), Gen::F(a), Gen::K(a), Gen::KInv(a)]).collect();
    for &x in &gens {
        let one = single(Laurent::one(), vec![x]);
        let name = gen_name(rep, x);
        // <x a, b> = <a, tau(x) b>: bar(M)^T G = G tau(M)
        let m = rep.eval(&one);
        let lhs = &m.bar().transpose() * g;
        let rhs = g * &rep.eval(&tau(&one));
        out.push("tau-invariance of the form", name.clone(), lhs == rhs, None);
        // psi_R(a v) = psi(a) psi_R(v): bar(M) = M_{psi(a)}
        out.push("psi_R intertwines psi", name.clone(), m.bar() == rep.eval(&psi(&one)), None);
        // omega_R M omega_R = M_{omega(a)}
        let w = rep.omega_matrix();
        out.push("omega_R intertwines omega", name.clone(), &(&w * &m) * &w == rep.eval(&omega(&one)), None);
        out.push("tau psi tau = psi", name.clone(), rep.eval(&tau(&psi(&tau(&one)))) == rep.eval(&psi(&one)), None);
        out.push("psi omega = omega psi", name.clone(), rep.eval(&psi(&omega(&one))) == rep.eval(&omega(&psi(&one))), None);
        out.push("tau omega = omega tau", name, rep.eval(&tau(&omega(&one))) == rep.eval(&omega(&tau(&one))), None);
    }
    let w = rep.omega_matrix();
    out.push("omega_R^2 = 1", "R", &w * &w == QMat::identity(n), None);
    out.push("<omega_R x, omega_R y> = <x, y>", "R", &(&w.transpose() * g) * &w == *g, None);
    // <psi_R x, psi_R y> = <y, x> on Laurent multiples of basis vectors
    let mut ok = true;
    let coefs = [Laurent::one(), Laurent::q_pow(1), &Laurent::q_pow(-2) + &Laurent::from_int(3)];
    for i in 0..n {
        for j in 0..n {
            for c in &coefs {
                let mut u = vec![Laurent::zero(); n];
                let mut v = vec![Laurent::zero(); n];
                u[i] = c.clone();
                v[j] = Laurent::q_pow(1);
                let lhs = rep.form(&rep.psi_canonical(&u), &rep.psi_canonical(&v));
                ok &= lhs == rep.form(&v, &u);
            }
        }
    }
    out.push("<psi_R x, psi_R y> = <y, x>", "R", ok, None);
    out
}

#[cfg(test)]
mod tests;
