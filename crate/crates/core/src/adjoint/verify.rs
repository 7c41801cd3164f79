//! Object-level verification of the functor relations, adjunctions,
//! dualities and the decategorification maps.

use num_traits::{One, Zero};

use super::category::{CObject, Categorified, Fun};
use super::{verify_form_and_involutions, QMat};
use crate::modrep::ModError;
use crate::report::Report;
use crate::Laurent;

fn fun_name(c: &Categorified, f: Fun) -> String {
    let l = |a: usize| c.rep.label(a).to_string();
    match f {
        Fun::E(a) => format!("E_{}", l(a)),
        Fun::F(a) => format!("F_{}", l(a)),
        Fun::K(a) => format!("K_{}", l(a)),
        Fun::KInv(a) => format!("K_{}^-1", l(a)),
        Fun::Shift(k) => format!("{{{k}}}"),
        Fun::Psi => "Psi".into(),
        Fun::Omega => "Omega".into(),
    }
}

fn word_name(c: &Categorified, w: &[Fun]) -> String {
    if w.is_empty() {
        return "Id".into();
    }
    w.iter().map(|f| fun_name(c, *f)).collect::<Vec<_>>().join(" ")
}

/// Sum of composites applied to `x`.
fn apply_sum(c: &Categorified, words: &[Vec<Fun>], x: &CObject) -> Result<CObject, ModError> {
    let mut acc = CObject::zero(&c.alg);
    for w in words {
        acc = acc.sum(&c.apply_word(w, x)?)?;
    }
    Ok(acc)
}

fn sum_name(c: &Categorified, words: &[Vec<Fun>]) -> String {
    if words.is_empty() {
        return "0".into();
    }
    words.iter().map(|w| word_name(c, w)).collect::<Vec<_>>().join(" + ")
}

fn check_iso(
    c: &Categorified,
    out: &mut Report,
    lhs: &[Vec<Fun>],
    rhs: &[Vec<Fun>],
    name: &str,
    x: &CObject,
) -> Result<(), ModError> {
    let a = apply_sum(c, lhs, x)?;
    let b = apply_sum(c, rhs, x)?;
    let relation = format!("{} ≅ {}", sum_name(c, lhs), sum_name(c, rhs));
    match c.iso(&a, &b)? {
        Ok(w) => out.push(relation, name, true, Some(w)),
        Err(why) => out.push(relation, name, false, Some(why)),
    }
    Ok(())
}

/// `Id^[j] = Id{j-1} + Id{j-3} + ... + Id{1-j}` followed by `then`.
fn id_bracket(j: i64, then: &[Fun]) -> Vec<Vec<Fun>> {
    (0..j)
        .map(|t| {
            let mut w = vec![Fun::Shift((j - 1 - 2 * t) as i32)];
            w.extend_from_slice(then);
            w
        })
        .collect()
}

fn weight_pairing(c: &Categorified, x: &CObject, a: usize) -> i64 {
    match x.vects.keys().next() {
        Some(&mu) if x.module.is_zero() => c.rep.pair(mu, a),
        _ => 0,
    }
}

/// Functor isomorphisms lifting the `U_q` relations, the `EF`/`FE`
/// isomorphisms, and the adjunctions as graded Hom-dimension identities.
pub fn verify_functor_relations(c: &Categorified) -> Result<Report, ModError> {
    use Fun::*;
    let mut out = Report::new();
    let family = c.family();
    let n = c.rank();
    let pairing = &c.rep.rs.pairing;
    for (name, x) in &family {
        for a in 0..n {
            check_iso(c, &mut out, &[vec![K(a), KInv(a)]], &[vec![]], name, x)?;
            check_iso(c, &mut out, &[vec![KInv(a), K(a)]], &[vec![]], name, x)?;
            for b in 0..n {
                let p = pairing[a][b] as i32;
                if a < b {
                    check_iso(c, &mut out, &[vec![K(a), K(b)]], &[vec![K(b), K(a)]], name, x)?;
                }
                check_iso(c, &mut out, &[vec![K(a), E(b)]], &[vec![Shift(p), E(b), K(a)]], name, x)?;
                check_iso(c, &mut out, &[vec![K(a), F(b)]], &[vec![Shift(-p), F(b), K(a)]], name, x)?;
                if a != b {
                    check_iso(c, &mut out, &[vec![E(a), F(b)]], &[vec![F(b), E(a)]], name, x)?;
                }
                if a < b && p == 0 {
                    check_iso(c, &mut out, &[vec![E(a), E(b)]], &[vec![E(b), E(a)]], name, x)?;
                    check_iso(c, &mut out, &[vec![F(a), F(b)]], &[vec![F(b), F(a)]], name, x)?;
                }
                if p == -1 {
                    for (g, h) in [(E(a), E(b)), (F(a), F(b))] {
                        check_iso(
                            c,
                            &mut out,
                            &[vec![g, g, h], vec![h, g, g]],
                            &[vec![Shift(1), g, h, g], vec![Shift(-1), g, h, g]],
                            name,
                            x,
                        )?;
                    }
                }
            }
            let j = weight_pairing(c, x, a);
            if j >= 0 {
                let mut rhs = vec![vec![F(a), E(a)]];
                rhs.extend(id_bracket(j, &[]));
                check_iso(c, &mut out, &[vec![E(a), F(a)]], &rhs, name, x)?;
            } else {
                let mut lhs = vec![vec![E(a), F(a)]];
                lhs.extend(id_bracket(-j, &[]));
                check_iso(c, &mut out, &lhs, &[vec![F(a), E(a)]], name, x)?;
            }
        }
    }
    out.extend(verify_adjunctions(c)?);
    Ok(out)
}

/// `E -| F K^-1 {1}`, `F -| E K {1}`, `K -| K^-1` as
/// `sum q^i dim Hom(G X{i}, Y) = sum q^i dim Hom(X{i}, G' Y)`.
pub fn verify_adjunctions(c: &Categorified) -> Result<Report, ModError> {
    use Fun::*;
    let mut out = Report::new();
    let family = c.family();
    for a in 0..c.rank() {
        let pairs: [(Vec<Fun>, Vec<Fun>); 3] = [
            (vec![E(a)], vec![Shift(1), F(a), KInv(a)]),
            (vec![F(a)], vec![Shift(1), E(a), K(a)]),
            (vec![K(a)], vec![KInv(a)]),
        ];
        for (left, right) in &pairs {
            let relation = format!("{} left adjoint to {}", word_name(c, left), word_name(c, right));
            let mut ok = true;
            let mut witness = None;
            for (nx, x) in &family {
                let gx = c.apply_word(left, x)?;
                for (ny, y) in &family {
                    let lhs = c.hom(&gx, y)?;
                    let rhs = c.hom(x, &c.apply_word(right, y)?)?;
                    if lhs != rhs {
                        ok = false;
                        witness.get_or_insert_with(|| format!("X = {nx}, Y = {ny}: {lhs} vs {rhs}"));
                    }
                }
            }
            out.push(relation, "family x family", ok, witness);
        }
    }
    Ok(out)
}

/// Canonical-basis class of a projective object of the family.
fn projective_class(c: &Categorified, x: &CObject) -> Option<Vec<Laurent>> {
    let mut v = vec![Laurent::zero(); c.rep.dim()];
    if !x.module.is_zero() {
        // only the indecomposable projectives P_a are used
        let a = (0..c.rank()).find(|&a| {
            c.iso(&c.projective(a), x).map(|r| r.is_ok()).unwrap_or(false)
        })?;
        v[c.rep.h(a)] = Laurent::q_pow(1);
    }
    for (&mu, d) in &x.vects {
        for (&n, &k) in d {
            v[mu] = &v[mu] + &Laurent::monomial(n, crate::Rat::from_integer((k as i64).into()));
        }
    }
    Some(v)
}

/// `<[P], [M]> = sum q^i dim Hom(P{i}, M)` for projectives `P` and all family members `M`.
pub fn verify_euler_form(c: &Categorified) -> Result<Report, ModError> {
    let mut out = Report::new();
    let family = c.family();
    let t = c.rep.to_dual();
    for (np, p) in family.iter().filter(|(n, _)| !n.starts_with('L')) {
        let canon = projective_class(c, p).expect("projective family member");
        out.push(
            "canonical and dual classes of a projective agree",
            np.clone(),
            t.mul_vec(&canon) == c.class_of(p),
            None,
        );
        for (nm, m) in &family {
            let lhs = c.rep.pairing(&canon, &c.class_of(m));
            let rhs = c.hom(p, m)?;
            let pass = lhs == rhs;
            out.push(
                "<[P], [M]> = sum q^i dim Hom(P{i}, M)",
                format!("P = {np}, M = {nm}"),
                pass,
                (!pass).then(|| format!("{lhs} vs {rhs}")),
            );
        }
    }
    Ok(out)
}

/// `[G X] = G [X]` for the generators, shift, `Psi` and `Omega`.
pub fn verify_decategorification(c: &Categorified) -> Result<Report, ModError> {
    let mut out = Report::new();
    let rep = &c.rep;
    let (es, fs, ks) = rep.dual_matrices();
    let t = rep.to_dual();
    for a in 0..c.rank() {
        for (nm, can, dual) in [("E", &rep.e[a], &es[a]), ("F", &rep.f[a], &fs[a]), ("K", &rep.k[a], &ks[a])] {
            out.push(
                format!("{nm}_{} agrees on canonical and dual canonical bases", rep.label(a)),
                "R",
                &t * can == dual * &t,
                None,
            );
        }
    }
    let kinv: Vec<QMat> = rep.k_inv.clone();
    let n = rep.dim();
    let omega = rep.omega_matrix();
    for (name, x) in c.family() {
        let cls = c.class_of(&x);
        let mut push = |f: Fun, got: Vec<Laurent>, want: Vec<Laurent>| {
            out.push(format!("[{} X] = {} [X]", fun_name(c, f), fun_name(c, f)), name.clone(), got == want, None);
        };
        for a in 0..c.rank() {
            for (f, m) in [(Fun::E(a), &es[a]), (Fun::F(a), &fs[a]), (Fun::K(a), &ks[a]), (Fun::KInv(a), &kinv[a])] {
                push(f, c.class_of(&c.apply(f, &x)?), m.mul_vec(&cls));
            }
        }
        let q = QMat::identity(n).scale(&Laurent::q_pow(1));
        push(Fun::Shift(1), c.class_of(&x.shift(1)), q.mul_vec(&cls));
        push(Fun::Psi, c.class_of(&c.apply(Fun::Psi, &x)?), rep.psi_dual(&cls));
        push(Fun::Omega, c.class_of(&c.apply(Fun::Omega, &x)?), omega.mul_vec(&cls));
    }
    Ok(out)
}

/// `Psi` and `Omega` are involutions lifting `psi` and `omega`, plus the
/// matrix identities for the form and the involutions on `R`.
pub fn verify_dualities(c: &Categorified) -> Result<Report, ModError> {
    use Fun::*;
    let mut out = Report::new();
    for (name, x) in &c.family() {
        check_iso(c, &mut out, &[vec![Psi, Psi]], &[vec![]], name, x)?;
        check_iso(c, &mut out, &[vec![Omega, Omega]], &[vec![]], name, x)?;
        check_iso(c, &mut out, &[vec![Psi, Shift(1)]], &[vec![Shift(-1), Psi]], name, x)?;
        for a in 0..c.rank() {
            check_iso(c, &mut out, &[vec![Psi, E(a)]], &[vec![E(a), Psi]], name, x)?;
            check_iso(c, &mut out, &[vec![Psi, F(a)]], &[vec![F(a), Psi]], name, x)?;
            check_iso(c, &mut out, &[vec![Psi, K(a)]], &[vec![KInv(a), Psi]], name, x)?;
            check_iso(c, &mut out, &[vec![Omega, E(a)]], &[vec![F(a), Omega]], name, x)?;
            check_iso(c, &mut out, &[vec![Omega, F(a)]], &[vec![E(a), Omega]], name, x)?;
            check_iso(c, &mut out, &[vec![Omega, K(a)]], &[vec![KInv(a), Omega]], name, x)?;
        }
    }
    out.extend(verify_form_and_involutions(&c.rep));
    // psi_R and omega_R keep the lattice I: integral Laurent entries in the dual basis
    let integral = |v: &[Laurent]| v.iter().all(|p| p.terms().all(|(_, c)| c.is_integer()));
    let rep = &c.rep;
    let mut ok = true;
    for i in 0..rep.dim() {
        let mut e = vec![Laurent::zero(); rep.dim()];
        e[i] = Laurent::one();
        ok &= integral(&rep.psi_dual(&e)) && integral(&rep.omega_matrix().mul_vec(&e));
    }
    out.push("psi_R and omega_R preserve I", "R", ok, None);
    Ok(out)
}
