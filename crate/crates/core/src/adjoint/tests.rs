use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::modrep::{is_isomorphic, projective};
use crate::roots::{generate_roots, Graph};

fn rep(name: &str) -> AdjointRep {
    build_adjoint_rep(&generate_roots(&Graph::named(name).unwrap()).unwrap())
}

fn cat(name: &str) -> Categorified {
    Categorified::new(&Graph::named(name).unwrap()).unwrap()
}

fn unit(n: usize, i: usize) -> Vec<Laurent> {
    let mut v = vec![Laurent::zero(); n];
    v[i] = Laurent::one();
    v
}

fn q2() -> Laurent {
    &Laurent::q_pow(1) + &Laurent::q_pow(-1)
}

#[test]
fn dimensions() {
    assert_eq!(rep("A1").dim(), 3);
    assert_eq!(rep("A2").dim(), 8);
    assert_eq!(rep("D4").dim(), 28);
}

#[test]
fn tabulated_entries() {
    let r = rep("A2");
    let n = r.dim();
    for a in 0..2 {
        let pa = r.root_index(&r.rs.simple(a));
        let na = r.neg(pa);
        let mut want = vec![Laurent::zero(); n];
        want[na] = q2();
        assert_eq!(r.f[a].mul_vec(&unit(n, r.h(a))), want);
        assert_eq!(r.e[a].mul_vec(&unit(n, na)), unit(n, r.h(a)));
    }
}

#[test]
fn uq_relations_hold() {
    for name in ["A1", "A2", "A3", "D4"] {
        let report = verify_uq_relations(&rep(name));
        assert!(!report.is_empty());
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

#[test]
fn commutator_on_weight_spaces() {
    let r = rep("A3");
    let n = r.dim();
    for a in 0..3 {
        let comm = &(&r.e[a] * &r.f[a]) - &(&r.f[a] * &r.e[a]);
        for mu in 0..r.num_roots() {
            let p = r.pair(mu, a);
            if p >= 0 {
                let want = crate::laurent::quantum_integer::<crate::Rat>(p).unwrap();
                assert_eq!(comm.mul_vec(&unit(n, mu))[mu], want);
            }
        }
    }
}

#[test]
fn form_values() {
    let r = rep("A3");
    let n = r.dim();
    assert_eq!(r.form(&unit(n, r.h(0)), &unit(n, r.h(1))), Laurent::q_pow(1));
    assert_eq!(r.form(&unit(n, r.h(0)), &unit(n, r.h(2))), Laurent::zero());
    assert_eq!(r.form(&unit(n, r.h(1)), &unit(n, r.h(1))), &Laurent::one() + &Laurent::q_pow(2));
    for mu in 0..r.num_roots() {
        assert_eq!(r.form(&unit(n, mu), &unit(n, mu)), Laurent::one());
    }
    let report = verify_form_and_involutions(&r);
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn omega_squares_to_identity() {
    let r = rep("D4");
    let w = r.omega_matrix();
    assert_eq!(&w * &w, QMat::identity(r.dim()));
}

#[test]
fn functor_examples() {
    let c = cat("A2");
    let a = 0;
    let sa = c.simple_root(a);
    let na = c.rep.neg(sa);
    // E C_{-a} = P_a{-1}
    let x = c.apply(Fun::E(a), &c.c_mu(na)).unwrap();
    assert!(x.vects.is_empty());
    assert!(is_isomorphic(&x.module, &projective(&c.alg, a).shift(-1)).unwrap().is_iso());
    // F L_a = C_{-a}
    let y = c.apply(Fun::F(a), &c.simple(a)).unwrap();
    assert_eq!(y.vects, BTreeMap::from([(na, BTreeMap::from([(0, 1)]))]));
    assert!(y.module.is_zero());
    // K C_mu = C_mu{(mu, a)}
    for mu in 0..c.rep.num_roots() {
        let k = c.apply(Fun::K(a), &c.c_mu(mu)).unwrap();
        let p = c.rep.pair(mu, a) as i32;
        assert_eq!(k.vects[&mu], BTreeMap::from([(p, 1)]));
    }
    // E kills C_mu when mu + a is neither a root nor zero
    let top: Vec<i64> = vec![1, 1];
    let t = c.rep.root_index(&top);
    assert!(c.apply(Fun::E(a), &c.c_mu(t)).unwrap().is_zero());
}

#[test]
fn classes() {
    let c = cat("A3");
    let n = c.rep.dim();
    let t = c.rep.to_dual();
    for a in 0..3 {
        let mut canon = vec![Laurent::zero(); n];
        canon[c.rep.h(a)] = Laurent::q_pow(1);
        assert_eq!(c.class_of(&c.projective(a)), t.mul_vec(&canon));
        let mut l = vec![Laurent::zero(); n];
        l[c.rep.h(a)] = Laurent::q_pow(4);
        assert_eq!(c.class_of(&c.simple(a).shift(3)), l);
    }
}

#[test]
fn dualities_on_objects() {
    let c = cat("A2");
    for a in 0..2 {
        let l = c.simple(a);
        assert!(c.iso(&c.apply(Fun::Psi, &l).unwrap(), &l).unwrap().is_ok());
    }
    for mu in 0..c.rep.num_roots() {
        let x = c.c_mu(mu).shift(2);
        let px = c.apply(Fun::Psi, &x).unwrap();
        assert_eq!(px.vects[&mu], BTreeMap::from([(-2, 1)]));
        let ox = c.apply(Fun::Omega, &c.c_mu(mu)).unwrap();
        assert!(ox.vects.contains_key(&c.rep.neg(mu)));
    }
}

#[test]
fn ef_on_weight_one() {
    let c = cat("A2");
    for mu in 0..c.rep.num_roots() {
        for a in 0..2 {
            if c.rep.pair(mu, a) == 1 {
                let x = c.c_mu(mu);
                let ef = c.apply_word(&[Fun::E(a), Fun::F(a)], &x).unwrap();
                assert!(c.iso(&ef, &x).unwrap().is_ok());
                assert!(c.apply_word(&[Fun::F(a), Fun::E(a)], &x).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn full_verification_a2() {
    let c = cat("A2");
    for (what, r) in [
        ("functors", verify_functor_relations(&c).unwrap()),
        ("euler", verify_euler_form(&c).unwrap()),
        ("classes", verify_decategorification(&c).unwrap()),
        ("dualities", verify_dualities(&c).unwrap()),
    ] {
        assert!(!r.is_empty());
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{what}: {bad:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn form_is_semilinear(i in 0usize..8, j in 0usize..8, lo in -3i32..3, c in -3i64..4) {
        let r = rep("A2");
        let n = r.dim();
        let f = &Laurent::q_pow(lo) + &Laurent::from_int(c);
        let (x, y) = (unit(n, i), unit(n, j));
        let fx: Vec<Laurent> = x.iter().map(|v| v * &f).collect();
        let fy: Vec<Laurent> = y.iter().map(|v| v * &f).collect();
        prop_assert_eq!(r.form(&fx, &y), &f.bar() * &r.form(&x, &y));
        prop_assert_eq!(r.form(&x, &fy), &f * &r.form(&x, &y));
    }
}
