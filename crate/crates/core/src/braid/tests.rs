use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::adjoint::build_adjoint_rep;
use crate::modrep::{algebra_of, is_isomorphic};
use crate::roots::{generate_roots, Graph};
use crate::zigzag::{build_skew, build_zigzag, SkewCoefficients};

fn alg(name: &str) -> Alg {
    algebra_of(build_zigzag(&Graph::named(name).unwrap()).unwrap())
}

fn skew_cycle() -> Alg {
    let g = Graph::cycle(3).unwrap();
    algebra_of(build_skew(&g, &SkewCoefficients::alternating_cycle(3)).unwrap())
}

fn s(v: usize) -> Letter {
    Letter { vertex: v, inverse: false }
}

fn si(v: usize) -> Letter {
    Letter { vertex: v, inverse: true }
}

fn assert_iso(x: &Complex, y: &Complex) {
    match complex_isomorphism(x, y).unwrap() {
        ComplexIso::Iso(maps) => assert!(check_chain_iso(x, y, &maps)),
        ComplexIso::NotIso(why) => panic!("{why}: {} vs {}", x.shape_string(), y.shape_string()),
    }
}

#[test]
fn twist_multiplication_map() {
    let a = alg("A2");
    let (x, coords) = outer(&a, 0);
    let t = twist(&a, 0).unwrap();
    let zeta = t.differential(0);
    let reg = regular_bimodule(&a);
    let at = complex::regular_coords(&a, &reg);
    let e0 = a.idempotent(0);
    let arrow = a.basis_index("(b|a)").unwrap();
    for (col, &(p, q)) in coords.iter().enumerate() {
        let img: Vec<usize> = (0..zeta.rows()).filter(|&r| !zeta.get(r, col).is_zero()).collect();
        if (p, q) == (e0, e0) {
            assert_eq!(img, vec![at[e0]]);
        }
        if (p, q) == (arrow, e0) {
            assert_eq!(img, vec![at[arrow]]);
        }
    }
    // (b|a) (x) (a|b) maps to the loop at b
    let ab = a.basis_index("(a|b)").unwrap();
    let ba = a.basis_index("(b|a)").unwrap();
    let lp = a.basis_index("l_a").unwrap();
    assert_eq!(a.mul_basis(ab, ba), &vec![(lp, Rat::one())]);
    let lb = a.basis_index("l_b").unwrap();
    let col = coords.iter().position(|&pq| pq == (ba, ab)).unwrap();
    assert_eq!(zeta.get(at[lb], col), &Rat::one());
    assert_eq!(x.total_dim(), 9);
    assert_eq!(t.degrees(), vec![0, 1]);
}

#[test]
fn coevaluation_is_trace_dual() {
    for name in ["A2", "A3", "D4"] {
        let a = alg(name);
        let tr = a.trace_form().unwrap().to_vec();
        for v in 0..a.num_vertices() {
            let (x, coords) = outer(&a, v);
            let inv = twist_inverse(&a, v).unwrap();
            let coev = inv.differential(-1);
            let reg = regular_bimodule(&a);
            let at = complex::regular_coords(&a, &reg);
            // image of 1 = sum of idempotents
            let mut z: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
            for w in 0..a.num_vertices() {
                let col = at[a.idempotent(w)];
                for r in 0..x.total_dim() {
                    let c = coev.get(r, col);
                    if !c.is_zero() {
                        *z.entry(coords[r]).or_insert_with(Rat::zero) += c;
                    }
                }
            }
            // sum_i x_i tr(y_i x') is a fixed nonzero multiple of x'
            let xs: Vec<usize> = (0..a.dim()).filter(|&i| a.basis()[i].tgt == v).collect();
            let mut scale: Option<Rat> = None;
            for &xp in &xs {
                let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                for (&(xi, yi), c) in &z {
                    let t: Rat = a.mul_basis(yi, xp).iter().map(|(k, w)| w * &tr[*k]).sum();
                    if !t.is_zero() {
                        *acc.entry(xi).or_insert_with(Rat::zero) += c * &t;
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                assert_eq!(acc.len(), 1, "{name} vertex {v}");
                let (k, c) = acc.into_iter().next().unwrap();
                assert_eq!(k, xp);
                match &scale {
                    None => scale = Some(c),
                    Some(s0) => assert_eq!(&c, s0),
                }
            }
        }
    }
}

#[test]
fn tensor_with_identity_is_unit() {
    let a = alg("A2");
    let t = twist(&a, 1).unwrap();
    let id = identity_complex(&a);
    assert_iso(&minimize(&tensor_complexes(&t, &id).unwrap()).unwrap(), &minimize(&t).unwrap());
    assert_iso(&minimize(&tensor_complexes(&id, &t).unwrap()).unwrap(), &minimize(&t).unwrap());
}

#[test]
fn totalization_has_three_terms() {
    let a = alg("A2");
    let c = tensor_complexes(&twist(&a, 0).unwrap(), &twist(&a, 1).unwrap()).unwrap();
    assert_eq!(c.degrees(), vec![0, 1, 2]);
    c.validate().unwrap();
}

#[test]
fn cone_of_identity_is_contractible() {
    let a = alg("A3");
    let reg = regular_bimodule(&a);
    let n = reg.total_dim();
    let c = Complex::new(
        a.clone(),
        a.clone(),
        BTreeMap::from([(0, reg.clone()), (1, reg)]),
        BTreeMap::from([(0, Matrix::identity(n))]),
    )
    .unwrap();
    assert!(minimize(&c).unwrap().is_zero());
}

#[test]
fn minimize_is_idempotent() {
    let a = alg("A3");
    let m = word_complex(&a, &[s(0), s(1)]).unwrap();
    let mm = minimize(&m).unwrap();
    assert_eq!(m.shape(), mm.shape());
    assert_iso(&m, &mm);
}

#[test]
fn invalid_differential_rejected() {
    let a = alg("A2");
    let t = twist(&a, 0).unwrap();
    let x = t.term(0).unwrap().clone();
    let reg = t.term(1).unwrap().clone();
    let mut bad = Matrix::zeros(reg.total_dim(), x.total_dim());
    bad.set(0, 0, Rat::one());
    bad.set(1, 3, Rat::one());
    let r = Complex::new(a.clone(), a, BTreeMap::from([(0, x), (1, reg)]), BTreeMap::from([(0, bad)]));
    assert!(matches!(r, Err(BraidError::Invariant(_))));
}

#[test]
fn twists_are_invertible() {
    for a in [alg("A1"), alg("A2")] {
        let id = identity_complex(&a);
        for v in 0..a.num_vertices() {
            assert_iso(&word_complex(&a, &[s(v), si(v)]).unwrap(), &id);
            assert_iso(&word_complex(&a, &[si(v), s(v)]).unwrap(), &id);
        }
    }
}

#[test]
fn braid_relation_chain_two() {
    let a = alg("A2");
    let lhs = word_complex(&a, &[s(0), s(1), s(0)]).unwrap();
    let rhs = word_complex(&a, &[s(1), s(0), s(1)]).unwrap();
    assert_iso(&lhs, &rhs);
    // and it is not the trivial relation
    let other = word_complex(&a, &[s(0), s(1), s(1)]).unwrap();
    assert!(!complex_isomorphism(&lhs, &other).unwrap().is_iso());
}

#[test]
fn end_vertices_of_chain_three_commute() {
    let a = alg("A3");
    assert_iso(&word_complex(&a, &[s(0), s(2)]).unwrap(), &word_complex(&a, &[s(2), s(0)]).unwrap());
    assert!(!complex_isomorphism(&word_complex(&a, &[s(0), s(1)]).unwrap(), &word_complex(&a, &[s(1), s(0)]).unwrap())
        .unwrap()
        .is_iso());
}

#[test]
fn full_relations_a2_and_skew_cycle() {
    for a in [alg("A2"), skew_cycle()] {
        let r = verify_braid_relations(&a).unwrap();
        assert!(!r.is_empty());
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}

#[test]
fn twist_applied_to_modules() {
    let a = alg("A2");
    // P_a (x) e_a P_a -> P_a leaves P_a{2} in degree 0
    let p = projective(&a, 0);
    let c = apply_word(&a, &[s(0)], &p).unwrap();
    assert_eq!(c.degrees(), vec![0]);
    assert!(is_isomorphic(c.term(0).unwrap(), &p.shift(2)).unwrap().is_iso());
    // orthogonal vertex: T_a L_b = L_b when e_a L_b = 0
    let a3 = alg("A3");
    let l = simple(&a3, 2);
    let c = apply_word(&a3, &[s(0)], &l).unwrap();
    assert_eq!(c.degrees(), vec![1]);
    assert!(is_isomorphic(c.term(1).unwrap(), &l).unwrap().is_iso());
}

#[test]
fn word_parsing() {
    let a = alg("A3");
    let w = parse_word(&a, "a b' c").unwrap();
    assert_eq!(w, vec![s(0), si(1), s(2)]);
    assert_eq!(format_word(&a, &w), "a b' c");
    assert!(matches!(parse_word(&a, "a z"), Err(BraidError::UnknownVertex(_))));
}

fn h_vec(rank: usize, i: usize) -> Vec<Laurent> {
    let mut v = vec![Laurent::zero(); rank];
    v[i] = Laurent::one();
    v
}

#[test]
fn class_action_values() {
    let r1 = build_adjoint_rep(&generate_roots(&Graph::named("A1").unwrap()).unwrap());
    assert_eq!(braid_class_action(&r1, &[s(0)], &h_vec(1, 0)).unwrap(), vec![Laurent::q_pow(2)]);
    let r3 = build_adjoint_rep(&generate_roots(&Graph::named("A3").unwrap()).unwrap());
    let mut minus = h_vec(3, 2);
    minus[2] = Laurent::from_int(-1);
    assert_eq!(braid_class_action(&r3, &[s(0)], &h_vec(3, 2)).unwrap(), minus);
    for v in 0..3 {
        for i in 0..3 {
            assert_eq!(braid_class_action(&r3, &[s(v), si(v)], &h_vec(3, i)).unwrap(), h_vec(3, i));
        }
    }
    assert!(matches!(
        braid_class_action(&r3, &[s(0)], &h_vec(2, 0)),
        Err(BraidError::NotWeightZero { .. })
    ));
}

#[test]
fn decategorified_action_a2() {
    let cat = Categorified::new(&Graph::named("A2").unwrap()).unwrap();
    let r = verify_class_action(&cat).unwrap();
    let bad: Vec<_> = r.failures().collect();
    assert!(bad.is_empty(), "{bad:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn minimize_preserves_euler_dims(w in proptest::collection::vec((0usize..2, any::<bool>()), 1..3)) {
        let a = alg("A2");
        let word: Vec<Letter> = w.iter().map(|&(v, inverse)| Letter { vertex: v, inverse }).collect();
        let mut raw = identity_complex(&a);
        for &l in &word {
            raw = tensor_complexes(&raw, &letter_complex(&a, l).unwrap()).unwrap();
        }
        let min = minimize(&raw).unwrap();
        prop_assert_eq!(raw.euler_dims(), min.euler_dims());
        prop_assert!(complex_isomorphism(&min, &word_complex(&a, &word).unwrap()).unwrap().is_iso());
    }

    #[test]
    fn tensor_is_associative(w in proptest::collection::vec((0usize..2, any::<bool>()), 3)) {
        let a = alg("A2");
        let c: Vec<Complex> = w.iter().map(|&(v, inverse)| letter_complex(&a, Letter { vertex: v, inverse }).unwrap()).collect();
        let left = minimize(&tensor_complexes(&tensor_complexes(&c[0], &c[1]).unwrap(), &c[2]).unwrap()).unwrap();
        let right = minimize(&tensor_complexes(&c[0], &tensor_complexes(&c[1], &c[2]).unwrap()).unwrap()).unwrap();
        let fwd = complex_isomorphism(&left, &right).unwrap();
        let back = complex_isomorphism(&right, &left).unwrap();
        prop_assert!(fwd.is_iso() && back.is_iso());
    }
}
