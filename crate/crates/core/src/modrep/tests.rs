use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::roots::Graph;
use crate::zigzag::build_zigzag;
use crate::Laurent;

fn zz(name: &str) -> (Graph, Alg) {
    let g = Graph::named(name).unwrap();
    let a = algebra_of(build_zigzag(&g).unwrap());
    (g, a)
}

fn q(terms: &[(i32, i64)]) -> Laurent {
    Laurent::from_terms(terms.iter().map(|&(e, c)| (e, Rat::from_integer(c.into()))))
}

/// Paths ending at `a` counted straight from the graph: `e_a` in degree 0,
/// one arrow from each neighbour in degree 1, the loop in degree 2.
fn projective_oracle(g: &Graph, a: usize) -> BTreeMap<Slot, usize> {
    let mut d = BTreeMap::new();
    d.insert(Slot::new(a, 0, 0), 1);
    for b in g.neighbors(a) {
        d.insert(Slot::new(*b, 0, 1), 1);
    }
    d.insert(Slot::new(a, 0, 2), 1);
    d
}

fn graded(m: &GradedModule) -> Laurent {
    Laurent::from_terms(
        m.graded_dims()
            .into_iter()
            .map(|(n, d)| (n, Rat::from_integer((d as i64).into()))),
    )
}

#[test]
fn projective_dims_match_path_count() {
    for name in ["A2", "A3", "D4", "affA2"] {
        let (g, a) = zz(name);
        for v in 0..g.num_vertices() {
            let p = projective(&a, v);
            p.validate().unwrap();
            assert_eq!(p.dim_table(), projective_oracle(&g, v), "{name} vertex {v}");
        }
    }
    let (_, a) = zz("A2");
    let dims: Vec<usize> = projective(&a, 0).graded_dims().into_values().collect();
    assert_eq!(dims, vec![1, 1, 1]);
}

#[test]
fn simple_is_quotient_of_projective() {
    let (_, a) = zz("A3");
    let p = projective(&a, 1);
    // radical: everything in positive degree
    let gens: Vec<(Slot, Vec<Rat>)> = p
        .slots()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.deg > 0)
        .map(|(i, s)| (*s, unit_vec(p.slot_dim(i), 0)))
        .collect();
    let (top, _) = p.quotient(&p.submodule_closure(&gens));
    assert!(is_isomorphic(&top, &simple(&a, 1)).unwrap().is_iso());
}

#[test]
fn hom_between_projectives() {
    let (g, a) = zz("A3");
    for x in 0..3 {
        for y in 0..3 {
            let h = graded_hom(&projective(&a, x), &projective(&a, y)).unwrap();
            let want = if x == y {
                q(&[(0, 1), (2, 1)])
            } else if g.adjacent(x, y) {
                q(&[(1, 1)])
            } else {
                Laurent::zero()
            };
            assert_eq!(h, want, "{x} {y}");
        }
    }
}

#[test]
fn hom_with_simples() {
    let (_, a) = zz("D4");
    for x in 0..4 {
        assert_eq!(hom_dim(&simple(&a, x), &simple(&a, x), 0).unwrap(), 1);
        for y in 0..4 {
            let h = graded_hom(&projective(&a, x), &simple(&a, y)).unwrap();
            let want = if x == y { q(&[(0, 1)]) } else { Laurent::zero() };
            assert_eq!(h, want);
        }
    }
}

#[test]
fn hom_basis_intertwines() {
    let (_, a) = zz("A3");
    let m = regular_left(&a);
    let n = projective(&a, 1);
    for f in hom_space(&m, &n, 1).unwrap() {
        for k in 0..m.actgens().len() {
            assert_eq!(&n.actgen_dense(k) * &f, &f * &m.actgen_dense(k));
        }
    }
}

#[test]
fn tensor_right_projective_with_projective() {
    let (g, a) = zz("A3");
    for x in 0..3 {
        for y in 0..3 {
            let t = tensor_over(&right_projective(&a, x), &projective(&a, y)).unwrap();
            t.module.validate().unwrap();
            let want = if x == y {
                q(&[(0, 1), (2, 1)])
            } else if g.adjacent(x, y) {
                q(&[(1, 1)])
            } else {
                Laurent::zero()
            };
            assert_eq!(graded(&t.module), want);
        }
    }
}

#[test]
fn tensor_right_projective_with_simple() {
    // e_x A (x) L_y = e_x L_y, which vanishes off the diagonal
    let (_, a) = zz("A3");
    for x in 0..3 {
        for y in 0..3 {
            let t = tensor_over(&right_projective(&a, x), &simple(&a, y)).unwrap();
            let want = if x == y { q(&[(0, 1)]) } else { Laurent::zero() };
            assert_eq!(graded(&t.module), want, "{x} {y}");
        }
    }
}

#[test]
fn tensor_with_regular_bimodule_is_identity() {
    let (_, a) = zz("A3");
    let m = GradedModule::direct_sum(&[&projective(&a, 0), &simple(&a, 2).shift(1)]).unwrap().0;
    let t = tensor_over(&regular_bimodule(&a), &m).unwrap();
    t.module.validate().unwrap();
    assert!(is_isomorphic(&t.module, &m).unwrap().is_iso());
}

#[test]
fn tensor_morphism_is_functorial() {
    let (_, a) = zz("A2");
    let x = right_projective(&a, 0);
    let m = projective(&a, 0);
    let n = projective(&a, 1);
    let tm = tensor_over(&x, &m).unwrap();
    let tn = tensor_over(&x, &n).unwrap();
    let idx = crate::linalg::Matrix::identity(x.total_dim());
    let id = tensor_morphism(&tm, &tm, &idx, &crate::linalg::Matrix::identity(m.total_dim()));
    assert_eq!(id, crate::linalg::Matrix::identity(tm.module.total_dim()));
    let f = hom_space(&m, &n, 1).unwrap();
    assert_eq!(f.len(), 1);
    let g = hom_space(&n, &m, 1).unwrap();
    let tf = tensor_morphism(&tm, &tn, &idx, &f[0]);
    let tg = tensor_morphism(&tn, &tm, &idx, &g[0]);
    assert_eq!(&tg * &tf, tensor_morphism(&tm, &tm, &idx, &(&g[0] * &f[0])));
    // the image of the loop map is nonzero on the degree-0 part
    assert!(!(&tg * &tf).is_zero());
}

#[test]
fn adjunction_counts() {
    let (_, a) = zz("A3");
    let mods = vec![
        projective(&a, 1),
        simple(&a, 0).shift(2),
        typea_indecomposables(&a).unwrap()[3].clone(),
        regular_left(&a),
    ];
    for m in &mods {
        for v in 0..3 {
            let lhs = graded_hom(&projective(&a, v), m).unwrap();
            let t = tensor_over(&right_projective(&a, v), m).unwrap();
            assert_eq!(lhs, graded(&t.module));
        }
    }
}

#[test]
fn chi_dual_examples() {
    let (_, a) = zz("A3");
    for v in 0..3 {
        let l = simple(&a, v);
        assert!(is_isomorphic(&chi_dual(&l).unwrap(), &l).unwrap().is_iso());
        let p = projective(&a, v);
        let d = chi_dual(&p).unwrap();
        d.validate().unwrap();
        assert!(is_isomorphic(&d, &p.shift(-2)).unwrap().is_iso());
        assert!(is_isomorphic(&chi_dual(&d).unwrap(), &p).unwrap().is_iso());
    }
}

#[test]
fn decompose_examples() {
    let (_, a) = zz("A2");
    let p = projective(&a, 0);
    let l3 = simple(&a, 0).shift(3);
    let (m, _, _) = GradedModule::direct_sum(&[&p, &l3]).unwrap();
    let parts = decompose(&m).unwrap();
    assert_eq!(parts.len(), 2);
    assert!(is_isomorphic(&parts[0].module, &p).unwrap().is_iso());
    assert!(is_isomorphic(&parts[1].module, &l3).unwrap().is_iso());
    for s in &parts {
        assert_eq!(&s.proj * &s.incl, crate::linalg::Matrix::identity(s.module.total_dim()));
    }

    let (_, a3) = zz("A3");
    let parts = decompose(&regular_left(&a3)).unwrap();
    assert_eq!(parts.len(), 3);
    for v in 0..3 {
        let pv = projective(&a3, v);
        assert!(parts.iter().any(|s| is_isomorphic(&s.module, &pv).unwrap().is_iso()));
    }

    // P_a tensored with a 2-dimensional space spread over degrees 0 and 1
    let pa = projective(&a, 1);
    let (m, _, _) = GradedModule::direct_sum(&[&pa, &pa.shift(1)]).unwrap();
    let parts = decompose(&m).unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0].module.min_deg(), Some(0));
    assert_eq!(parts[1].module.min_deg(), Some(1));

    // two equal copies need a non-basis splitting
    let (m, _, _) = GradedModule::direct_sum(&[&pa, &pa]).unwrap();
    assert_eq!(decompose(&m).unwrap().len(), 2);
}

#[test]
fn isomorphism_examples() {
    let (_, a) = zz("A3");
    let m = projective(&a, 1);
    match is_isomorphic(&m, &m.shift(1)).unwrap() {
        IsoDecision::NotIso(why) => assert!(why.contains("graded dimensions")),
        IsoDecision::Iso(_) => panic!("shift is not isomorphic"),
    }
    let (ab, _, _) = GradedModule::direct_sum(&[&projective(&a, 0), &projective(&a, 1)]).unwrap();
    let (ba, _, _) = GradedModule::direct_sum(&[&projective(&a, 1), &projective(&a, 0)]).unwrap();
    let IsoDecision::Iso(f) = is_isomorphic(&ab, &ba).unwrap() else { panic!() };
    assert!(f.is_invertible());
    for k in 0..ab.actgens().len() {
        assert_eq!(&ba.actgen_dense(k) * &f, &f * &ab.actgen_dense(k));
    }
    // same dimensions, different modules: P_b vs L_b + two-dimensional pieces
    let list = typea_indecomposables(&a).unwrap();
    let x = &list[1];
    let y = &list[7];
    if x.dim_table() == y.dim_table() {
        assert!(!is_isomorphic(x, y).unwrap().is_iso());
    }
}

fn check_typea(name: &str, count: usize) {
    let (_, a) = zz(name);
    let list = typea_indecomposables(&a).unwrap();
    assert_eq!(list.len(), count);
    for m in &list {
        m.validate().unwrap();
        assert!(is_indecomposable(m).unwrap());
    }
    for i in 0..list.len() {
        let others: Vec<GradedModule> = list[..i].to_vec();
        assert_eq!(matches_up_to_shift(&list[i], &others).unwrap(), None, "{name}: {i}");
    }
}

#[test]
fn typea_counts() {
    check_typea("A1", 2);
    check_typea("A2", 6);
    check_typea("A3", 12);
}

#[test]
fn typea_two_dimensional_intervals() {
    let (_, a) = zz("A2");
    let list = typea_indecomposables(&a).unwrap();
    let two: Vec<&GradedModule> = list.iter().filter(|m| m.total_dim() == 2).collect();
    assert_eq!(two.len(), 2);
    assert!(matches!(chain_order(&zz("D4").1), Err(ModError::NotChain)));
}

#[test]
fn random_modules_decompose_into_list() {
    for (name, seed) in [("A2", 1u64), ("A3", 2)] {
        let (_, a) = zz(name);
        let list = typea_indecomposables(&a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..6 {
            let m = random_quotient_module(&a, &mut rng, 8);
            m.validate().unwrap();
            let parts = decompose(&m).unwrap();
            let total: usize = parts.iter().map(|s| s.module.total_dim()).sum();
            assert_eq!(total, m.total_dim());
            for s in &parts {
                assert!(matches_up_to_shift(&s.module, &list).unwrap().is_some());
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let (_, a) = zz("A3");
    let m = typea_indecomposables(&a).unwrap()[4].clone();
    let back = GradedModule::from_json(a.clone(), ground(), &m.to_json()).unwrap();
    assert_eq!(back.dim_table(), m.dim_table());
    assert!(is_isomorphic(&back, &m).unwrap().is_iso());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hom_is_shift_covariant(seed in 0u64..1000, i in -2i32..3, k in -2i32..3) {
        let (_, a) = zz("A2");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_quotient_module(&a, &mut rng, 6);
        let n = random_quotient_module(&a, &mut rng, 6);
        prop_assert_eq!(
            hom_dim(&m.shift(k), &n.shift(k), i).unwrap(),
            hom_dim(&m, &n, i).unwrap()
        );
    }

    #[test]
    fn decompose_is_stable(seed in 0u64..1000) {
        let (_, a) = zz("A2");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_quotient_module(&a, &mut rng, 8);
        let parts = decompose(&m).unwrap();
        prop_assert_eq!(
            parts.iter().map(|s| s.module.total_dim()).sum::<usize>(),
            m.total_dim()
        );
        for s in &parts {
            let again = decompose(&s.module).unwrap();
            prop_assert_eq!(again.len(), 1);
        }
    }

    #[test]
    fn tensor_is_additive(v in 0usize..2, w in 0usize..2, s in 0i32..3) {
        let (_, a) = zz("A2");
        let x = right_projective(&a, v);
        let p = projective(&a, w);
        let l = simple(&a, 1 - w).shift(s);
        let (sum, _, _) = GradedModule::direct_sum(&[&p, &l]).unwrap();
        let lhs = graded(&tensor_over(&x, &sum).unwrap().module);
        let rhs = graded(&tensor_over(&x, &p).unwrap().module) + graded(&tensor_over(&x, &l).unwrap().module);
        prop_assert_eq!(lhs, rhs);
    }
}
