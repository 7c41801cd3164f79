use proptest::prelude::*;

use super::*;
use crate::roots::DynkinKind;

/// Gaussian integer `re + im i`.
type Gi = (i64, i64);

fn gmul(a: Gi, b: Gi) -> Gi {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn gadd(a: Gi, b: Gi) -> Gi {
    (a.0 + b.0, a.1 + b.1)
}

type M2 = [[Gi; 2]; 2];

fn mmul(x: &M2, y: &M2) -> M2 {
    let mut out = [[(0, 0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = gadd(gmul(x[i][0], y[0][j]), gmul(x[i][1], y[1][j]));
        }
    }
    out
}

/// The quaternion group as explicit matrices, by closure.
fn q8_elements() -> Vec<M2> {
    let i: M2 = [[(0, 1), (0, 0)], [(0, 0), (0, -1)]];
    let j: M2 = [[(0, 0), (1, 0)], [(-1, 0), (0, 0)]];
    let mut els: Vec<M2> = vec![[[(1, 0), (0, 0)], [(0, 0), (1, 0)]]];
    let mut k = 0;
    while k < els.len() {
        for g in [&i, &j] {
            let h = mmul(&els[k], g);
            if !els.contains(&h) {
                els.push(h);
            }
        }
        k += 1;
    }
    els
}

/// Trace of `g` on `S^2 C^2` in the basis `x^2, xy, y^2`.
fn sym2_trace(g: &M2) -> Gi {
    let (a, b, c, d) = (g[0][0], g[0][1], g[1][0], g[1][1]);
    gadd(gadd(gmul(a, a), gadd(gmul(a, d), gmul(b, c))), gmul(d, d))
}

#[test]
fn q8_sym_square_by_brute_force() {
    let els = q8_elements();
    assert_eq!(els.len(), 8);
    let traces: Vec<Gi> = els.iter().map(sym2_trace).collect();
    let sum: Gi = traces.iter().fold((0, 0), |a, &t| gadd(a, t));
    let norm: i64 = traces.iter().map(|t| t.0 * t.0 + t.1 * t.1).sum();
    let minus_one = els.iter().position(|g| g[0][0] == (-1, 0) && g[1][1] == (-1, 0)).unwrap();
    // no invariants, three distinct constituents, -1 acts trivially
    assert_eq!(sum, (0, 0));
    assert_eq!(norm, 3 * 8);
    assert_eq!(traces[minus_one], (3, 0));
    // hence S^2 is the sum of the three nontrivial characters
    let g = build_group("binary-dihedral:2").unwrap();
    let mult: Vec<u64> = (0..g.irreps.len()).map(|a| sym_power_multiplicity(&g, a, 2).unwrap()).collect();
    assert_eq!(mult, vec![0, 1, 1, 1, 0]);
}

#[test]
fn group_orders_and_degrees() {
    let q8 = build_group("binary-dihedral:2").unwrap();
    assert_eq!(q8.order, 8);
    let mut dims: Vec<i64> = q8.irreps.iter().map(Irrep::dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 1, 1, 1, 2]);
    let i = build_group("2I").unwrap();
    assert_eq!((i.order, i.irreps.len()), (120, 9));
    assert_eq!(build_group("2T").unwrap().irreps.len(), 7);
    assert_eq!(build_group("2O").unwrap().irreps.len(), 8);
    for n in [3, 5, 6, 7] {
        let g = build_group(&format!("binary-dihedral:{n}")).unwrap();
        assert_eq!(g.irreps.len() as u64, n + 3);
    }
    assert!(matches!(build_group("3T"), Err(McKayError::UnknownGroup(_))));
    assert!(matches!(build_group("cyclic:0"), Err(McKayError::UnknownGroup(_))));
}

#[test]
fn binary_predicate() {
    assert!(!build_group("cyclic:3").unwrap().is_binary());
    assert!(build_group("cyclic:4").unwrap().is_binary());
    assert!(build_group("2O").unwrap().is_binary());
    assert!(matches!(
        inverse_cartan_multiplicity(&build_group("cyclic:5").unwrap(), 0, 1),
        Err(McKayError::NotBinary(_))
    ));
}

#[test]
fn tampered_table_is_rejected() {
    let mut g = build_group("2T").unwrap();
    g.irreps[6].chars[2] = Cyclotomic::from_int(1);
    assert!(matches!(g.validate(), Err(McKayError::BadTable { .. })));
    let mut g = build_group("2I").unwrap();
    g.classes[3].size = 19;
    assert!(g.validate().is_err());
}

#[test]
fn table_is_closed_under_galois() {
    for name in ["2T", "2O", "2I", "binary-dihedral:5"] {
        let g = build_group(name).unwrap();
        let m = g.m;
        for j in (1..m).filter(|j| gcd(*j as u64, m as u64) == 1) {
            for r in &g.irreps {
                let img: Vec<Cyclotomic> = r.chars.iter().map(|x| x.galois(j)).collect();
                assert!(g.irreps.iter().any(|s| s.chars == img), "{name}: {} under {j}", r.name);
            }
        }
    }
}

fn affine(kind: DynkinKind, n: usize) -> DynkinClass {
    DynkinClass::Affine(kind, n)
}

#[test]
fn mckay_graph_shapes() {
    let cases = [
        ("binary-dihedral:2", affine(DynkinKind::D, 4)),
        ("binary-dihedral:3", affine(DynkinKind::D, 5)),
        ("binary-dihedral:4", affine(DynkinKind::D, 6)),
        ("2T", affine(DynkinKind::E, 6)),
        ("2O", affine(DynkinKind::E, 7)),
        ("2I", affine(DynkinKind::E, 8)),
        ("cyclic:3", affine(DynkinKind::A, 2)),
        ("cyclic:6", affine(DynkinKind::A, 5)),
    ];
    for (name, want) in cases {
        let mg = mckay_graph(&build_group(name).unwrap()).unwrap();
        assert_eq!(mg.class, want, "{name}");
    }
    let q8 = mckay_graph(&build_group("binary-dihedral:2").unwrap()).unwrap();
    assert_eq!(q8.graph.num_vertices(), 5);
    assert_eq!(q8.graph.degree(4), 4);
    for name in ["cyclic:1", "cyclic:2"] {
        assert!(matches!(
            mckay_graph(&build_group(name).unwrap()),
            Err(McKayError::NoAffineMatch { .. })
        ));
    }
}

#[test]
fn low_symmetric_powers() {
    for name in ["binary-dihedral:2", "2T", "2I", "cyclic:5"] {
        let g = build_group(name).unwrap();
        let mg = mckay_graph(&g).unwrap();
        for a in 0..g.irreps.len() {
            assert_eq!(sym_power_multiplicity(&g, a, 0).unwrap(), u64::from(a == 0));
            let adj = mg.graph.adjacent(a, g.trivial());
            assert_eq!(sym_power_multiplicity(&g, a, 1).unwrap(), u64::from(adj), "{name} {a}");
        }
    }
}

#[test]
fn inverse_cartan_identity_q8_and_2t() {
    for name in ["binary-dihedral:2", "2T"] {
        let g = build_group(name).unwrap();
        assert_eq!(inverse_cartan_multiplicity(&g, 0, 0).unwrap(), 1);
        let rows = sym_power_table(&g, 20, true, Some(8)).unwrap();
        assert_eq!(rows.len(), 21 * g.irreps.len());
        for r in &rows {
            assert!(r.matches(), "{name}: {r:?}");
        }
    }
}

#[test]
fn cross_product_cartan_matches() {
    for name in ["binary-dihedral:2", "2T", "2O"] {
        let g = build_group(name).unwrap();
        let c = cross_product_cartan(&g).unwrap();
        let diag = &Laurent::one() + &Laurent::q_pow(2);
        for (a, row) in c.iter().enumerate() {
            assert_eq!(row[a], diag);
        }
        assert!(cross_product_matches(&g).unwrap(), "{name}");
    }
    assert!(matches!(
        cross_product_cartan(&build_group("cyclic:3").unwrap()),
        Err(McKayError::NotBinary(_))
    ));
}

#[test]
fn exterior_square_is_trivial() {
    for name in ["cyclic:7", "2O", "2I"] {
        let g = build_group(name).unwrap();
        assert!(g.exterior_square_character().iter().all(|x| x.is_one()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplicities_are_natural(gi in 0usize..5, n in 0u32..=30) {
        let name = ["cyclic:4", "binary-dihedral:3", "2T", "2O", "2I"][gi];
        let g = build_group(name).unwrap();
        let chi = g.sym_power_character(n);
        let total: i64 = (0..g.irreps.len()).map(|a| g.multiplicity(&chi, a).unwrap() as i64 * g.irreps[a].dim()).sum();
        prop_assert_eq!(total, n as i64 + 1);
    }
}
