//! End-to-end use of the public API across modules.

use zigzag::braid::{apply_word, parse_word};
use zigzag::modrep::{algebra_of, graded_hom, is_isomorphic, projective, simple, GradedModule};
use zigzag::roots::{classify, generate_roots, sink_source_orientations, Graph};
use zigzag::zigzag::{build_zigzag, quantum_cartan};
use zigzag::{Laurent, Series};

#[test]
fn graph_json_round_trip_feeds_the_algebra() {
    let json = r#"{"vertices":["u","v","w","x"],"edges":[["u","v"],["v","w"],["v","x"]]}"#;
    let g = Graph::from_json_str(json).unwrap();
    assert_eq!(classify(&g).unwrap().to_string(), "D4");
    let again = Graph::from_json_str(&g.to_json().to_string()).unwrap();
    assert!(g.is_isomorphic_to(&again));
    assert_eq!(generate_roots(&g).unwrap().roots.len(), 24);
    assert_eq!(sink_source_orientations(&g).len(), 2);
    let a = build_zigzag(&g).unwrap();
    assert_eq!(a.graded_cartan(), quantum_cartan(&g));
}

#[test]
fn module_json_round_trip() {
    let alg = algebra_of(build_zigzag(&Graph::named("A3").unwrap()).unwrap());
    let p = projective(&alg, 1).shift(3);
    let back = GradedModule::from_json(alg.clone(), p.right().clone(), &p.to_json()).unwrap();
    assert!(is_isomorphic(&p, &back).unwrap().is_iso());
    assert!(!is_isomorphic(&p, &projective(&alg, 1)).unwrap().is_iso());
}

#[test]
fn hom_from_projective_reads_off_multiplicities() {
    let alg = algebra_of(build_zigzag(&Graph::named("A2").unwrap()).unwrap());
    let pa = projective(&alg, 0);
    // Hom(P_a{i}, M) is the degree i part of e_a M
    let h = graded_hom(&pa, &simple(&alg, 0).shift(2)).unwrap();
    assert_eq!(h, "q^2".parse::<Laurent>().unwrap());
    assert_eq!(graded_hom(&pa, &simple(&alg, 1)).unwrap(), Laurent::from_int(0));
}

#[test]
fn twist_then_inverse_is_identity_on_modules() {
    let alg = algebra_of(build_zigzag(&Graph::named("A3").unwrap()).unwrap());
    let w = parse_word(&alg, "b b'").unwrap();
    for m in [projective(&alg, 0), simple(&alg, 1), projective(&alg, 2).shift(1)] {
        let c = apply_word(&alg, &w, &m).unwrap();
        assert_eq!(c.degrees(), vec![0]);
        assert!(is_isomorphic(c.term(0).unwrap(), &m).unwrap().is_iso());
    }
}

#[test]
fn laurent_text_round_trip_and_series() {
    let p: Laurent = "1 + q^2 - 3/2*q^-1".parse().unwrap();
    assert_eq!(p.to_string().parse::<Laurent>().unwrap(), p);
    let one_minus_q = "1 - q".parse::<Laurent>().unwrap();
    let s = Series::from_laurent(&one_minus_q, 5).unwrap();
    assert_eq!(s.coeff(1), zigzag::Rat::from_integer((-1).into()));
}
