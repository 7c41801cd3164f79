//! The acceptance suite: one exact check per criterion.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::adjoint::{
    build_adjoint_rep, verify_decategorification, verify_dualities, verify_euler_form, verify_form_and_involutions,
    verify_functor_relations, verify_uq_relations, Categorified,
};
use crate::braid::{verify_braid_relations, verify_class_action};
use crate::mckay::{build_group, cross_product_matches, sym_power_table};
use crate::modrep::{
    algebra_of, decompose, is_indecomposable, matches_up_to_shift, projective, random_quotient_module,
    right_projective, tensor_over, typea_indecomposables, GradedModule,
};
use crate::report::Report;
use crate::roots::{all_orientations, generate_roots, Graph};
use crate::scalar::{int, Rat};
use crate::zigzag::cartan::{eval_matrix_at_minus_one, nonnegative_in_minus_q};
use crate::zigzag::{
    build_skew, build_zigzag, cartan_inverse, compare_add_minus, path_algebra, quantum_cartan, trivial_extension,
    trivial_extension_to_zigzag, SkewCoefficients,
};

/// Result of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {} ({} ms): {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.title,
            self.millis,
            self.detail
        )
    }

    /// Timing is left out so that the document is reproducible.
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "status": if self.pass { "pass" } else { "fail" },
            "detail": self.detail,
        })
    }
}

pub const TITLES: [&str; 16] = [
    "zigzag graded dimensions",
    "symmetric trace form",
    "projective tensor dimensions",
    "quantum Cartan at q = -1",
    "Cartan times dual Cartan",
    "sign of inverse Cartan entries",
    "quantum group relations",
    "functor isomorphisms and adjunctions",
    "Euler form",
    "dualities",
    "braid relations",
    "decategorified braid action",
    "type A indecomposables",
    "trivial extension",
    "McKay multiplicity identity",
    "cross-product Cartan matrix",
];

/// Outcome of a check: `Ok(detail)` on success, `Err(detail)` otherwise.
type Check = Result<String, String>;

fn graph(name: &str) -> Result<Graph, String> {
    Graph::named(name).map_err(|e| e.to_string())
}

fn from_report(r: Report) -> Check {
    match r.failures().next() {
        None => Ok(format!("{} checks", r.len())),
        Some(f) => Err(format!(
            "{} of {} checks fail; first: {} on {}{}",
            r.failures().count(),
            r.len(),
            f.relation,
            f.object,
            f.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default()
        )),
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

const DIM_GRAPHS: [&str; 10] = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "affA2", "affD4"];

fn c1() -> Check {
    for name in DIM_GRAPHS {
        let g = graph(name)?;
        let a = build_zigzag(&g).map_err(|e| e.to_string())?;
        let dims = a.graded_dims();
        let at = |d| dims.get(&d).copied().unwrap_or(0);
        let (v, e) = (g.num_vertices(), g.num_edges());
        ensure((at(0), at(1), at(2)) == (v, 2 * e, v) && dims.len() <= 3, || {
            format!("{name}: graded dims {dims:?}")
        })?;
    }
    Ok(format!("{} graphs", DIM_GRAPHS.len()))
}

fn c2() -> Check {
    for name in DIM_GRAPHS {
        let a = build_zigzag(&graph(name)?).map_err(|e| e.to_string())?;
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let xy = a.trace_of(a.mul_basis(x, y));
                let yx = a.trace_of(a.mul_basis(y, x));
                ensure(xy == yx, || format!("{name}: tr(b{x} b{y}) != tr(b{y} b{x})"))?;
            }
        }
        ensure(a.gram_matrix().is_invertible(), || format!("{name}: degenerate trace form"))?;
    }
    Ok(format!("{} graphs", DIM_GRAPHS.len()))
}

fn c3() -> Check {
    let mut count = 0;
    for name in ["A3", "D4"] {
        let g = graph(name)?;
        let alg = algebra_of(build_zigzag(&g).map_err(|e| e.to_string())?);
        for a in 0..g.num_vertices() {
            for b in 0..g.num_vertices() {
                let t = tensor_over(&right_projective(&alg, a), &projective(&alg, b)).map_err(|e| e.to_string())?;
                let dims: Vec<(i32, usize)> = t.module.graded_dims().into_iter().collect();
                let want = if a == b {
                    vec![(0, 1), (2, 1)]
                } else if g.adjacent(a, b) {
                    vec![(1, 1)]
                } else {
                    vec![]
                };
                ensure(dims == want, || format!("{name} ({a},{b}): {dims:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} vertex pairs"))
}

const CARTAN_GRAPHS: [&str; 15] = [
    "A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "E7", "E8", "affA2", "affD4", "affE6", "affE7", "affE8",
];

fn c4() -> Check {
    for name in CARTAN_GRAPHS {
        let g = graph(name)?;
        let at = eval_matrix_at_minus_one(&quantum_cartan(&g));
        let lie: Vec<Vec<Rat>> = g.cartan_matrix().iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        ensure(at == lie, || format!("{name}: C(-1) differs from the Cartan matrix"))?;
    }
    Ok(format!("{} graphs", CARTAN_GRAPHS.len()))
}

fn c5() -> Check {
    let cases = [("affA2", 12), ("affD4", 12), ("affE6", 6), ("affE7", 6), ("affE8", 6)];
    for (name, dual_order) in cases {
        let g = graph(name)?;
        let r = compare_add_minus(&g, dual_order).map_err(|e| e.to_string())?;
        ensure(r.dual_identity && r.inverse_identity && r.agree, || {
            format!("{name} to order {dual_order}: {r:?}")
        })?;
        let full = compare_add_minus(&g, 12).map_err(|e| e.to_string())?;
        ensure(full.inverse_identity, || format!("{name}: C * C^-1 != I to order 12"))?;
    }
    Ok("affA2, affD4 to order 12; affE6..affE8 dual to order 6, inverse to order 12".into())
}

fn c6() -> Check {
    for name in ["affA2", "affD4", "affE6"] {
        let inv = cartan_inverse(&graph(name)?, 12).map_err(|e| e.to_string())?;
        ensure(nonnegative_in_minus_q(&inv.entries), || format!("{name}: negative coefficient"))?;
    }
    Ok("affA2, affD4, affE6 to order 12".into())
}

fn c7() -> Check {
    let mut total = Report::new();
    for name in ["A1", "A2", "A3", "D4"] {
        let rs = generate_roots(&graph(name)?).map_err(|e| e.to_string())?;
        total.extend(verify_uq_relations(&build_adjoint_rep(&rs)));
    }
    from_report(total)
}

fn categorified(name: &str) -> Result<Categorified, String> {
    Categorified::new(&graph(name)?).map_err(|e| e.to_string())
}

fn c8() -> Check {
    let mut total = Report::new();
    for name in ["A2", "A3"] {
        let c = categorified(name)?;
        total.extend(verify_functor_relations(&c).map_err(|e| e.to_string())?);
        total.extend(verify_decategorification(&c).map_err(|e| e.to_string())?);
    }
    from_report(total)
}

fn c9() -> Check {
    let mut total = Report::new();
    for name in ["A2", "A3"] {
        total.extend(verify_euler_form(&categorified(name)?).map_err(|e| e.to_string())?);
    }
    from_report(total)
}

fn c10() -> Check {
    let mut total = Report::new();
    for name in ["A2", "A3"] {
        let c = categorified(name)?;
        total.extend(verify_dualities(&c).map_err(|e| e.to_string())?);
        total.extend(verify_form_and_involutions(&c.rep));
    }
    from_report(total)
}

fn c11() -> Check {
    let mut total = Report::new();
    for name in ["A2", "A3"] {
        let a = algebra_of(build_zigzag(&graph(name)?).map_err(|e| e.to_string())?);
        total.extend(verify_braid_relations(&a).map_err(|e| e.to_string())?);
    }
    let g = Graph::cycle(3).map_err(|e| e.to_string())?;
    let skew = build_skew(&g, &SkewCoefficients::alternating_cycle(3)).map_err(|e| e.to_string())?;
    total.extend(verify_braid_relations(&algebra_of(skew)).map_err(|e| e.to_string())?);
    from_report(total)
}

fn c12() -> Check {
    let mut total = Report::new();
    for name in ["A2", "A3"] {
        total.extend(verify_class_action(&categorified(name)?).map_err(|e| e.to_string())?);
    }
    from_report(total)
}

fn c13() -> Check {
    for n in 1..=3usize {
        let alg = algebra_of(build_zigzag(&Graph::chain(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?);
        let list = typea_indecomposables(&alg).map_err(|e| e.to_string())?;
        ensure(list.len() == n * n + n, || format!("A{n}: {} modules", list.len()))?;
        for (i, m) in list.iter().enumerate() {
            ensure(is_indecomposable(m).map_err(|e| e.to_string())?, || format!("A{n}: module {i} decomposes"))?;
            let earlier: Vec<GradedModule> = list[..i].to_vec();
            let dup = matches_up_to_shift(m, &earlier).map_err(|e| e.to_string())?;
            ensure(dup.is_none(), || format!("A{n}: module {i} repeats {dup:?}"))?;
        }
    }
    let alg = algebra_of(build_zigzag(&graph("A2")?).map_err(|e| e.to_string())?);
    let list = typea_indecomposables(&alg).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for k in 0..50 {
        let m = random_quotient_module(&alg, &mut rng, 8);
        for s in decompose(&m).map_err(|e| e.to_string())? {
            let hit = matches_up_to_shift(&s.module, &list).map_err(|e| e.to_string())?;
            ensure(hit.is_some(), || format!("random module {k}: summand not in the list"))?;
        }
    }
    Ok("2, 6, 12 indecomposables; 50 random modules over A2 decompose into the list".into())
}

fn c14() -> Check {
    let mut count = 0;
    for name in ["A3", "D4"] {
        let g = graph(name)?;
        let a = build_zigzag(&g).map_err(|e| e.to_string())?;
        for o in all_orientations(&g) {
            let b = path_algebra(&o, true).map_err(|e| e.to_string())?;
            let t = trivial_extension(&b, 2).map_err(|e| e.to_string())?;
            let phi = trivial_extension_to_zigzag(&o, &t, &a).map_err(|e| e.to_string())?;
            phi.check_isomorphism(&t, &a).map_err(|e| format!("{name} {:?}: {e}", o.arrows))?;
            count += 1;
        }
    }
    Ok(format!("{count} orientations"))
}

fn c15(include_slow: bool) -> Check {
    let mut groups = vec!["Q8", "2T"];
    if include_slow {
        groups.push("2I");
    }
    let mut rows = 0;
    for name in &groups {
        let g = build_group(name).map_err(|e| e.to_string())?;
        for r in sym_power_table(&g, 20, true, None).map_err(|e| e.to_string())? {
            ensure(r.matches(), || format!("{name}: {r:?}"))?;
            rows += 1;
        }
    }
    Ok(format!("{} for n <= 20, {rows} multiplicities", groups.join(", ")))
}

fn c16() -> Check {
    for name in ["Q8", "2T"] {
        let g = build_group(name).map_err(|e| e.to_string())?;
        ensure(cross_product_matches(&g).map_err(|e| e.to_string())?, || format!("{name}: matrices differ"))?;
    }
    Ok("Q8, 2T".into())
}

/// Runs criterion `id` (1..=16). `include_slow` adds the 2I case of 15.
pub fn run(id: u8, include_slow: bool) -> Outcome {
    let start = Instant::now();
    let res = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        13 => c13(),
        14 => c14(),
        15 => c15(include_slow),
        16 => c16(),
        _ => Err(format!("no criterion {id}")),
    };
    let title = TITLES.get((id as usize).wrapping_sub(1)).copied().unwrap_or("unknown");
    let (pass, detail) = match res {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, title, pass, detail, millis: start.elapsed().as_millis() }
}

pub fn run_all(include_slow: bool) -> Vec<Outcome> {
    (1..=16).map(|id| run(id, include_slow)).collect()
}
