mod common;

use common::{a, g, witness_matrix};
use leibalg::catalog::LEIBNIZ_NAMES;
use leibalg::linalg::is_zero_vector;
use leibalg::spaces::{centroid_lie, qcentroid_lie, qder_lie, SpaceOptions};
use leibalg::suite::{
    run_pair_suite, run_suite, run_tensor_suite, AlgebraContext, Group, TheoremReport, Verdict,
};
use leibalg::tensor::tensor_algebra;

fn suite(name: &str) -> Vec<TheoremReport> {
    let ctx = AlgebraContext::new(name, g(name), SpaceOptions::default());
    run_suite(&ctx, &Group::ALL)
}

fn find<'a>(reports: &'a [TheoremReport], id: &str) -> &'a TheoremReport {
    reports.iter().find(|r| r.id == id).unwrap_or_else(|| panic!("no report {id}"))
}

#[test]
fn n2c_equality_holds_with_both_sides_true() {
    let reports = suite("N2c");
    let r = find(&reports, "derc-equal-iff");
    assert_eq!(r.verdict, Verdict::Verified);
    assert!(r.reason.contains("der_c = der_z: true"));
    assert!(r.reason.contains("Hom(g/Z_Lie, gamma2): true"));
    assert_eq!(r.dims["der_c"], 2);
    assert_eq!(r.dims["hom"], 2);
    assert_eq!(find(&reports, "derc-equal-dim-one").verdict, Verdict::Verified);
    assert_eq!(find(&reports, "derc-intersection-dim-one").verdict, Verdict::Verified);
}

#[test]
fn n2b_equality_holds_with_both_sides_false() {
    let reports = suite("N2b");
    let r = find(&reports, "derc-equal-iff");
    assert_eq!(r.verdict, Verdict::Verified);
    assert!(r.reason.contains("der_c = der_z: false"));
    assert_eq!((r.dims["der_c"], r.dims["der_z"]), (1, 4));
    assert!(!find(&reports, "derc-equal-dim-one").applicable);
}

#[test]
fn l1_inner_derivation_checks_not_applicable() {
    let reports = suite("L1");
    for id in ["ider-inclusions", "derc-equal-iff", "derc-equal-dim-one", "derc-intersection-dim-one"] {
        let r = find(&reports, id);
        assert!(!r.applicable, "{id}");
        assert!(r.reason.contains("not contained in Z(g)"), "{id}");
    }
    for r in reports.iter().filter(|r| r.applicable) {
        assert_eq!(r.verdict, Verdict::Verified, "{}", r.id);
    }
}

#[test]
fn abelian_algebra_verifies_everything_applicable() {
    for r in suite("ABEL3") {
        assert_ne!(r.verdict, Verdict::Refuted, "{}", r.id);
    }
}

/// The only refutation on the catalog is the intersection statement for
/// algebras with `Z_Lie ∩ γ_2 ≠ 0`; its witnesses must re-verify.
#[test]
fn refutations_are_confined_and_reverify() {
    for name in LEIBNIZ_NAMES {
        let alg = g(name);
        for r in suite(name).iter().filter(|r| r.is_refuted()) {
            assert_eq!(r.id, "centroid-intersection", "{name}");
            assert!(["L2", "N2b", "N2c"].contains(name), "{name}");
            let phi = witness_matrix(&r.witnesses[0]);
            assert!(qder_lie(&alg).contains(&phi));
            assert!(qcentroid_lie(&alg).contains(&phi));
            assert!(!centroid_lie(&alg).contains(&phi));
            let residual = witness_matrix(&r.witnesses[1]);
            assert!(!is_zero_vector(&residual.row(0)));
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let first = serde_json::to_string(&suite("OM5")).unwrap();
    let second = serde_json::to_string(&suite("OM5")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn l1_pair_splits_into_blocks() {
    let reports = run_pair_suite(&g("L1"), &g("L1")).unwrap();
    assert_eq!(reports.len(), 6);
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Verified, "{}", r.id);
    }
    let dims = |id: &str| {
        let r = find(&reports, id);
        (r.dims["first"], r.dims["second"], r.dims["sum"])
    };
    assert_eq!(dims("sum-der"), (1, 1, 2));
    assert_eq!(dims("sum-centroid"), (1, 1, 2));
    assert_eq!(dims("sum-qcentroid"), (3, 3, 6));
    assert_eq!(dims("sum-qder"), (2, 2, 4));
    assert_eq!(dims("sum-gender"), (4, 4, 8));
}

#[test]
fn l2_pair_skips_block_decompositions() {
    let reports = run_pair_suite(&g("L2"), &g("L2")).unwrap();
    let centre = find(&reports, "sum-lie-centre");
    assert_eq!(centre.verdict, Verdict::Verified);
    assert_eq!(centre.dims["z_lie"], 2);
    assert!(reports[1..].iter().all(|r| r.verdict == Verdict::Skipped));
    let abel = run_pair_suite(&g("ABEL1"), &g("ABEL1")).unwrap();
    assert_eq!(find(&abel, "sum-lie-centre").verdict, Verdict::Verified);
}

#[test]
fn tensor_suites() {
    let t = tensor_algebra(&a("A4"), &g("L1p")).unwrap();
    let reports = run_tensor_suite(&t).unwrap();
    assert_eq!(find(&reports, "tensor-embedded-inclusion").verdict, Verdict::Verified);
    let eq = find(&reports, "tensor-equality");
    assert_eq!(eq.verdict, Verdict::Verified);
    assert_eq!(eq.dims["g_centroid"], 1);

    let t = tensor_algebra(&a("TK3"), &g("OM5")).unwrap();
    let reports = run_tensor_suite(&t).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Verdict::Verified || !r.applicable));
    assert_eq!(find(&reports, "tensor-equality").dims["centroid"], 3);

    let t = tensor_algebra(&a("B4"), &g("OM5")).unwrap();
    let reports = run_tensor_suite(&t).unwrap();
    assert_eq!(find(&reports, "tensor-embedded-inclusion").verdict, Verdict::Verified);
    assert_eq!(find(&reports, "tensor-equality").verdict, Verdict::Skipped);
    let strict = find(&reports, "tensor-nonunital-strict");
    assert_eq!(strict.verdict, Verdict::Verified);
    assert_eq!((strict.dims["centroid"], strict.dims["embedded"]), (57, 3));
    let w = witness_matrix(&strict.witnesses[0]);
    assert!(t.centroid().contains(&w));
    let cmp = leibalg::tensor::tensor_centroid_compare(&t).unwrap();
    assert!(!cmp.embedded.contains(&w));
}
