mod common;

use common::props::{equivariance, structural, Findings};
use leibalg::catalog::{leibniz, parse_algebra, random_variant, Algebra, AlgebraDocument, LEIBNIZ_NAMES};
use leibalg::spaces::{centroid_lie, der_lie, qder_lie};
use leibalg::FieldSpec;
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rational;
const VARIANTS: u64 = 20;

#[test]
fn catalog_and_variants_satisfy_structural_properties() {
    let mut f = Findings::default();
    for name in LEIBNIZ_NAMES {
        let g = leibniz(name, Q).unwrap();
        structural(name, &g, &mut f);
        for seed in 1..=VARIANTS {
            let v = random_variant(&g, seed);
            let label = format!("{name}/{seed}");
            structural(&label, &v.algebra, &mut f);
            equivariance(&label, &g, &v, &mut f);
        }
    }
    assert!(f.failures.is_empty(), "{:#?}", f.failures);
    // The intersection statement fails exactly on the algebras where it is
    // false, and in every basis of them.
    let mut bad: Vec<&str> = f
        .intersection_failures
        .iter()
        .map(|l| l.split('/').next().unwrap())
        .collect();
    bad.dedup();
    assert_eq!(bad, ["L2", "N2b", "N2c"]);
    assert_eq!(f.intersection_failures.len(), 3 * (VARIANTS as usize + 1));
}

fn small_leibniz() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["L1", "L2", "L1p", "N2b", "N2c"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn equivariance_under_any_seed(name in small_leibniz(), seed in any::<u64>()) {
        let g = leibniz(name, Q).unwrap();
        let v = random_variant(&g, seed);
        let mut f = Findings::default();
        equivariance(name, &g, &v, &mut f);
        structural(name, &v.algebra, &mut f);
        prop_assert!(f.failures.is_empty(), "{:?}", f.failures);
    }

    #[test]
    fn variants_survive_document_round_trip(name in small_leibniz(), seed in 0u64..1000) {
        let g = leibniz(name, Q).unwrap();
        let v = random_variant(&g, seed);
        let doc = AlgebraDocument::from_algebra("v", &Algebra::Leibniz(v.algebra.clone()));
        let (_, back) = parse_algebra(&doc.to_json()).unwrap();
        let back = back.into_leibniz("v").unwrap();
        prop_assert_eq!(back.table(), v.algebra.table());
        prop_assert_eq!(der_lie(&back), der_lie(&v.algebra));
    }

    #[test]
    fn centroid_sits_in_quasi_derivations_mod_p(
        name in small_leibniz(),
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
    ) {
        let g = leibniz(name, FieldSpec::prime(p).unwrap()).unwrap();
        prop_assert!(centroid_lie(&g).leq(&qder_lie(&g)).unwrap());
    }
}

#[test]
fn catalog_documents_round_trip() {
    for e in leibalg::catalog::ENTRIES {
        let alg = leibalg::catalog::load(e.name, Q).unwrap();
        let doc = AlgebraDocument::from_algebra(e.name, &alg);
        let (name, back) = parse_algebra(&doc.to_json()).unwrap();
        assert_eq!(name, e.name);
        assert_eq!(back.table(), alg.table());
        assert_eq!(AlgebraDocument::from_algebra(e.name, &back), doc);
    }
}
