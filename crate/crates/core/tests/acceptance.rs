//! The acceptance gate: every criterion prints one PASS/FAIL line. The
//! test fails on any FAIL outside `KNOWN_FAILURES`, and also when a known
//! failure starts passing, so the list cannot go stale.

mod common;

use std::time::{Duration, Instant};

use common::oracle::exhaustive_identities;
use common::props::{equivariance, structural, Findings};
use common::*;
use leibalg::algebra::gamma2;
use leibalg::catalog::{random_variant, LEIBNIZ_NAMES};
use leibalg::linalg::Matrix;
use leibalg::spaces::{
    centroid_lie, der_c_lie, der_lie, der_z_lie, gender_lie, identity, qcentroid_lie, qder_lie,
    SpaceOptions,
};
use leibalg::suite::{run_pair_suite, Verdict};
use leibalg::tensor::{tensor_algebra, tensor_centroid_compare};

type Outcome = Result<String, String>;

/// Criteria that cannot pass as stated: number, the prefix the failure
/// detail must carry (so any other failure of the same criterion is still
/// reported), and the reason.
const KNOWN_FAILURES: &[(usize, &str, &str)] = &[(
    9,
    "only Γ = QDer ∩ QΓ",
    "Γ = QDer ∩ QΓ fails on L2, N2b, N2c: diag(1,0) on L2 lies in QDer ∩ QΓ but not in Γ",
)];

const INTERSECTION_COUNTEREXAMPLES: [&str; 3] = ["L2", "N2b", "N2c"];

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn golden_centroids() -> Outcome {
    let l1 = centroid_lie(&g("L1"));
    ensure(l1 == ops(2, &[Matrix::identity(Q, 2)]), "Γ(L1) is not the scalars")?;
    let l2 = centroid_lie(&g("L2"));
    let expected = [Matrix::identity(Q, 2), m(&[&[0, 1], &[0, 0]])];
    ensure(l2.basis() == expected, format!("Γ(L2) canonical basis is {:?}", l2.basis()))?;
    Ok("dim Γ(L1) = 1, Γ(L2) = <id, E12>".into())
}

fn golden_derivations() -> Outcome {
    let l2 = g("L2");
    let der = der_lie(&l2);
    ensure(der == ops(2, &[m(&[&[2, 0], &[0, 1]]), m(&[&[0, 1], &[0, 0]])]), "Der(L2) differs")?;
    ensure(der_z_lie(&l2) == ops(2, &[m(&[&[0, 1], &[0, 0]])]), "Der_z(L2) differs")?;
    Ok("Der(L2) = <diag(2,1), E12>, Der_z(L2) = <E12>".into())
}

fn quasi_examples() -> Outcome {
    let l1 = g("L1");
    let qc = qcentroid_lie(&l1);
    let family = ops(2, &[Matrix::identity(Q, 2), m(&[&[0, 1], &[0, 0]]), m(&[&[0, 0], &[1, 0]])]);
    ensure(qc.dim() == 3 && qc == family, "QΓ(L1) is not {[[a,b],[c,a]]}")?;
    let f = m(&[&[0, 0], &[0, 1]]);
    ensure(qder_lie(&l1).contains(&f) && !der_lie(&l1).contains(&f), "diag(0,1) ∉ QDer \\ Der")?;
    let h = m(&[&[1, 1], &[0, 0]]);
    ensure(gender_lie(&l1).contains(&h) && !qder_lie(&l1).contains(&h), "[[1,1],[0,0]] ∉ GenDer \\ QDer")?;
    Ok("QΓ(L1) dim 3; both separating examples hold".into())
}

fn om5() -> Outcome {
    let om = g("OM5");
    ensure(gamma2(&om) == span(5, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]), "γ2(OM5) ≠ <a4,a5>")?;
    ensure(centroid_lie(&om) == ops(5, &[Matrix::identity(Q, 5)]), "Γ(OM5) ≠ K·id")?;
    Ok("γ2 = <a4,a5>, Γ = K·id".into())
}

fn tensor_family() -> Outcome {
    let t = tensor_algebra(&a("A4"), &g("L1p")).map_err(|e| e.to_string())?;
    let mu = m(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    ensure(*t.centroid() == ops(4, &[Matrix::identity(Q, 4), mu]), "Γ(A4 ⊗ L1') differs")?;
    Ok("Γ(A4 ⊗ L1') = {λ·id + μ(E31 + E42)}".into())
}

fn tensor_equality() -> Outcome {
    let start = Instant::now();
    let t = tensor_algebra(&a("TK3"), &g("OM5")).map_err(|e| e.to_string())?;
    let dim = t.centroid().dim();
    let elapsed = start.elapsed();
    let cmp = tensor_centroid_compare(&t).map_err(|e| e.to_string())?;
    ensure(dim == 3, format!("dim = {dim}"))?;
    ensure(cmp.equal(), "centroid ≠ embedded TK3 ⊗ K·id")?;
    ensure(elapsed < Duration::from_secs(10), format!("solve took {elapsed:?}"))?;
    Ok(format!("dim 3, equals embedded, solve {:.2}s", elapsed.as_secs_f64()))
}

fn nonunital_strict() -> Outcome {
    let t = tensor_algebra(&a("B4"), &g("OM5")).map_err(|e| e.to_string())?;
    let cmp = tensor_centroid_compare(&t).map_err(|e| e.to_string())?;
    ensure(cmp.centroid.dim() > cmp.embedded.dim(), "not strictly larger")?;
    let w = cmp.witness_outside().ok_or("no witness")?;
    let p = &t.product;
    let n = p.dim();
    let holds = (0..n).all(|i| {
        (0..n).all(|j| identity::centroid_holds(p, &w, &p.basis_vector(i), &p.basis_vector(j)))
    });
    ensure(holds, "witness fails the centroid identity")?;
    ensure(!cmp.embedded.contains(&w), "witness lies in the embedded span")?;
    Ok(format!("dim {} > embedded {}, witness re-verified", cmp.centroid.dim(), cmp.embedded.dim()))
}

fn almost_inner() -> Outcome {
    let opts = SpaceOptions::default();
    let (c, cert_c) = der_c_lie(&g("N2c"), &opts);
    let (b, cert_b) = der_c_lie(&g("N2b"), &opts);
    ensure(c.dim() == 2 && c == der_z_lie(&g("N2c")), "der_c(N2c) ≠ der_z(N2c) of dim 2")?;
    ensure(b.dim() == 1 && der_z_lie(&g("N2b")).dim() == 4, "N2b dims are not 1 and 4")?;
    for cert in [&cert_c, &cert_b] {
        ensure(cert.summary == "exhaustive mod 3,5,7: pass", format!("certificate: {}", cert.summary))?;
    }
    Ok("N2c: der_c = der_z (2); N2b: 1 vs 4; exhaustive mod 3,5,7: pass".into())
}

fn property_suite() -> Outcome {
    let mut f = Findings::default();
    for name in LEIBNIZ_NAMES {
        let base = g(name);
        structural(name, &base, &mut f);
        for seed in 1..=20 {
            let v = random_variant(&base, seed);
            let label = format!("{name}/{seed}");
            structural(&label, &v.algebra, &mut f);
            equivariance(&label, &base, &v, &mut f);
        }
    }
    if !f.failures.is_empty() {
        return Err(format!("{} failures: {:?}", f.failures.len(), f.failures));
    }
    let stray: Vec<_> = f
        .intersection_failures
        .iter()
        .filter(|l| !INTERSECTION_COUNTEREXAMPLES.contains(&l.split('/').next().unwrap()))
        .collect();
    if !stray.is_empty() {
        return Err(format!("Γ = QDer ∩ QΓ also fails on {stray:?}"));
    }
    if !f.intersection_failures.is_empty() {
        return Err(format!(
            "only Γ = QDer ∩ QΓ fails: {} checks, {} algebras ({}, …)",
            f.checks,
            f.intersection_failures.len(),
            f.intersection_failures[..3].join(", ")
        ));
    }
    Ok(format!("{} checks", f.checks))
}

fn direct_sums() -> Outcome {
    let l1 = run_pair_suite(&g("L1"), &g("L1")).map_err(|e| e.to_string())?;
    for r in &l1 {
        ensure(r.verdict == Verdict::Verified, format!("(L1, L1) {}: {}", r.id, r.verdict))?;
        if r.id != "sum-lie-centre" {
            ensure(r.dims["sum"] == r.dims["first"] + r.dims["second"], format!("{} dims", r.id))?;
        }
    }
    let l2 = run_pair_suite(&g("L2"), &g("L2")).map_err(|e| e.to_string())?;
    ensure(l2[0].verdict == Verdict::Verified, "(L2, L2) Z_Lie split not verified")?;
    ensure(l2[1..].iter().all(|r| r.verdict == Verdict::Skipped), "(L2, L2) did not skip (ii)")?;
    Ok("(L1, L1) five block sums verified; (L2, L2) (i) verified, (ii) skipped".into())
}

fn finite_field_oracle() -> Outcome {
    let (mut elements, mut points) = (0, 0);
    for name in ["L1", "L2", "N2b", "N2c"] {
        let (e, p, failures) = exhaustive_identities(name, 5);
        if let Some(first) = failures.first() {
            return Err(format!("{name}: {} failures, first {first}", failures.len()));
        }
        elements += e;
        points += p;
    }
    Ok(format!("{elements} basis elements, {points} point pairs over F_5"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("golden centroid bases", golden_centroids),
        ("golden derivation bases", golden_derivations),
        ("quasi-centroid and separating examples", quasi_examples),
        ("OM5 γ2 and centroid", om5),
        ("A4 ⊗ L1' centroid family", tensor_family),
        ("TK3 ⊗ OM5 equality", tensor_equality),
        ("B4 ⊗ OM5 strictness", nonunital_strict),
        ("almost inner dichotomy", almost_inner),
        ("property suite", property_suite),
        ("direct sums", direct_sums),
        ("finite-field oracle", finite_field_oracle),
    ];
    let mut unexpected = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        let known = KNOWN_FAILURES.iter().find(|(n, _, _)| *n == k);
        match run() {
            Ok(detail) => {
                println!("criterion {k:>2} PASS  {title}: {detail}");
                if known.is_some() {
                    unexpected.push(format!("criterion {k} now passes; drop it from KNOWN_FAILURES"));
                }
            }
            Err(detail) => {
                println!("criterion {k:>2} FAIL  {title}: {detail}");
                match known {
                    Some((_, prefix, why)) if detail.starts_with(prefix) => {
                        println!("             known: {why}")
                    }
                    _ => unexpected.push(format!("criterion {k}: {detail}")),
                }
            }
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
