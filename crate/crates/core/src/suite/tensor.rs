use super::report::{outside, TheoremReport};
use crate::algebra::AssocCommAlgebra;
use crate::error::Result;
use crate::linalg::{unit_vector, Subspace};
use crate::tensor::{
    sigma_is_isomorphism, tensor_centroid_compare, tensor_fiber_components, tensor_gamma2,
    TensorAlgebra,
};

/// Some `b` with `span{1, b, b², …} = A`.
fn monogenic(a: &AssocCommAlgebra) -> bool {
    let Some(unit) = a.unit() else { return false };
    let n = a.dim();
    (0..n).any(|i| {
        let b = unit_vector(a.field(), n, i);
        let mut powers = vec![unit.to_vec()];
        for _ in 1..n {
            let next = a.multiply(powers.last().unwrap(), &b);
            powers.push(next);
        }
        Subspace::span(a.field(), n, powers).is_ok_and(|s| s.is_full())
    })
}

pub fn run_tensor_suite(t: &TensorAlgebra) -> Result<Vec<TheoremReport>> {
    let cmp = tensor_centroid_compare(t)?;
    let dims = |r: TheoremReport| {
        r.space_dim("centroid", &cmp.centroid)
            .space_dim("assoc_centroid", &cmp.assoc_centroid)
            .space_dim("g_centroid", &cmp.g_centroid)
            .space_dim("embedded", &cmp.embedded)
    };
    let mut out = Vec::new();

    let mut r = dims(TheoremReport::new("tensor-embedded-inclusion"))
        .reason("Γ(A) ⊗ centroid(g) ⊆ centroid(A ⊗ g)");
    if let Some(m) = outside(&cmp.embedded, &cmp.centroid) {
        r = r.refute("embedded element outside the centroid", &m);
    }
    out.push(r);

    let id = "tensor-psi-inclusion";
    out.push(if !cmp.unital {
        TheoremReport::skipped(id, "A has no unit")
    } else {
        let mut r = TheoremReport::new(id)
            .reason("A ⊗ psi + End(A) ⊗ der_z ⊆ centroid(A ⊗ g)")
            .space_dim("psi_part", &cmp.psi_part);
        if let Some(m) = outside(&cmp.psi_part, &cmp.centroid) {
            r = r.refute("element outside the centroid", &m);
        }
        r
    });

    let id = "tensor-equality";
    out.push(if !cmp.equality_hypotheses() {
        let why = if !cmp.unital {
            "A has no unit".to_string()
        } else if !cmp.gamma2_nonzero {
            "gamma2(g) = 0".to_string()
        } else {
            format!("centroid(g) has dim {}, not scalars", cmp.g_centroid.dim())
        };
        dims(TheoremReport::skipped(id, why))
    } else {
        let mut r = dims(TheoremReport::new(id)).reason(if monogenic(&t.a) {
            "centroid(A ⊗ g) = Γ(A) ⊗ K·id ≅ A; A = K[t]/(f) is a finite shadow of the polynomial case"
        } else {
            "centroid(A ⊗ g) = Γ(A) ⊗ K·id ≅ A"
        });
        if let Some(m) = cmp.witness_outside() {
            r = r.refute("centroid element outside the embedded span", &m);
        } else if cmp.centroid.dim() != t.a.dim() {
            r = r.refute_plain("dim centroid(A ⊗ g) ≠ dim A");
        }
        r
    });

    let id = "tensor-nonunital-strict";
    out.push(if cmp.unital || !cmp.gamma2_nonzero || !cmp.g_centroid_scalar {
        TheoremReport::skipped(id, "needs A without unit, gamma2(g) ≠ 0 and scalar centroid(g)")
    } else {
        let r = dims(TheoremReport::new(id))
            .reason("centroid(A ⊗ g) is strictly larger than the embedded span");
        match cmp.witness_outside() {
            Some(m) => r.attach("centroid element outside the embedded span", &m),
            None => r.refute_plain("centroid(A ⊗ g) equals the embedded span"),
        }
    });

    let id = "tensor-fiber-components";
    out.push(if !cmp.unital {
        TheoremReport::skipped(id, "A has no unit")
    } else {
        let mut r = TheoremReport::new(id).reason("each phi_i lies in centroid(g)");
        for phi in cmp.centroid.basis() {
            if tensor_fiber_components(t, phi).is_err() {
                r = r.refute("centroid element with a fiber component outside centroid(g)", phi);
                break;
            }
        }
        r
    });

    let id = "tensor-gamma2";
    out.push(if !cmp.unital {
        TheoremReport::skipped(id, "A has no unit, so A·A may be smaller than A")
    } else {
        let c = tensor_gamma2(t);
        let mut r = TheoremReport::new(id)
            .reason("gamma2(A ⊗ g) = A ⊗ gamma2(g)")
            .dim("product", c.product.dim())
            .dim("block", c.block.dim());
        if !c.equal() {
            let v = c
                .product
                .basis_vectors()
                .into_iter()
                .find(|v| !c.block.contains(v).unwrap())
                .or_else(|| c.block.basis_vectors().into_iter().find(|v| !c.product.contains(v).unwrap()))
                .expect("unequal subspaces differ on a basis vector");
            r = r.refute_vector("in one side only", &v);
        }
        r
    });

    out.push(
        TheoremReport::new("tensor-finite-image")
            .reason("vacuous: A is finite-dimensional, so every map has finite image"),
    );

    let id = "tensor-sigma-iso";
    out.push(match sigma_is_isomorphism(&t.a) {
        None => TheoremReport::skipped(id, "A has no unit"),
        Some(ok) => {
            let r = TheoremReport::new(id)
                .reason("f ↦ f(1) is a bijection Γ(A) → A")
                .space_dim("assoc_centroid", &cmp.assoc_centroid)
                .dim("a", t.a.dim());
            if ok {
                r
            } else {
                r.refute_plain("f ↦ f(1) is not bijective")
            }
        }
    });
    Ok(out)
}
