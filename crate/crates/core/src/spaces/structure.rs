use serde::Serialize;

use super::system::{centroid_lie, der_z_lie};
use super::{identity, OperatorSpace};
use crate::algebra::{gamma2, lie_centre, quotient, Ideal, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{nullspace, unit_vector, Matrix, RowReducer, Subspace};

/// Matrices of `L_{e_i} = [e_i, -]` and `R_{e_i} = [-, e_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultOperators {
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

pub fn mult_operators(g: &LeibnizAlgebra) -> MultOperators {
    let n = g.dim();
    MultOperators {
        left: (0..n).map(|i| g.left_mult(&g.basis_vector(i))).collect(),
        right: (0..n).map(|i| g.right_mult(&g.basis_vector(i))).collect(),
    }
}

/// `(R + L)(g) = span{R_{e_i} + L_{e_i}}`.
pub fn rl_span(g: &LeibnizAlgebra) -> OperatorSpace {
    let ops = mult_operators(g);
    OperatorSpace::span(
        g.field(),
        g.dim(),
        ops.left.iter().zip(&ops.right).map(|(l, r)| l.add(r)),
    )
    .unwrap()
}

/// First triple `(i, j, k)` with `[[e_i,e_j]_Lie, e_k] ≠ 0` or
/// `[e_k, [e_i,e_j]_Lie] ≠ 0`, i.e. a witness against `γ_2^Lie ⊆ Z`.
pub fn gamma2_central_witness(g: &LeibnizAlgebra) -> Option<(usize, usize, usize)> {
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let l = g.lie_product(i, j);
            for k in 0..n {
                let e = g.basis_vector(k);
                if !crate::linalg::is_zero_vector(&g.bracket(l, &e))
                    || !crate::linalg::is_zero_vector(&g.bracket(&e, l))
                {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// `IDer^Lie(g) = {d_x = [x, -]_Lie}`, defined when `γ_2^Lie ⊆ Z(g)`.
pub fn ider_lie(g: &LeibnizAlgebra) -> Result<OperatorSpace> {
    if let Some((i, j, k)) = gamma2_central_witness(g) {
        let t = g.table();
        return Err(Error::PreconditionViolated(format!(
            "[[{a},{b}]_Lie, {c}] or [{c}, [{a},{b}]_Lie] is non-zero, so γ2 is not central",
            a = t.name(i),
            b = t.name(j),
            c = t.name(k)
        )));
    }
    let space = rl_span(g);
    for d in space.basis() {
        for p in 0..g.dim() {
            for q in 0..g.dim() {
                if !identity::der_holds(g, d, &g.basis_vector(p), &g.basis_vector(q)) {
                    return Err(Error::Internal("inner map is not a Lie-derivation".into()));
                }
            }
        }
    }
    Ok(space)
}

/// `Γ^Lie = Der_z^Lie ⊕ Ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidDecomposition {
    pub centroid: OperatorSpace,
    pub der_z: OperatorSpace,
    /// Centroid basis elements whose restrictions to `γ_2^Lie` are a
    /// maximal independent family.
    pub psi: Vec<Matrix>,
}

pub fn centroid_decomposition(g: &LeibnizAlgebra) -> Result<CentroidDecomposition> {
    let centroid = centroid_lie(g);
    let der_z = der_z_lie(g);
    let gamma = gamma2(g).basis_vectors();
    let n = g.dim();
    let mut red = RowReducer::new(g.field(), n * gamma.len());
    let mut psi = Vec::new();
    for phi in centroid.basis() {
        let restricted: Vec<Scalar> = gamma.iter().flat_map(|v| phi.apply(v)).collect();
        if !gamma.is_empty() && red.push(restricted)? {
            psi.push(phi.clone());
        }
    }
    let psi_space = OperatorSpace::span(g.field(), n, psi.iter().cloned())?;
    if centroid.dim() != der_z.dim() + psi.len() || !psi_space.intersect(&der_z)?.canonical().is_zero() {
        return Err(Error::Internal("centroid is not Der_z ⊕ Ψ".into()));
    }
    if !der_z.sum(&psi_space)?.eq(&centroid) {
        return Err(Error::Internal("Der_z + Ψ does not span the centroid".into()));
    }
    Ok(CentroidDecomposition {
        centroid,
        der_z,
        psi,
    })
}

/// The map induced by `f` on `g / I`, in the quotient basis; requires
/// `f(I) ⊆ I`.
pub fn pushforward(g: &LeibnizAlgebra, ideal: &Ideal, f: &Matrix) -> Result<Matrix> {
    ideal.require_two_sided()?;
    let i = ideal.carrier();
    for v in i.basis_vectors() {
        if !i.contains(&f.apply(&v))? {
            return Err(Error::NotInvariant);
        }
    }
    let comp = i.complement_coords();
    let n = g.dim();
    let cols: Vec<Vec<Scalar>> = comp
        .iter()
        .map(|&c| i.quotient_coords(&f.apply(&unit_vector(g.field(), n, c))))
        .collect();
    Ok(Matrix::from_columns(g.field(), comp.len(), &cols))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushforwardReport {
    pub centroid_dim: usize,
    /// Centroid basis elements leaving `I` invariant.
    pub preserving: usize,
    /// `π` carries `(R + L)(g)` onto `(R + L)(g / I)`.
    pub rl_onto: bool,
    /// Every pushed-forward map lies in `Γ^Lie(g / I)`.
    pub images_in_centroid: bool,
    /// `I = Z_Lie` and every centroid element preserves it; `None` when `I ≠ Z_Lie`.
    pub all_preserve_z_lie: Option<bool>,
    /// `I ⊆ Z_Lie`: every preserving centroid element with `f̄ = 0` kills `γ_2^Lie`.
    /// `None` when `I ⊄ Z_Lie`.
    pub zero_image_kills_gamma2: Option<bool>,
}

impl PushforwardReport {
    pub fn holds(&self) -> bool {
        self.rl_onto
            && self.images_in_centroid
            && self.all_preserve_z_lie.unwrap_or(true)
            && self.zero_image_kills_gamma2.unwrap_or(true)
    }
}

pub fn centroid_pushforward(g: &LeibnizAlgebra, ideal: &Ideal) -> Result<PushforwardReport> {
    ideal.require_two_sided()?;
    let q = quotient(g, ideal)?;
    let h = &q.algebra;
    let centroid = centroid_lie(g);
    let z = lie_centre(g);
    let i = ideal.carrier();

    // Centroid elements preserving I form a subspace; cut it out linearly.
    let n = g.dim();
    let ann = i.annihilator().basis_vectors();
    let mut red = RowReducer::new(g.field(), centroid.dim());
    for v in i.basis_vectors() {
        let images: Vec<Vec<Scalar>> = centroid.basis().iter().map(|f| f.apply(&v)).collect();
        for w in &ann {
            red.push(images.iter().map(|u| crate::linalg::dot(w, u)).collect())?;
        }
    }
    let coeffs = red.kernel().basis_vectors();
    let combine = |c: &[Scalar]| {
        centroid
            .basis()
            .iter()
            .zip(c)
            .fold(Matrix::zeros(g.field(), n, n), |acc, (f, s)| acc.add(&f.scale(s)))
    };
    let preserving: Vec<Matrix> = coeffs.iter().map(|c| combine(c)).collect();
    let bars: Vec<Matrix> = preserving
        .iter()
        .map(|f| pushforward(g, ideal, f))
        .collect::<Result<_>>()?;

    let rl_bar = OperatorSpace::span(
        g.field(),
        h.dim(),
        rl_span(g).basis().iter().map(|m| pushforward(g, ideal, m)).collect::<Result<Vec<_>>>()?,
    )?;
    let rl_onto = rl_bar == rl_span(h);
    let target = centroid_lie(h);
    let images_in_centroid = bars.iter().all(|b| target.contains(b));

    let all_preserve_z_lie = (i == &z).then(|| preserving.len() == centroid.dim());
    let zero_image_kills_gamma2 = if i.leq(&z)? {
        // Combinations Σ c_k f_k with Σ c_k f̄_k = 0.
        let cols: Vec<Vec<Scalar>> = bars.iter().map(Matrix::vectorize).collect();
        let m = Matrix::from_columns(g.field(), h.dim() * h.dim(), &cols);
        let gamma = gamma2(g).basis_vectors();
        let ok = nullspace(&m)?.basis_vectors().iter().all(|c| {
            let f = preserving
                .iter()
                .zip(c)
                .fold(Matrix::zeros(g.field(), n, n), |acc, (f, s)| acc.add(&f.scale(s)));
            gamma.iter().all(|v| crate::linalg::is_zero_vector(&f.apply(v)))
        });
        Some(ok)
    } else {
        None
    };
    Ok(PushforwardReport {
        centroid_dim: centroid.dim(),
        preserving: preserving.len(),
        rl_onto,
        images_in_centroid,
        all_preserve_z_lie,
        zero_image_kills_gamma2,
    })
}

/// `f(φ(x), b) = f(x, φ(b))` for `x` in a basis of `γ_2^Lie`, all basis `b`.
pub fn check_form_symmetry(g: &LeibnizAlgebra, phi: &Matrix, gram: &Matrix) -> bool {
    let form = |u: &[Scalar], v: &[Scalar]| crate::linalg::dot(u, &gram.apply(v));
    gamma2(g).basis_vectors().iter().all(|x| {
        (0..g.dim()).all(|b| {
            let e = g.basis_vector(b);
            form(&phi.apply(x), &e) == form(x, &phi.apply(&e))
        })
    })
}

/// `h = ker φ ⊕ im φ` for an idempotent `φ ∈ Γ^Lie(h)`, with both parts
/// certified as two-sided ideals.
pub fn idempotent_split(h: &LeibnizAlgebra, phi: &Matrix) -> Result<(Ideal, Ideal)> {
    if phi.mul(phi) != *phi {
        return Err(Error::NotIdempotent);
    }
    if !centroid_lie(h).contains(phi) {
        return Err(Error::NotInCentroid);
    }
    let ker = nullspace(phi)?;
    let n = h.dim();
    let im = Subspace::span(h.field(), n, (0..n).map(|j| phi.column(j)))?;
    if !ker.intersect(&im)?.is_zero() || !ker.sum(&im)?.is_full() {
        return Err(Error::Internal("kernel and image are not complementary".into()));
    }
    Ok((Ideal::two_sided(h, ker)?, Ideal::two_sided(h, im)?))
}
