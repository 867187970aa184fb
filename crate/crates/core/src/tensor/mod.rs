//! The tensor product `A ⊗ g` of a commutative associative algebra and a
//! Leibniz algebra, and the comparison of its Lie-centroid with
//! `Γ(A) ⊗ Γ^Lie(g)`.

use std::sync::OnceLock;

use crate::algebra::{gamma2, AssocCommAlgebra, LeibnizAlgebra, StructureTable};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{zero_vector, Matrix, RowReducer, Subspace};
use crate::spaces::{centroid_decomposition, centroid_lie, OperatorSpace};

/// `A ⊗ g` on the basis `a_i ⊗ g_k`, index `i·n + k`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    pub a: AssocCommAlgebra,
    pub g: LeibnizAlgebra,
    pub product: LeibnizAlgebra,
    centroid: OnceLock<OperatorSpace>,
}

pub fn tensor_algebra(a: &AssocCommAlgebra, g: &LeibnizAlgebra) -> Result<TensorAlgebra> {
    if a.field() != g.field() {
        return Err(Error::FieldMismatch {
            expected: a.field(),
            found: g.field(),
        });
    }
    let (m, n) = (a.dim(), g.dim());
    let ta = a.table();
    let tg = g.table();
    let names = (0..m)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .map(|(i, k)| format!("{}⊗{}", ta.name(i), tg.name(k)))
        .collect();
    let mut t = StructureTable::zero(a.field(), names);
    for i in 0..m {
        for j in 0..m {
            let ap = ta.product(i, j);
            if ap.iter().all(Scalar::is_zero) {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let gp = tg.product(k, l);
                    if gp.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let mut v = zero_vector(a.field(), m * n);
                    for (x, s) in ap.iter().enumerate() {
                        if s.is_zero() {
                            continue;
                        }
                        for (y, r) in gp.iter().enumerate() {
                            if !r.is_zero() {
                                v[x * n + y] = s * r;
                            }
                        }
                    }
                    t.set_product(i * n + k, j * n + l, v);
                }
            }
        }
    }
    Ok(TensorAlgebra {
        a: a.clone(),
        g: g.clone(),
        product: LeibnizAlgebra::new(t)?,
        centroid: OnceLock::new(),
    })
}

impl TensorAlgebra {
    /// `Γ^Lie(A ⊗ g)`, solved once and cached.
    pub fn centroid(&self) -> &OperatorSpace {
        self.centroid.get_or_init(|| centroid_lie(&self.product))
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }
}

/// `Γ(A) = {f : f(ab) = f(a)b = a f(b)}`.
pub fn assoc_centroid(a: &AssocCommAlgebra) -> OperatorSpace {
    let m = a.dim();
    let t = a.table();
    let f = a.field();
    let mut red = RowReducer::new(f, m * m);
    for i in 0..m {
        for j in 0..m {
            // f(e_i e_j) − f(e_i) e_j and f(e_i) e_j − e_i f(e_j), per output r.
            let mut first = vec![zero_vector(f, m * m); m];
            let mut second = vec![zero_vector(f, m * m); m];
            for (mm, s) in t.product(i, j).iter().enumerate() {
                if !s.is_zero() {
                    for (r, row) in first.iter_mut().enumerate() {
                        row[mm * m + r] += s;
                    }
                }
            }
            for k in 0..m {
                for (r, s) in t.product(k, j).iter().enumerate() {
                    if !s.is_zero() {
                        first[r][i * m + k] -= s;
                        second[r][i * m + k] += s;
                    }
                }
                for (r, s) in t.product(i, k).iter().enumerate() {
                    if !s.is_zero() {
                        second[r][j * m + k] -= s;
                    }
                }
            }
            for row in first.into_iter().chain(second) {
                red.push(row).unwrap();
            }
        }
    }
    OperatorSpace::from_subspace(m, red.kernel())
}

/// `f ⊗̃ φ : a ⊗ x ↦ f(a) ⊗ φ(x)`.
pub fn embed_tensor_operator(f: &Matrix, phi: &Matrix) -> Matrix {
    f.kron(phi)
}

fn embedded_span<'a>(
    field: crate::FieldSpec,
    dim: usize,
    pairs: impl Iterator<Item = (&'a Matrix, &'a Matrix)>,
) -> OperatorSpace {
    OperatorSpace::span(field, dim, pairs.map(|(f, phi)| embed_tensor_operator(f, phi)))
        .expect("Kronecker products have the product shape")
}

/// Both sides of the tensor centroid statements for one `(A, g)`.
#[derive(Clone, Debug)]
pub struct TensorComparison {
    pub centroid: OperatorSpace,
    pub assoc_centroid: OperatorSpace,
    pub g_centroid: OperatorSpace,
    /// Span of `f ⊗̃ φ` for `f ∈ Γ(A)`, `φ ∈ Γ^Lie(g)`.
    pub embedded: OperatorSpace,
    /// Span of `L_a ⊗̃ ψ` (`ψ ∈ Ψ`) and `f ⊗̃ d` (`f ∈ End(A)`, `d ∈ Der_z^Lie(g)`).
    pub psi_part: OperatorSpace,
    pub unital: bool,
    pub gamma2_nonzero: bool,
    pub g_centroid_scalar: bool,
}

impl TensorComparison {
    pub fn embedded_included(&self) -> bool {
        self.embedded.leq(&self.centroid).unwrap()
    }

    pub fn psi_part_included(&self) -> bool {
        self.psi_part.leq(&self.centroid).unwrap()
    }

    /// Unital `A`, `γ_2^Lie(g) ≠ 0` and `Γ^Lie(g) = K·id`.
    pub fn equality_hypotheses(&self) -> bool {
        self.unital && self.gamma2_nonzero && self.g_centroid_scalar
    }

    pub fn equal(&self) -> bool {
        self.centroid == self.embedded
    }

    /// A basis element of the centroid outside the embedded span.
    pub fn witness_outside(&self) -> Option<Matrix> {
        self.centroid
            .basis()
            .iter()
            .find(|c| !self.embedded.contains(c))
            .cloned()
    }
}

pub fn tensor_centroid_compare(t: &TensorAlgebra) -> Result<TensorComparison> {
    let (a, g) = (&t.a, &t.g);
    let dim = t.dim();
    let f = a.field();
    let assoc = assoc_centroid(a);
    let decomposition = centroid_decomposition(g)?;
    let g_centroid = decomposition.centroid.clone();
    let embedded = embedded_span(
        f,
        dim,
        assoc
            .basis()
            .iter()
            .flat_map(|x| g_centroid.basis().iter().map(move |y| (x, y))),
    );
    let mults: Vec<Matrix> = (0..a.dim())
        .map(|i| a.mult_operator(&crate::linalg::unit_vector(f, a.dim(), i)))
        .collect();
    let end_a = OperatorSpace::full(f, a.dim());
    let psi_part = embedded_span(
        f,
        dim,
        mults
            .iter()
            .flat_map(|x| decomposition.psi.iter().map(move |y| (x, y)))
            .chain(
                end_a
                    .basis()
                    .iter()
                    .flat_map(|x| decomposition.der_z.basis().iter().map(move |y| (x, y))),
            ),
    );
    let scalars = OperatorSpace::span(f, g.dim(), [Matrix::identity(f, g.dim())])?;
    Ok(TensorComparison {
        centroid: t.centroid().clone(),
        assoc_centroid: assoc,
        g_centroid_scalar: g_centroid == scalars,
        g_centroid,
        embedded,
        psi_part,
        unital: a.is_unital(),
        gamma2_nonzero: !gamma2(g).is_zero(),
    })
}

/// The maps `φ_i` with `φ(1 ⊗ x) = Σ_i a_i ⊗ φ_i(x)`, each certified to lie
/// in `Γ^Lie(g)`.
pub fn tensor_fiber_components(t: &TensorAlgebra, phi: &Matrix) -> Result<Vec<Matrix>> {
    let unit = t
        .a
        .unit()
        .ok_or_else(|| Error::PreconditionViolated("the associative factor has no unit".into()))?;
    if !t.centroid().contains(phi) {
        return Err(Error::NotInCentroid);
    }
    let (m, n) = (t.a.dim(), t.g.dim());
    let f = t.a.field();
    let g_centroid = centroid_lie(&t.g);
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let mut comp = Matrix::zeros(f, n, n);
        for k in 0..n {
            for mm in 0..n {
                let mut s = Scalar::zero(f);
                for (j, u) in unit.iter().enumerate() {
                    if !u.is_zero() {
                        s += &(u * phi.get(i * n + mm, j * n + k));
                    }
                }
                comp.set(mm, k, s);
            }
        }
        if !g_centroid.contains(&comp) {
            return Err(Error::Internal(format!("fiber component {i} is not in the Lie-centroid")));
        }
        out.push(comp);
    }
    Ok(out)
}

/// `γ_2^Lie(A ⊗ g)` next to `A ⊗ γ_2^Lie(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma2Comparison {
    pub product: Subspace,
    pub block: Subspace,
}

impl Gamma2Comparison {
    pub fn equal(&self) -> bool {
        self.product == self.block
    }
}

pub fn tensor_gamma2(t: &TensorAlgebra) -> Gamma2Comparison {
    let (m, n) = (t.a.dim(), t.g.dim());
    let f = t.a.field();
    let g2 = gamma2(&t.g).basis_vectors();
    let block = Subspace::span(
        f,
        m * n,
        (0..m).flat_map(|i| {
            g2.iter().map(move |v| {
                let mut w = zero_vector(f, m * n);
                w[i * n..(i + 1) * n].clone_from_slice(v);
                w
            })
        }),
    )
    .unwrap();
    Gamma2Comparison {
        product: gamma2(&t.product),
        block,
    }
}

/// Whether `f ↦ f(1)` is a bijection `Γ(A) → A`; `None` without a unit.
pub fn sigma_is_isomorphism(a: &AssocCommAlgebra) -> Option<bool> {
    let unit = a.unit()?;
    let gamma = assoc_centroid(a);
    let images = Subspace::span(a.field(), a.dim(), gamma.basis().iter().map(|f| f.apply(unit))).ok()?;
    Some(gamma.dim() == a.dim() && images.is_full())
}
