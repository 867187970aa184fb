use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Matrix, Subspace};

/// A subspace of `End(K^n)`, stored canonically as the RREF of the
/// column-major vectorizations of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSpace {
    n: usize,
    canonical: Subspace,
    basis: Vec<Matrix>,
}

impl OperatorSpace {
    pub fn from_subspace(n: usize, canonical: Subspace) -> Self {
        assert_eq!(canonical.ambient_dim(), n * n, "operator space of wrong ambient size");
        let field = canonical.field();
        let basis = canonical
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_col_major(field, n, v))
            .collect();
        OperatorSpace {
            n,
            canonical,
            basis,
        }
    }

    pub fn span<I>(field: FieldSpec, n: usize, maps: I) -> Result<Self>
    where
        I: IntoIterator<Item = Matrix>,
    {
        let mut vecs = Vec::new();
        for m in maps {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.rows().max(m.cols()),
                });
            }
            vecs.push(m.vectorize());
        }
        Ok(OperatorSpace::from_subspace(n, Subspace::span(field, n * n, vecs)?))
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        OperatorSpace::from_subspace(n, Subspace::zero(field, n * n))
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        OperatorSpace::from_subspace(n, Subspace::full(field, n * n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.canonical.field()
    }

    pub fn dim(&self) -> usize {
        self.canonical.dim()
    }

    pub fn canonical(&self) -> &Subspace {
        &self.canonical
    }

    /// Basis matrices in canonical order.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.n
            && m.cols() == self.n
            && m.field() == self.field()
            && self.canonical.contains(&m.vectorize()).unwrap_or(false)
    }

    pub fn leq(&self, other: &OperatorSpace) -> Result<bool> {
        self.canonical.leq(&other.canonical)
    }

    pub fn intersect(&self, other: &OperatorSpace) -> Result<OperatorSpace> {
        Ok(OperatorSpace::from_subspace(self.n, self.canonical.intersect(&other.canonical)?))
    }

    pub fn sum(&self, other: &OperatorSpace) -> Result<OperatorSpace> {
        Ok(OperatorSpace::from_subspace(self.n, self.canonical.sum(&other.canonical)?))
    }

    /// `{P⁻¹ D P : D ∈ self}`, the space seen in the basis given by the
    /// columns of `P`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> OperatorSpace {
        OperatorSpace::span(
            self.field(),
            self.n,
            self.basis.iter().map(|d| p_inv.mul(d).mul(p)),
        )
        .expect("conjugation keeps the shape")
    }

    /// `{diag(a, b)}` for `a ∈ self`, `b ∈ other`.
    pub fn block_sum(&self, other: &OperatorSpace) -> OperatorSpace {
        let za = Matrix::zeros(self.field(), self.n, self.n);
        let zb = Matrix::zeros(self.field(), other.n, other.n);
        let maps = self
            .basis
            .iter()
            .map(|a| Matrix::block_diag(a, &zb))
            .chain(other.basis.iter().map(|b| Matrix::block_diag(&za, b)));
        OperatorSpace::span(self.field(), self.n + other.n, maps).expect("block shapes agree")
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<OperatorSpace> {
        Ok(OperatorSpace::from_subspace(self.n, self.canonical.to_field(field)?))
    }
}
