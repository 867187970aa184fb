//! Finite-dimensional algebras given by structure constants.

mod centres;
mod construct;
mod ideal;
mod series;

pub use centres::{centres, lie_centraliser, lie_centre, Centres};
pub use construct::{direct_sum, liesation, quotient, subalgebra, Quotient};
pub use ideal::{Ideal, Sides};
pub use series::{
    ann_subspace, gamma2, lie_commutator_ideal, lower_central_series, nilpotency_class,
    Nilpotency,
};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{unit_vector, zero_vector, Matrix, RowReducer};

/// Dense table `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    field: FieldSpec,
    dim: usize,
    coeffs: Vec<Scalar>,
    basis_names: Vec<String>,
}

impl StructureTable {
    pub fn zero(field: FieldSpec, basis_names: Vec<String>) -> Self {
        let dim = basis_names.len();
        StructureTable {
            field,
            dim,
            coeffs: vec![Scalar::zero(field); dim * dim * dim],
            basis_names,
        }
    }

    pub fn with_default_names(field: FieldSpec, dim: usize, prefix: &str) -> Self {
        StructureTable::zero(field, (1..=dim).map(|i| format!("{prefix}{i}")).collect())
    }

    /// Sets `[e_i, e_j] = Σ coeff·e_k` from a sparse list of `(k, coeff)`.
    pub fn set_product_ints(&mut self, i: usize, j: usize, result: &[(usize, i64)]) {
        let mut v = zero_vector(self.field, self.dim);
        for &(k, c) in result {
            v[k] = &v[k] + &Scalar::from_int(self.field, c);
        }
        self.set_product(i, j, v);
    }

    pub fn set_product(&mut self, i: usize, j: usize, result: Vec<Scalar>) {
        assert_eq!(result.len(), self.dim);
        let base = (i * self.dim + j) * self.dim;
        for (k, s) in result.into_iter().enumerate() {
            assert_eq!(s.field(), self.field, "structure constant in wrong field");
            self.coeffs[base + k] = s;
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.coeffs[base..base + self.dim]
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vector(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                crate::linalg::axpy(&mut out, &c, self.product(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<Self> {
        Ok(StructureTable {
            field,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .map(|s| s.to_field(field))
                .collect::<Result<_>>()?,
            basis_names: self.basis_names.clone(),
        })
    }

    /// Table of the same product in the basis given by the columns of `p`:
    /// `[x, y]' = P⁻¹ [P x, P y]`.
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> Self {
        let n = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let mut out = StructureTable::zero(self.field, self.basis_names.clone());
        for i in 0..n {
            for j in 0..n {
                let prod = self.multiply(&cols[i], &cols[j]);
                out.set_product(i, j, p_inv.apply(&prod));
            }
        }
        out
    }

    /// Sparse list of the non-zero products, in `(i, j)` order.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vec<(usize, Scalar)>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let terms: Vec<(usize, Scalar)> = self
                    .product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| (k, s.clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }

    /// First basis triple `(i, j, k)` (lexicographic) on which
    /// `[e_i,[e_j,e_k]] = [[e_i,e_j],e_k] − [[e_i,e_k],e_j]` fails.
    pub fn leibniz_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            let ei = unit_vector(self.field, n, i);
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.multiply(&ei, self.product(j, k));
                    let ek = unit_vector(self.field, n, k);
                    let ej = unit_vector(self.field, n, j);
                    let a = self.multiply(self.product(i, j), &ek);
                    let b = self.multiply(self.product(i, k), &ej);
                    let ok = lhs
                        .iter()
                        .zip(a.iter().zip(&b))
                        .all(|(l, (x, y))| *l == x - y);
                    if !ok {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// Verifies the Leibniz identity on all basis triples.
pub fn check_leibniz(t: &StructureTable) -> Result<()> {
    match t.leibniz_counterexample() {
        None => Ok(()),
        Some((i, j, k)) => Err(Error::NotLeibniz(
            t.name(i).into(),
            t.name(j).into(),
            t.name(k).into(),
        )),
    }
}

/// A structure table certified to satisfy the Leibniz identity, with the
/// symmetrised products `[e_i, e_j]_Lie = [e_i, e_j] + [e_j, e_i]` cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    table: StructureTable,
    lie: Vec<Scalar>,
}

impl LeibnizAlgebra {
    pub fn new(table: StructureTable) -> Result<Self> {
        check_leibniz(&table)?;
        let n = table.dim;
        let mut lie = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    lie.push(&table.product(i, j)[k] + &table.product(j, i)[k]);
                }
            }
        }
        Ok(LeibnizAlgebra { table, lie })
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        LeibnizAlgebra::new(StructureTable::with_default_names(field, dim, "e")).unwrap()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.table.field
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field(), self.dim(), i)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.table.multiply(x, y)
    }

    /// `[e_i, e_j]_Lie`.
    pub fn lie_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        let base = (i * n + j) * n;
        &self.lie[base..base + n]
    }

    /// `[x, y]_Lie = [x, y] + [y, x]`.
    pub fn lie_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vector(self.field(), self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                crate::linalg::axpy(&mut out, &(xi * yj), self.lie_product(i, j));
            }
        }
        out
    }

    /// Matrix of `L_x = [x, -]`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim())
            .map(|j| self.bracket(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// Matrix of `R_x = [-, x]`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim())
            .map(|j| self.bracket(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// Matrix of `d_x = [x, -]_Lie`, which equals `R_x + L_x`.
    pub fn lie_adjoint(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim())
            .map(|j| self.lie_bracket(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// Whether the bracket is antisymmetric, i.e. `[-,-]_Lie` vanishes.
    pub fn is_lie(&self) -> bool {
        self.lie.iter().all(Scalar::is_zero)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_zero()
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<Self> {
        LeibnizAlgebra::new(self.table.to_field(field)?)
    }

    /// Same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> Result<Self> {
        LeibnizAlgebra::new(self.table.change_basis(p, p_inv))
    }
}

/// A commutative associative algebra, with its unit when one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocCommAlgebra {
    table: StructureTable,
    unit: Option<Vec<Scalar>>,
}

impl AssocCommAlgebra {
    /// Certifies commutativity and associativity. A claimed unit is
    /// verified; without one, a unit is searched for by solving `u·e_j = e_j`.
    pub fn new(table: StructureTable, claimed_unit: Option<Vec<Scalar>>) -> Result<Self> {
        let n = table.dim;
        for i in 0..n {
            for j in 0..n {
                if table.product(i, j) != table.product(j, i) {
                    return Err(Error::NotCommutative(table.name(i).into(), table.name(j).into()));
                }
            }
        }
        for i in 0..n {
            let ei = unit_vector(table.field, n, i);
            for j in 0..n {
                for k in 0..n {
                    let ek = unit_vector(table.field, n, k);
                    let left = table.multiply(table.product(i, j), &ek);
                    let right = table.multiply(&ei, table.product(j, k));
                    if left != right {
                        return Err(Error::NotAssociative(
                            table.name(i).into(),
                            table.name(j).into(),
                            table.name(k).into(),
                        ));
                    }
                }
            }
        }
        let unit = match claimed_unit {
            Some(u) => {
                if u.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: u.len(),
                    });
                }
                for j in 0..n {
                    let ej = unit_vector(table.field, n, j);
                    if table.multiply(&u, &ej) != ej {
                        return Err(Error::BadUnit(table.name(j).into()));
                    }
                }
                Some(u)
            }
            None => find_unit(&table),
        };
        Ok(AssocCommAlgebra { table, unit })
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.table.field
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.table.multiply(x, y)
    }

    /// Matrix of multiplication by `a`.
    pub fn mult_operator(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<_> = (0..n)
            .map(|j| self.multiply(a, &unit_vector(self.field(), n, j)))
            .collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<Self> {
        let unit = self
            .unit
            .as_ref()
            .map(|u| crate::linalg::vector_to_field(u, field))
            .transpose()?;
        AssocCommAlgebra::new(self.table.to_field(field)?, unit)
    }
}

/// Solves `Σ_m u_m c[m][j] = e_j` for all `j`, an inhomogeneous system in `u`.
fn find_unit(table: &StructureTable) -> Option<Vec<Scalar>> {
    let n = table.dim;
    let f = table.field;
    if n == 0 {
        return Some(Vec::new());
    }
    // Homogenise with an extra coordinate t: Σ_m u_m c[m][j][k] − t δ_jk = 0.
    let mut red = RowReducer::new(f, n + 1);
    for j in 0..n {
        for k in 0..n {
            let mut row: Vec<Scalar> = (0..n).map(|m| table.product(m, j)[k].clone()).collect();
            row.push(if j == k { -Scalar::one(f) } else { Scalar::zero(f) });
            red.push(row).unwrap();
        }
    }
    let kernel = red.kernel();
    // Unique up to scaling of t; pick the vector with t = 1.
    kernel.basis_vectors().into_iter().find_map(|v| {
        let t = v[n].clone();
        if t.is_zero() {
            return None;
        }
        let inv = t.inv().unwrap();
        Some(v[..n].iter().map(|s| s * &inv).collect())
    })
}
