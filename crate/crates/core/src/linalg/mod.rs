//! Exact dense linear algebra over a [`FieldSpec`](crate::field::FieldSpec).

mod matrix;
mod reduce;
mod subspace;

pub use matrix::Matrix;
pub use reduce::{nullspace, rref, solve_and_lift, solve_and_project, LiftedVector, RowReducer};
pub use subspace::Subspace;

use crate::field::{FieldSpec, Scalar};

pub fn zero_vector(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(field); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vector(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// `y += c * x`
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero(a.first().map_or(FieldSpec::Rational, Scalar::field));
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn vector_to_field(v: &[Scalar], field: FieldSpec) -> crate::error::Result<Vec<Scalar>> {
    v.iter().map(|s| s.to_field(field)).collect()
}

/// Every vector of `F_p^n`, in lexicographic order of residues.
pub fn all_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let field = FieldSpec::Prime(p);
    let total = (p as u128).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(Scalar::from_int(field, (idx % p as u128) as i64));
            idx /= p as u128;
        }
        v
    })
}
