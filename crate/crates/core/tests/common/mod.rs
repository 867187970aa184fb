#![allow(dead_code)]

use leibalg::algebra::{AssocCommAlgebra, LeibnizAlgebra};
use leibalg::catalog;
use leibalg::linalg::{Matrix, Subspace};
use leibalg::spaces::OperatorSpace;
use leibalg::{FieldSpec, Scalar};

pub const Q: FieldSpec = FieldSpec::Rational;

pub fn g(name: &str) -> LeibnizAlgebra {
    catalog::leibniz(name, Q).unwrap()
}

pub fn a(name: &str) -> AssocCommAlgebra {
    catalog::associative(name, Q).unwrap()
}

pub fn m(rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(Q, rows)
}

pub fn v(entries: &[i64]) -> Vec<Scalar> {
    entries.iter().map(|&x| Scalar::from_int(Q, x)).collect()
}

pub fn span(n: usize, vecs: &[&[i64]]) -> Subspace {
    Subspace::span(Q, n, vecs.iter().map(|e| v(e))).unwrap()
}

pub fn ops(n: usize, maps: &[Matrix]) -> OperatorSpace {
    OperatorSpace::span(Q, n, maps.iter().cloned()).unwrap()
}

/// Reads a report witness back into exact scalars.
pub fn witness_matrix(w: &leibalg::suite::Witness) -> Matrix {
    let rows: Vec<Vec<Scalar>> = w
        .rows
        .iter()
        .map(|r| r.iter().map(|s| Scalar::parse(Q, s).unwrap()).collect())
        .collect();
    let cols = rows[0].len();
    Matrix::from_rows(Q, cols, rows).unwrap()
}

pub mod props;
pub mod oracle;
