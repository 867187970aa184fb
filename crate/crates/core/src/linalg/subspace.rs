use super::{Matrix, RowReducer};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A linear subspace of `K^n`, stored as the RREF of a spanning set with the
/// zero rows removed. The representation is canonical, so `==` is equality
/// of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: FieldSpec, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut red = RowReducer::new(field, ambient);
        for v in vectors {
            red.push(v)?;
        }
        Ok(Subspace::from_reducer(&red))
    }

    pub(crate) fn from_reducer(red: &RowReducer) -> Self {
        let rows = red.basis();
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|s| !s.is_zero()).unwrap())
            .collect();
        Subspace {
            ambient: red.cols(),
            basis: Matrix::from_rows(red.field(), red.cols(), rows).unwrap(),
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis, one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: other.field(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the pivot columns; zero exactly when
    /// `v` lies in the subspace. The non-pivot entries are the coordinates
    /// of `v` in the quotient by this subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &c) in self.basis.row_vectors().iter().zip(&self.pivots) {
            if r[c].is_zero() {
                continue;
            }
            let f = r[c].clone();
            for j in c..self.ambient {
                if !row[j].is_zero() {
                    r[j].sub_mul_assign(&f, &row[j]);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if let Some(s) = v.iter().find(|s| s.field() != self.field()) {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: s.field(),
            });
        }
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Subspace::span(
            self.field(),
            self.ambient,
            self.basis_vectors().into_iter().chain(other.basis_vectors()),
        )
    }

    /// `{w : w·v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        let mut red = RowReducer::new(self.field(), self.ambient);
        for v in self.basis_vectors() {
            red.push(v).unwrap();
        }
        red.kernel()
    }

    /// Intersection as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Standard coordinates not used as pivots: a complement basis.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|j| !self.pivots.contains(j)).collect()
    }

    /// Coordinates of `v + self` with respect to [`Self::complement_coords`].
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.complement_coords().into_iter().map(|j| r[j].clone()).collect()
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<Subspace> {
        let rows = self
            .basis_vectors()
            .into_iter()
            .map(|v| v.iter().map(|s| s.to_field(field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(field, self.ambient, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(Q, v)).collect())
            .collect()
    }

    fn span(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(Q, n, vecs(rows)).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let a = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&a).unwrap(), a);
        let x = span(2, &[&[1, 0]]);
        let y = span(2, &[&[0, 1]]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(Q, 2));
        // (a, a+b, b) has middle coordinate 0 iff b = -a.
        let b = span(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), span(3, &[&[1, 0, -1]]));
    }

    #[test]
    fn containment_and_mismatch() {
        let a = span(3, &[&[1, 1, 0]]);
        assert!(a.contains(&vecs(&[&[2, 2, 0]])[0]).unwrap());
        assert!(!a.contains(&vecs(&[&[1, 0, 0]])[0]).unwrap());
        assert!(a.leq(&Subspace::full(Q, 3)).unwrap());
        assert!(!Subspace::full(Q, 3).leq(&a).unwrap());
        assert!(a.sum(&Subspace::full(Q, 2)).is_err());
        assert!(a.contains(&vecs(&[&[1, 1]])[0]).is_err());
    }

    #[test]
    fn quotient_coordinates() {
        let a = span(3, &[&[1, 1, 0]]);
        assert_eq!(a.complement_coords(), vec![1, 2]);
        let c = a.quotient_coords(&vecs(&[&[1, 1, 0]])[0]);
        assert!(c.iter().all(Scalar::is_zero));
    }

    fn small_vectors(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=n)
    }

    fn to_space(n: usize, rows: &[Vec<i64>]) -> Subspace {
        Subspace::span(
            Q,
            n,
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(Q, v)).collect()),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn grassmann_identity((n, ra, rb) in (1usize..=6).prop_flat_map(|n| (Just(n), small_vectors(n), small_vectors(n)))) {
            let a = to_space(n, &ra);
            let b = to_space(n, &rb);
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(i.leq(&a).unwrap() && i.leq(&b).unwrap());
            prop_assert!(a.leq(&s).unwrap() && b.leq(&s).unwrap());
        }

        #[test]
        fn span_is_order_independent(rows in small_vectors(4)) {
            let mut rev = rows.clone();
            rev.reverse();
            prop_assert_eq!(to_space(4, &rows), to_space(4, &rev));
        }

        #[test]
        fn rref_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..=5)) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = Matrix::from_ints(Q, &refs);
            let (r, rank) = super::super::rref(&m).unwrap();
            prop_assert!(rank <= m.rows().min(m.cols()));
            prop_assert_eq!(super::super::rref(&r).unwrap().0, r);
        }

        #[test]
        fn nullspace_vectors_are_annihilated(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 5), 1..=4)) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = Matrix::from_ints(Q, &refs);
            let k = super::super::nullspace(&m).unwrap();
            let (_, rank) = super::super::rref(&m).unwrap();
            prop_assert_eq!(k.dim(), m.cols() - rank);
            for v in k.basis_vectors() {
                prop_assert!(m.apply(&v).iter().all(Scalar::is_zero));
            }
        }
    }
}
