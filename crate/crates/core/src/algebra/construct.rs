use super::{ann_subspace, Ideal, LeibnizAlgebra, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix};

/// `g / I` on the complement spanned by the non-pivot coordinates of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    /// `(n − dim I) × n` matrix of the canonical projection.
    pub projection: Matrix,
    /// Indices of the basis vectors of `g` whose images form the basis.
    pub complement: Vec<usize>,
}

pub fn quotient(g: &LeibnizAlgebra, ideal: &Ideal) -> Result<Quotient> {
    ideal.require_two_sided()?;
    let i = ideal.carrier();
    let n = g.dim();
    let comp = i.complement_coords();
    let names = comp.iter().map(|&c| g.table().name(c).to_string()).collect();
    let mut t = StructureTable::zero(g.field(), names);
    for (a, &ca) in comp.iter().enumerate() {
        for (b, &cb) in comp.iter().enumerate() {
            t.set_product(a, b, i.quotient_coords(g.table().product(ca, cb)));
        }
    }
    let cols: Vec<_> = (0..n)
        .map(|j| i.quotient_coords(&unit_vector(g.field(), n, j)))
        .collect();
    let mut projection = Matrix::zeros(g.field(), comp.len(), n);
    for (j, c) in cols.into_iter().enumerate() {
        for (r, v) in c.into_iter().enumerate() {
            projection.set(r, j, v);
        }
    }
    Ok(Quotient {
        algebra: LeibnizAlgebra::new(t)?,
        projection,
        complement: comp,
    })
}

/// `g / span{[x, x]}`, which is a Lie algebra.
pub fn liesation(g: &LeibnizAlgebra) -> Result<Quotient> {
    let ann = Ideal::two_sided(g, ann_subspace(g))?;
    let q = quotient(g, &ann)?;
    if !q.algebra.is_lie() {
        return Err(Error::Internal("Liesation is not antisymmetric".into()));
    }
    Ok(q)
}

/// `g1 ⊕ g2` with the block-diagonal table; clashing basis names get a
/// `_1`/`_2` suffix.
pub fn direct_sum(g1: &LeibnizAlgebra, g2: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
    if g1.field() != g2.field() {
        return Err(Error::FieldMismatch {
            expected: g1.field(),
            found: g2.field(),
        });
    }
    let (n1, n2) = (g1.dim(), g2.dim());
    let n1_names = g1.table().basis_names();
    let n2_names = g2.table().basis_names();
    let clash = n1_names.iter().any(|a| n2_names.contains(a));
    let names = n1_names
        .iter()
        .map(|s| if clash { format!("{s}_1") } else { s.clone() })
        .chain(n2_names.iter().map(|s| if clash { format!("{s}_2") } else { s.clone() }))
        .collect();
    let mut t = StructureTable::zero(g1.field(), names);
    let f = g1.field();
    for i in 0..n1 {
        for j in 0..n1 {
            let mut v = crate::linalg::zero_vector(f, n1 + n2);
            v[..n1].clone_from_slice(g1.table().product(i, j));
            t.set_product(i, j, v);
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            let mut v = crate::linalg::zero_vector(f, n1 + n2);
            v[n1..].clone_from_slice(g2.table().product(i, j));
            t.set_product(n1 + i, n1 + j, v);
        }
    }
    LeibnizAlgebra::new(t)
}

/// The subalgebra on `s`, in the coordinates of its RREF basis. Errors
/// when `s` is not closed under the bracket.
pub fn subalgebra(g: &LeibnizAlgebra, s: &crate::linalg::Subspace) -> Result<LeibnizAlgebra> {
    let basis = s.basis_vectors();
    let pivots = s.pivots();
    let coords = |v: &[crate::field::Scalar]| -> Vec<crate::field::Scalar> {
        pivots.iter().map(|&p| v[p].clone()).collect()
    };
    let names = pivots
        .iter()
        .map(|&p| format!("h{}", p + 1))
        .collect();
    let mut t = StructureTable::zero(g.field(), names);
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            let p = g.bracket(x, y);
            if !s.contains(&p)? {
                return Err(Error::PreconditionViolated("subspace is not a subalgebra".into()));
            }
            t.set_product(a, b, coords(&p));
        }
    }
    LeibnizAlgebra::new(t)
}
