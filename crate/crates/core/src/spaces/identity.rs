//! Defining identities evaluated at arbitrary points, independent of the
//! equation builder. Used to re-check computed bases and by the
//! finite-field oracle.

use crate::algebra::LeibnizAlgebra;
use crate::field::Scalar;
use crate::linalg::{add_vectors, dot, is_zero_vector, sub_vectors, Matrix, Subspace};

fn lie(g: &LeibnizAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    g.lie_bracket(x, y)
}

/// `d([x,y]_Lie) − [d x, y]_Lie − [x, d y]_Lie`.
pub fn der_residual(g: &LeibnizAlgebra, d: &Matrix, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let lhs = d.apply(&lie(g, x, y));
    let rhs = add_vectors(&lie(g, &d.apply(x), y), &lie(g, x, &d.apply(y)));
    sub_vectors(&lhs, &rhs)
}

pub fn der_holds(g: &LeibnizAlgebra, d: &Matrix, x: &[Scalar], y: &[Scalar]) -> bool {
    is_zero_vector(&der_residual(g, d, x, y))
}

pub fn centroid_holds(g: &LeibnizAlgebra, d: &Matrix, x: &[Scalar], y: &[Scalar]) -> bool {
    let a = d.apply(&lie(g, x, y));
    let b = lie(g, &d.apply(x), y);
    let c = lie(g, x, &d.apply(y));
    a == b && b == c
}

pub fn qcentroid_holds(g: &LeibnizAlgebra, d: &Matrix, x: &[Scalar], y: &[Scalar]) -> bool {
    lie(g, &d.apply(x), y) == lie(g, x, &d.apply(y))
}

/// `[f x, y]_Lie + [x, f'' y]_Lie = f'([x,y]_Lie)`; QDer is the case `f'' = f`.
pub fn gender_holds(
    g: &LeibnizAlgebra,
    f: &Matrix,
    f1: &Matrix,
    f2: &Matrix,
    x: &[Scalar],
    y: &[Scalar],
) -> bool {
    let lhs = add_vectors(&lie(g, &f.apply(x), y), &lie(g, x, &f2.apply(y)));
    lhs == f1.apply(&lie(g, x, y))
}

/// `[y, d x]_Lie = 0`, the pointwise form of `im d ⊆ Z_Lie`.
pub fn central_image_holds(g: &LeibnizAlgebra, d: &Matrix, x: &[Scalar], y: &[Scalar]) -> bool {
    is_zero_vector(&lie(g, y, &d.apply(x)))
}

/// `[x, g]_Lie = span{[x, e_j]_Lie}`.
pub fn lie_image_of(g: &LeibnizAlgebra, x: &[Scalar]) -> Subspace {
    Subspace::span(
        g.field(),
        g.dim(),
        (0..g.dim()).map(|j| lie(g, x, &g.basis_vector(j))),
    )
    .unwrap()
}

/// `d x ∈ [x, g]_Lie`.
pub fn almost_inner_holds(g: &LeibnizAlgebra, d: &Matrix, x: &[Scalar]) -> bool {
    lie_image_of(g, x).contains(&d.apply(x)).unwrap()
}

/// `f([x,c]_Lie, y) + f(x, [y,c]_Lie) = 0` for every basis `c`, with `f`
/// given by its Gram matrix.
pub fn form_invariant_holds(g: &LeibnizAlgebra, gram: &Matrix, x: &[Scalar], y: &[Scalar]) -> bool {
    let form = |u: &[Scalar], v: &[Scalar]| dot(u, &gram.apply(v));
    (0..g.dim()).all(|c| {
        let e = g.basis_vector(c);
        (&form(&lie(g, x, &e), y) + &form(x, &lie(g, y, &e))).is_zero()
    })
}
