use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Ideal, LeibnizAlgebra};
use crate::error::Result;
use crate::linalg::{RowReducer, Subspace};

/// `span{[e_i, e_j]_Lie : i ≤ j}`, which equals `span{[x, x]}` since 1/2 ∈ K.
pub fn ann_subspace(g: &LeibnizAlgebra) -> Subspace {
    let n = g.dim();
    let mut red = RowReducer::new(g.field(), n);
    for i in 0..n {
        for j in i..n {
            red.push(g.lie_product(i, j).to_vec()).unwrap();
        }
    }
    Subspace::from_reducer(&red)
}

/// Smallest two-sided ideal containing `s`.
pub(crate) fn ideal_closure(g: &LeibnizAlgebra, s: Subspace) -> Subspace {
    let n = g.dim();
    let mut red = RowReducer::new(g.field(), n);
    let mut frontier = s.basis_vectors();
    for v in &frontier {
        red.push(v.clone()).unwrap();
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for j in 0..n {
                let e = g.basis_vector(j);
                for w in [g.bracket(v, &e), g.bracket(&e, v)] {
                    if red.push(w.clone()).unwrap() {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    Subspace::from_reducer(&red)
}

/// `[M, N]_Lie`: the two-sided ideal generated by `{[m, n]_Lie}`.
pub fn lie_commutator_ideal(g: &LeibnizAlgebra, m: &Ideal, n: &Ideal) -> Result<Ideal> {
    m.require_two_sided()?;
    n.require_two_sided()?;
    let mut red = RowReducer::new(g.field(), g.dim());
    let nb = n.carrier().basis_vectors();
    for x in m.carrier().basis_vectors() {
        for y in &nb {
            red.push(g.lie_bracket(&x, y))?;
        }
    }
    Ok(Ideal::trusted(ideal_closure(g, Subspace::from_reducer(&red))))
}

/// `γ_2^Lie(g) = [g, g]_Lie`.
pub fn gamma2(g: &LeibnizAlgebra) -> Subspace {
    let w = Ideal::whole(g);
    lie_commutator_ideal(g, &w, &w).unwrap().carrier().clone()
}

/// `γ_1 = N, γ_{i+1} = [γ_i, g]_Lie`, listed until the first repeat (the
/// repeated term is included once at the end).
pub fn lower_central_series(g: &LeibnizAlgebra, n: &Ideal) -> Result<Vec<Subspace>> {
    n.require_two_sided()?;
    let whole = Ideal::whole(g);
    let mut series = vec![n.carrier().clone()];
    let mut current = n.clone();
    loop {
        let next = lie_commutator_ideal(g, &current, &whole)?;
        if next.carrier() == current.carrier() {
            return Ok(series);
        }
        series.push(next.carrier().clone());
        current = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Nilpotency {
    /// `γ_{c+1} = 0 ≠ γ_c`; class 0 only for `N = 0`.
    Class(usize),
    NotNilpotent,
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "class {c}"),
            Nilpotency::NotNilpotent => f.write_str("not nilpotent"),
        }
    }
}

pub fn nilpotency_class(g: &LeibnizAlgebra, n: &Ideal) -> Result<Nilpotency> {
    let series = lower_central_series(g, n)?;
    let last = series.last().expect("series is non-empty");
    if !last.is_zero() {
        return Ok(Nilpotency::NotNilpotent);
    }
    Ok(Nilpotency::Class(series.len() - 1))
}
