use super::report::{outside, TheoremReport};
use crate::algebra::{direct_sum, lie_centre, LeibnizAlgebra};
use crate::error::Result;
use crate::linalg::{zero_vector, Subspace};
use crate::spaces::{centroid_lie, der_lie, gender_lie, qcentroid_lie, qder_lie, OperatorSpace};

fn block_subspace(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    let (n, m) = (a.ambient_dim(), b.ambient_dim());
    let f = a.field();
    let left = a.basis_vectors().into_iter().map(|v| {
        let mut w = zero_vector(f, n + m);
        w[..n].clone_from_slice(&v);
        w
    });
    let right = b.basis_vectors().into_iter().map(|v| {
        let mut w = zero_vector(f, n + m);
        w[n..].clone_from_slice(&v);
        w
    });
    Subspace::span(f, n + m, left.chain(right).collect::<Vec<_>>())
}

type Solver = fn(&LeibnizAlgebra) -> OperatorSpace;

const SPLITS: &[(&str, &str, Solver)] = &[
    ("sum-der", "der", der_lie),
    ("sum-gender", "gender", gender_lie),
    ("sum-qder", "qder", qder_lie),
    ("sum-centroid", "centroid", centroid_lie),
    ("sum-qcentroid", "qcentroid", qcentroid_lie),
];

/// Reports for `g1 ⊕ g2`: the Lie-centre always splits, and when it is
/// zero the five operator spaces split as block sums.
pub fn run_pair_suite(g1: &LeibnizAlgebra, g2: &LeibnizAlgebra) -> Result<Vec<TheoremReport>> {
    let sum = direct_sum(g1, g2)?;
    let z = lie_centre(&sum);
    let zb = block_subspace(&lie_centre(g1), &lie_centre(g2))?;
    let mut r = TheoremReport::new("sum-lie-centre")
        .dim("z_lie", z.dim())
        .dim("block", zb.dim());
    if let Some(v) = z.basis_vectors().into_iter().find(|v| !zb.contains(v).unwrap()) {
        r = r.refute_vector("in Z_Lie(sum), not in the block sum", &v);
    } else if let Some(v) = zb.basis_vectors().into_iter().find(|v| !z.contains(v).unwrap()) {
        r = r.refute_vector("in the block sum, not in Z_Lie(sum)", &v);
    }
    let mut out = vec![r];
    for &(id, name, solve) in SPLITS {
        if !z.is_zero() {
            out.push(TheoremReport::skipped(id, format!("Z_Lie of the sum has dim {}", z.dim())));
            continue;
        }
        let (s1, s2) = (solve(g1), solve(g2));
        let whole = solve(&sum);
        let block = s1.block_sum(&s2);
        let mut r = TheoremReport::new(id)
            .reason(format!("{name}(sum) = {name}(g1) ⊕ {name}(g2)"))
            .dim("sum", whole.dim())
            .dim("first", s1.dim())
            .dim("second", s2.dim());
        if let Some(m) = outside(&whole, &block) {
            r = r.refute("in the sum's space, not block diagonal", &m);
        } else if let Some(m) = outside(&block, &whole) {
            r = r.refute("block element missing from the sum's space", &m);
        }
        out.push(r);
    }
    Ok(out)
}
