use super::{Ideal, LeibnizAlgebra};
use crate::error::Result;
use crate::field::Scalar;
use crate::linalg::{RowReducer, Subspace};

/// The four centres of a Leibniz algebra. `z_left` is kept as a plain
/// subspace since it need not be a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centres {
    pub z_lie: Ideal,
    pub z_right: Ideal,
    pub z_left: Subspace,
    pub z: Ideal,
}

/// Kernel of the stacked maps `z ↦ coeff(i, m, k)` summed against `z_m`.
fn stacked_kernel(g: &LeibnizAlgebra, coeff: impl Fn(usize, usize) -> Vec<Scalar>) -> Subspace {
    let n = g.dim();
    let mut red = RowReducer::new(g.field(), n);
    for i in 0..n {
        // Column m of the map z ↦ op(e_i, z) is coeff(i, m).
        let cols: Vec<Vec<Scalar>> = (0..n).map(|m| coeff(i, m)).collect();
        for k in 0..n {
            red.push(cols.iter().map(|c| c[k].clone()).collect()).unwrap();
        }
    }
    red.kernel()
}

/// `Z_Lie(g) = {z : [x, z]_Lie = 0 for all x}`.
pub fn lie_centre(g: &LeibnizAlgebra) -> Subspace {
    stacked_kernel(g, |i, m| g.lie_product(i, m).to_vec())
}

pub fn centres(g: &LeibnizAlgebra) -> Centres {
    let z_lie = lie_centre(g);
    let z_right = stacked_kernel(g, |i, m| g.table().product(i, m).to_vec());
    let z_left = stacked_kernel(g, |i, m| g.table().product(m, i).to_vec());
    let z = z_left.intersect(&z_right).unwrap();
    Centres {
        z_lie: Ideal::two_sided(g, z_lie).expect("Lie centre is a two-sided ideal"),
        z_right: Ideal::two_sided(g, z_right).expect("right centre is a two-sided ideal"),
        z: Ideal::two_sided(g, z).expect("centre is a two-sided ideal"),
        z_left,
    }
}

/// `C_g^Lie(M, N) = {x : [x, m]_Lie ∈ N for all m ∈ M}`.
pub fn lie_centraliser(g: &LeibnizAlgebra, m: &Ideal, n: &Ideal) -> Result<Subspace> {
    m.require_two_sided()?;
    n.require_two_sided()?;
    let dim = g.dim();
    let ann_n = n.carrier().annihilator().basis_vectors();
    let mut red = RowReducer::new(g.field(), dim);
    for v in m.carrier().basis_vectors() {
        // x ↦ [x, v]_Lie, column j = [e_j, v]_Lie.
        let cols: Vec<Vec<Scalar>> = (0..dim)
            .map(|j| g.lie_bracket(&g.basis_vector(j), &v))
            .collect();
        for w in &ann_n {
            let row = cols.iter().map(|c| crate::linalg::dot(w, c)).collect();
            red.push(row)?;
        }
    }
    Ok(red.kernel())
}
