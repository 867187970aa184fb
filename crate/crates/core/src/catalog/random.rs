use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::LeibnizAlgebra;
use crate::field::Scalar;
use crate::linalg::Matrix;

/// `g` rewritten in a random basis, together with the change of basis.
#[derive(Clone, Debug)]
pub struct Variant {
    pub algebra: LeibnizAlgebra,
    /// Columns are the new basis vectors in old coordinates.
    pub p: Matrix,
    pub p_inv: Matrix,
}

/// Conjugates `g` by a seeded random invertible `P` with entries in
/// `[−3, 3]`: `[x, y]' = P⁻¹[P x, P y]`. Singular draws are discarded.
pub fn random_variant(g: &LeibnizAlgebra, seed: u64) -> Variant {
    let n = g.dim();
    let f = g.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut p = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                p.set(i, j, Scalar::from_int(f, rng.gen_range(-3i64..=3)));
            }
        }
        if let Some(p_inv) = p.inverse() {
            let algebra = g.change_basis(&p, &p_inv).expect("the Leibniz identity is basis-free");
            return Variant { algebra, p, p_inv };
        }
    }
}
