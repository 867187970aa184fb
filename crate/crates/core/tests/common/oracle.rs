//! Brute-force checks over small prime fields, independent of the solvers.

use leibalg::catalog::leibniz;
use leibalg::linalg::all_vectors;
use leibalg::spaces::{registry, SpaceOptions};
use leibalg::{Error, FieldSpec};

/// Checks every basis element of every registered space of `name` over
/// `F_p` at all pairs of points. Returns `(elements, points checked,
/// failures)`; spaces whose precondition fails are left out.
pub fn exhaustive_identities(name: &str, p: u64) -> (usize, u64, Vec<String>) {
    let g = leibniz(name, FieldSpec::prime(p).unwrap()).unwrap();
    let points: Vec<_> = all_vectors(p, g.dim()).collect();
    let (mut elements, mut checked, mut failures) = (0, 0u64, Vec::new());
    for kind in registry() {
        let cs = match kind.solve(&g, &SpaceOptions::default()) {
            Ok(cs) => cs,
            Err(Error::PreconditionViolated(_)) => continue,
            Err(e) => panic!("{name} {}: {e}", kind.name()),
        };
        for (i, e) in cs.elements().iter().enumerate() {
            elements += 1;
            for x in &points {
                for y in &points {
                    checked += 1;
                    if !kind.holds_at(&g, e, x, y) {
                        failures.push(format!("{name} {} #{i} at {x:?}, {y:?}", kind.name()));
                    }
                }
            }
        }
    }
    (elements, checked, failures)
}
