//! Linear systems whose unknowns are the entries of one or more `n × n`
//! maps. Map number `b` occupies columns `b·n² .. (b+1)·n²`, each block
//! vectorized column-major, so entry `(k, p)` of map `b` is column
//! `b·n² + p·n + k`.

use crate::algebra::{lie_centre, gamma2, LeibnizAlgebra};
use crate::field::Scalar;
use crate::linalg::{solve_and_lift, zero_vector, Matrix, RowReducer, Subspace};

use super::OperatorSpace;

pub(crate) struct System<'a> {
    g: &'a LeibnizAlgebra,
    n: usize,
    pub(crate) red: RowReducer,
}

/// `n` rows (one per output coordinate) of a vector-valued linear equation.
pub(crate) struct Block {
    rows: Vec<Vec<Scalar>>,
}

impl<'a> System<'a> {
    pub(crate) fn new(g: &'a LeibnizAlgebra, maps: usize) -> Self {
        let n = g.dim();
        System {
            g,
            n,
            red: RowReducer::new(g.field(), maps * n * n),
        }
    }

    pub(crate) fn block(&self) -> Block {
        Block {
            rows: vec![zero_vector(self.g.field(), self.red.cols()); self.n],
        }
    }

    pub(crate) fn push(&mut self, block: Block) {
        for row in block.rows {
            if row.iter().any(|s| !s.is_zero()) {
                self.red.push(row).expect("row has the system width");
            }
        }
    }

    /// Adds `± D_b([e_p, e_q]_Lie)`.
    pub(crate) fn map_of_lie(&self, blk: &mut Block, b: usize, neg: bool, p: usize, q: usize) {
        let n = self.n;
        let base = b * n * n;
        for (m, s) in self.g.lie_product(p, q).iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for r in 0..n {
                add(&mut blk.rows[r][base + m * n + r], s, neg);
            }
        }
    }

    /// Adds `± [D_b e_p, e_q]_Lie`.
    pub(crate) fn lie_of_map_left(&self, blk: &mut Block, b: usize, neg: bool, p: usize, q: usize) {
        let n = self.n;
        let base = b * n * n;
        for k in 0..n {
            for (r, s) in self.g.lie_product(k, q).iter().enumerate() {
                if !s.is_zero() {
                    add(&mut blk.rows[r][base + p * n + k], s, neg);
                }
            }
        }
    }

    /// Adds `± [e_p, D_b e_q]_Lie`.
    pub(crate) fn lie_of_map_right(&self, blk: &mut Block, b: usize, neg: bool, p: usize, q: usize) {
        let n = self.n;
        let base = b * n * n;
        for k in 0..n {
            for (r, s) in self.g.lie_product(p, k).iter().enumerate() {
                if !s.is_zero() {
                    add(&mut blk.rows[r][base + q * n + k], s, neg);
                }
            }
        }
    }

    /// `w · D_0 e_j = 0` for every `j` and every `w` in `ann(target)`:
    /// the image of `D_0` lies in `target`.
    pub(crate) fn image_in(&mut self, target: &Subspace) {
        let n = self.n;
        for w in target.annihilator().basis_vectors() {
            for j in 0..n {
                let mut row = zero_vector(self.g.field(), self.red.cols());
                for (k, wk) in w.iter().enumerate() {
                    row[j * n + k] = wk.clone();
                }
                self.red.push(row).unwrap();
            }
        }
    }

    /// `D_0 v = 0` for every `v` in `kill`.
    pub(crate) fn kills(&mut self, kill: &Subspace) {
        let n = self.n;
        for v in kill.basis_vectors() {
            for r in 0..n {
                let mut row = zero_vector(self.g.field(), self.red.cols());
                for (m, vm) in v.iter().enumerate() {
                    row[m * n + r] = vm.clone();
                }
                self.red.push(row).unwrap();
            }
        }
    }

    /// `w · D_0 x = 0`, one scalar equation.
    pub(crate) fn pointwise(&mut self, w: &[Scalar], x: &[Scalar]) -> bool {
        let n = self.n;
        let mut row = zero_vector(self.g.field(), self.red.cols());
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (k, wk) in w.iter().enumerate() {
                if !wk.is_zero() {
                    row[p * n + k] = wk * xp;
                }
            }
        }
        self.red.push(row).unwrap()
    }

    pub(crate) fn rank(&self) -> usize {
        self.red.rank()
    }

    pub(crate) fn solve(&self) -> OperatorSpace {
        OperatorSpace::from_subspace(self.n, self.red.kernel())
    }

    /// Projects the solution onto `D_0` and keeps one witness tuple
    /// `(D_1, …)` per canonical basis element.
    pub(crate) fn solve_projected(&self) -> (OperatorSpace, Vec<Vec<Matrix>>) {
        let n = self.n;
        let f = self.g.field();
        let n2 = n * n;
        let maps = self.red.cols() / n2.max(1);
        let rows = self.red.basis();
        let m = Matrix::from_rows(f, self.red.cols(), rows).unwrap();
        let lifts = solve_and_lift(&m, 0..n2).unwrap();
        let space = OperatorSpace::from_subspace(
            n,
            Subspace::span(f, n2, lifts.iter().map(|l| l.projected.clone())).unwrap(),
        );
        let witnesses = lifts
            .iter()
            .map(|l| {
                (1..maps)
                    .map(|b| Matrix::from_col_major(f, n, &l.full[b * n2..(b + 1) * n2]))
                    .collect()
            })
            .collect();
        (space, witnesses)
    }
}

fn add(slot: &mut Scalar, s: &Scalar, neg: bool) {
    if neg {
        *slot -= s;
    } else {
        *slot += s;
    }
}

/// Rows of the Lie-derivation condition on ordered pairs `p ≤ q`.
pub(crate) fn der_rows(sys: &mut System) {
    let n = sys.n;
    for p in 0..n {
        for q in p..n {
            let mut blk = sys.block();
            sys.map_of_lie(&mut blk, 0, false, p, q);
            sys.lie_of_map_left(&mut blk, 0, true, p, q);
            sys.lie_of_map_right(&mut blk, 0, true, p, q);
            sys.push(blk);
        }
    }
}

/// `Der^Lie(g)`: `d([x,y]_Lie) = [d x, y]_Lie + [x, d y]_Lie`.
pub fn der_lie(g: &LeibnizAlgebra) -> OperatorSpace {
    let mut sys = System::new(g, 1);
    der_rows(&mut sys);
    sys.solve()
}

/// `Γ^Lie(g)`: `d([x,y]_Lie) = [d x, y]_Lie = [x, d y]_Lie`.
pub fn centroid_lie(g: &LeibnizAlgebra) -> OperatorSpace {
    let n = g.dim();
    let mut sys = System::new(g, 1);
    for p in 0..n {
        for q in 0..n {
            let mut blk = sys.block();
            sys.map_of_lie(&mut blk, 0, false, p, q);
            sys.lie_of_map_left(&mut blk, 0, true, p, q);
            sys.push(blk);
        }
    }
    qcentroid_rows(&mut sys);
    sys.solve()
}

fn qcentroid_rows(sys: &mut System) {
    let n = sys.n;
    for p in 0..n {
        for q in p + 1..n {
            let mut blk = sys.block();
            sys.lie_of_map_left(&mut blk, 0, false, p, q);
            sys.lie_of_map_right(&mut blk, 0, true, p, q);
            sys.push(blk);
        }
    }
}

/// `QΓ^Lie(g)`: `[d x, y]_Lie = [x, d y]_Lie`.
pub fn qcentroid_lie(g: &LeibnizAlgebra) -> OperatorSpace {
    let mut sys = System::new(g, 1);
    qcentroid_rows(&mut sys);
    sys.solve()
}

/// `QDer^Lie(g)` with one witness `f'` per basis element.
pub fn qder_lie_with_witnesses(g: &LeibnizAlgebra) -> (OperatorSpace, Vec<Vec<Matrix>>) {
    let n = g.dim();
    let mut sys = System::new(g, 2);
    for p in 0..n {
        for q in p..n {
            let mut blk = sys.block();
            sys.lie_of_map_left(&mut blk, 0, false, p, q);
            sys.lie_of_map_right(&mut blk, 0, false, p, q);
            sys.map_of_lie(&mut blk, 1, true, p, q);
            sys.push(blk);
        }
    }
    sys.solve_projected()
}

/// `QDer^Lie(g)`: maps `f` for which some `f'` satisfies
/// `[f x, y]_Lie + [x, f y]_Lie = f'([x, y]_Lie)`.
pub fn qder_lie(g: &LeibnizAlgebra) -> OperatorSpace {
    qder_lie_with_witnesses(g).0
}

/// `GenDer^Lie(g)` with witnesses `(f', f'')` per basis element.
pub fn gender_lie_with_witnesses(g: &LeibnizAlgebra) -> (OperatorSpace, Vec<Vec<Matrix>>) {
    let n = g.dim();
    let mut sys = System::new(g, 3);
    for p in 0..n {
        for q in 0..n {
            let mut blk = sys.block();
            sys.lie_of_map_left(&mut blk, 0, false, p, q);
            sys.lie_of_map_right(&mut blk, 2, false, p, q);
            sys.map_of_lie(&mut blk, 1, true, p, q);
            sys.push(blk);
        }
    }
    sys.solve_projected()
}

/// `GenDer^Lie(g)`: maps `f` for which some `f', f''` satisfy
/// `[f x, y]_Lie + [x, f'' y]_Lie = f'([x, y]_Lie)`.
pub fn gender_lie(g: &LeibnizAlgebra) -> OperatorSpace {
    gender_lie_with_witnesses(g).0
}

/// `Der_z^Lie(g)`: Lie-derivations with image in `Z_Lie(g)`.
pub fn der_z_lie(g: &LeibnizAlgebra) -> OperatorSpace {
    let mut sys = System::new(g, 1);
    der_rows(&mut sys);
    sys.image_in(&lie_centre(g));
    sys.solve()
}

/// `{d : d(γ_2^Lie) = 0, im d ⊆ Z_Lie}`, computed without any derivation
/// equations.
pub fn der_z_closed_form(g: &LeibnizAlgebra) -> OperatorSpace {
    hom_maps(g, &gamma2(g), &lie_centre(g))
}

/// Maps `g → g` that vanish on `kill` and land in `into`.
pub(crate) fn hom_maps(g: &LeibnizAlgebra, kill: &Subspace, into: &Subspace) -> OperatorSpace {
    let mut sys = System::new(g, 1);
    sys.kills(kill);
    sys.image_in(into);
    sys.solve()
}

/// Gram matrices `G` of bilinear forms with
/// `f([a,c]_Lie, b) + f(a, [b,c]_Lie) = 0`. Stored like operators, so
/// `G[k][b]` is unknown `b·n + k`.
pub fn invariant_forms(g: &LeibnizAlgebra) -> OperatorSpace {
    let n = g.dim();
    let mut red = RowReducer::new(g.field(), n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut row = zero_vector(g.field(), n * n);
                for (k, s) in g.lie_product(a, c).iter().enumerate() {
                    if !s.is_zero() {
                        row[b * n + k] += s;
                    }
                }
                for (k, s) in g.lie_product(b, c).iter().enumerate() {
                    if !s.is_zero() {
                        row[k * n + a] += s;
                    }
                }
                red.push(row).unwrap();
            }
        }
    }
    OperatorSpace::from_subspace(n, red.kernel())
}
