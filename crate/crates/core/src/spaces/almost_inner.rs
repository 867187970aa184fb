//! Spaces cut out by the pointwise condition `d(x) ∈ [x, g]_Lie`. The
//! subspace `[x, g]_Lie` moves with `x`, so the condition is imposed at
//! sample points until the solution stabilizes and then checked
//! exhaustively over small prime fields. The condition is strongest where
//! `[x, g]_Lie` is small, so samples are also drawn from the linear loci
//! `{x : [x, g]_Lie ⊆ W}` for invariant subspaces `W`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::identity::lie_image_of;
use super::system::{der_rows, System};
use super::OperatorSpace;
use crate::algebra::{centres, gamma2, lie_centre, lower_central_series, Ideal, LeibnizAlgebra};
use crate::error::Result;
use crate::field::{is_prime, FieldSpec, Scalar};
use crate::linalg::{all_vectors, add_vectors, dot, Matrix, RowReducer, Subspace};

/// Largest `p^n` enumerated by the exhaustive check.
pub const EXHAUSTIVE_LIMIT: u128 = 200_000;

const PRIMES_CHECKED: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpaceOptions {
    pub seed: u64,
    /// Run the finite-field pass after sampling.
    pub certify: bool,
}

impl Default for SpaceOptions {
    fn default() -> Self {
        SpaceOptions {
            seed: 0,
            certify: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub prime: u64,
    pub points: u64,
    pub passed: bool,
    /// First point at which some basis element failed, as residues.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub seed: u64,
    pub samples: usize,
    pub rounds: usize,
    pub checks: Vec<PrimeCheck>,
    pub summary: String,
}

impl Certificate {
    fn new(seed: u64, samples: usize, rounds: usize, checks: Vec<PrimeCheck>, attempted: bool) -> Self {
        let summary = if checks.is_empty() {
            if attempted {
                "sampled-only (exhaustive check infeasible)".to_string()
            } else {
                "sampled-only".to_string()
            }
        } else {
            let primes: Vec<String> = checks.iter().map(|c| c.prime.to_string()).collect();
            let failed: Vec<String> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.prime.to_string())
                .collect();
            if failed.is_empty() {
                format!("exhaustive mod {}: pass", primes.join(","))
            } else {
                format!("exhaustive mod {}: FAIL mod {}", primes.join(","), failed.join(","))
            }
        };
        Certificate {
            seed,
            samples,
            rounds,
            checks,
            summary,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        !self.checks.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} samples, {} extra rounds, seed {})",
            self.summary, self.samples, self.rounds, self.seed
        )
    }
}

fn random_vector(rng: &mut ChaCha8Rng, field: FieldSpec, n: usize) -> Vec<Scalar> {
    (0..n)
        .map(|_| match field {
            FieldSpec::Rational => {
                let num = rng.gen_range(-7i64..=7);
                let den = rng.gen_range(1i64..=7);
                Scalar::from_ratio(field, num, den).unwrap()
            }
            FieldSpec::Prime(p) => Scalar::from_int(field, rng.gen_range(0..p) as i64),
        })
        .collect()
}

/// Adds `d x ∈ [x, g]_Lie` at `x` to the system; returns whether the rank rose.
fn impose_at(sys: &mut System, g: &LeibnizAlgebra, x: &[Scalar]) -> bool {
    let w = lie_image_of(g, x);
    let mut grew = false;
    for a in w.annihilator().basis_vectors() {
        grew |= sys.pointwise(&a, x);
    }
    grew
}

/// `{x : [x, g]_Lie ⊆ w}`.
fn lie_image_within(g: &LeibnizAlgebra, w: &Subspace) -> Subspace {
    let n = g.dim();
    let ann = w.annihilator().basis_vectors();
    let mut red = RowReducer::new(g.field(), n);
    for j in 0..n {
        for a in &ann {
            let row = (0..n).map(|i| dot(a, g.lie_product(i, j))).collect();
            red.push(row).expect("row length is the dimension");
        }
    }
    red.kernel()
}

/// Distinct proper non-zero loci `{x : [x, g]_Lie ⊆ W}` for `W` among 0,
/// the lower central series, `Z_Lie` and `Z`.
fn degenerate_loci(g: &LeibnizAlgebra) -> Vec<Subspace> {
    let n = g.dim();
    let c = centres(g);
    let mut ws = vec![Subspace::zero(g.field(), n), c.z_lie.carrier().clone(), c.z.carrier().clone()];
    ws.extend(lower_central_series(g, &Ideal::whole(g)).expect("whole algebra is an ideal"));
    let mut loci: Vec<Subspace> = Vec::new();
    for w in &ws {
        let k = lie_image_within(g, w);
        if !k.is_zero() && !k.is_full() && !loci.contains(&k) {
            loci.push(k);
        }
    }
    loci
}

fn random_in(rng: &mut ChaCha8Rng, s: &Subspace) -> Vec<Scalar> {
    let coeffs = random_vector(rng, s.field(), s.dim());
    let mut x = crate::linalg::zero_vector(s.field(), s.ambient_dim());
    for (c, b) in coeffs.iter().zip(s.basis_vectors()) {
        crate::linalg::axpy(&mut x, c, &b);
    }
    x
}

/// Sample, then add rounds of fresh samples until one round changes nothing.
fn sample_until_stable(sys: &mut System, g: &LeibnizAlgebra, seed: u64) -> (usize, usize) {
    let n = g.dim();
    let f = g.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_round = 2 * n * n;
    let loci = degenerate_loci(g);
    let mut samples = 0;
    for i in 0..n {
        impose_at(sys, g, &g.basis_vector(i));
        samples += 1;
        for j in i + 1..n {
            impose_at(sys, g, &add_vectors(&g.basis_vector(i), &g.basis_vector(j)));
            samples += 1;
        }
    }
    for locus in &loci {
        for b in locus.basis_vectors() {
            impose_at(sys, g, &b);
            samples += 1;
        }
    }
    let draw = |sys: &mut System, rng: &mut ChaCha8Rng, samples: &mut usize| {
        for _ in 0..per_round {
            impose_at(sys, g, &random_vector(rng, f, n));
            *samples += 1;
        }
        for locus in &loci {
            for _ in 0..n {
                impose_at(sys, g, &random_in(rng, locus));
                *samples += 1;
            }
        }
    };
    draw(sys, &mut rng, &mut samples);
    let mut rounds = 0;
    loop {
        let before = sys.rank();
        draw(sys, &mut rng, &mut samples);
        rounds += 1;
        if sys.rank() == before {
            return (samples, rounds);
        }
    }
}

/// Reductions of `g` and `basis` to the first usable small primes, where
/// usable means every coefficient reduces and `p^n` is small enough.
fn reductions(
    g: &LeibnizAlgebra,
    basis: &[Matrix],
) -> Vec<(u64, LeibnizAlgebra, Vec<Matrix>)> {
    let n = g.dim() as u32;
    let feasible = |p: u64| (p as u128).checked_pow(n).is_some_and(|t| t <= EXHAUSTIVE_LIMIT);
    let reduce = |p: u64| -> Option<(u64, LeibnizAlgebra, Vec<Matrix>)> {
        let f = FieldSpec::Prime(p);
        let gp = g.to_field(f).ok()?;
        let bp = basis.iter().map(|d| d.to_field(f)).collect::<Result<Vec<_>>>().ok()?;
        Some((p, gp, bp))
    };
    match g.field() {
        FieldSpec::Prime(p) => {
            if feasible(p) {
                reduce(p).into_iter().collect()
            } else {
                Vec::new()
            }
        }
        FieldSpec::Rational => {
            let mut out = Vec::new();
            let mut p = 3;
            while out.len() < PRIMES_CHECKED && feasible(p) {
                if let Some(r) = reduce(p) {
                    out.push(r);
                }
                p += 2;
                while !is_prime(p) {
                    p += 2;
                }
            }
            out
        }
    }
}

/// Checks `d x ∈ [x, g]_Lie` for every basis element at every point of
/// `F_p^n` for the usable small primes.
pub fn exhaustive_check(g: &LeibnizAlgebra, basis: &[Matrix]) -> Vec<PrimeCheck> {
    reductions(g, basis)
        .into_iter()
        .map(|(p, gp, bp)| {
            let mut points = 0u64;
            let mut counterexample = None;
            for x in all_vectors(p, gp.dim()) {
                points += 1;
                let w = lie_image_of(&gp, &x);
                if bp.iter().any(|d| !w.contains(&d.apply(&x)).unwrap()) {
                    counterexample = Some(x.iter().map(|s| s.to_string()).collect());
                    break;
                }
            }
            PrimeCheck {
                prime: p,
                points,
                passed: counterexample.is_none(),
                counterexample,
            }
        })
        .collect()
}

fn finish(mut sys: System, g: &LeibnizAlgebra, opts: &SpaceOptions) -> (OperatorSpace, Certificate) {
    let (samples, rounds) = sample_until_stable(&mut sys, g, opts.seed);
    let space = sys.solve();
    let checks = if opts.certify {
        exhaustive_check(g, space.basis())
    } else {
        Vec::new()
    };
    let cert = Certificate::new(opts.seed, samples, rounds, checks, opts.certify);
    (space, cert)
}

/// `Der_c^Lie(g)`: Lie-derivations with `d(x) ∈ [x, g]_Lie` for all `x`.
pub fn der_c_lie(g: &LeibnizAlgebra, opts: &SpaceOptions) -> (OperatorSpace, Certificate) {
    let mut sys = System::new(g, 1);
    der_rows(&mut sys);
    finish(sys, g, opts)
}

/// Linear maps `g → g` vanishing on an ideal and landing in a subspace,
/// i.e. `Hom(g / kill, into)` realized on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub kill: Subspace,
    pub target: Subspace,
    pub space: OperatorSpace,
    pub certificate: Option<Certificate>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn hom_space(g: &LeibnizAlgebra, kill: &Ideal, into: &Subspace) -> Result<HomSpace> {
    kill.require_two_sided()?;
    let mut sys = System::new(g, 1);
    sys.kills(kill.carrier());
    sys.image_in(into);
    Ok(HomSpace {
        kill: kill.carrier().clone(),
        target: into.clone(),
        space: sys.solve(),
        certificate: None,
    })
}

/// `T_c(g / Z_Lie, γ_2^Lie)`: maps `f` with `f(x + Z_Lie) ∈ [x, g]_Lie`.
pub fn t_c_space(g: &LeibnizAlgebra, opts: &SpaceOptions) -> HomSpace {
    let z = lie_centre(g);
    let gamma = gamma2(g);
    let mut sys = System::new(g, 1);
    sys.kills(&z);
    sys.image_in(&gamma);
    let (space, cert) = finish(sys, g, opts);
    HomSpace {
        kill: z,
        target: gamma,
        space,
        certificate: Some(cert),
    }
}
