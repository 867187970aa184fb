mod common;

use common::oracle::exhaustive_identities;
use leibalg::algebra::{centres, LeibnizAlgebra};
use leibalg::catalog::leibniz;
use leibalg::linalg::{all_vectors, is_zero_vector, Matrix};
use leibalg::spaces::{
    centroid_lie, der_c_lie, der_lie, der_z_lie, gender_lie, identity as id, invariant_forms,
    qcentroid_lie, qder_lie, SpaceOptions,
};
use leibalg::{FieldSpec, Scalar};

const SMALL: [&str; 4] = ["L1", "L2", "N2b", "N2c"];

fn count(p: u64, n: usize, pred: impl Fn(&[Scalar]) -> bool) -> u64 {
    all_vectors(p, n).filter(|v| pred(v)).count() as u64
}

#[test]
fn centres_match_enumeration_mod_5() {
    for name in SMALL {
        let g = leibniz(name, FieldSpec::prime(5).unwrap()).unwrap();
        let n = g.dim();
        let basis: Vec<_> = (0..n).map(|i| g.basis_vector(i)).collect();
        let c = centres(&g);
        type Op<'a> = Box<dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar> + 'a>;
        let cases: [(&str, &leibalg::linalg::Subspace, Op); 4] = [
            ("Z_Lie", c.z_lie.carrier(), Box::new(|x, z| g.lie_bracket(x, z))),
            ("Z^r", c.z_right.carrier(), Box::new(|x, z| g.bracket(x, z))),
            ("Z^l", &c.z_left, Box::new(|x, z| g.bracket(z, x))),
            (
                "Z",
                c.z.carrier(),
                Box::new(|x, z| {
                    let mut v = g.bracket(x, z);
                    v.extend(g.bracket(z, x));
                    v
                }),
            ),
        ];
        for (label, s, op) in cases {
            let pred = |z: &[Scalar]| basis.iter().all(|x| is_zero_vector(&op(x, z)));
            assert_eq!(count(5, n, pred), 5u64.pow(s.dim() as u32), "{name} {label}");
            for v in all_vectors(5, n).filter(|v| pred(v)) {
                assert!(s.contains(&v).unwrap(), "{name} {label}");
            }
        }
    }
}

#[test]
fn every_basis_element_satisfies_its_identity_mod_5() {
    for name in SMALL {
        let (elements, checked, failures) = exhaustive_identities(name, 5);
        assert!(elements > 0 && checked > 0);
        assert!(failures.is_empty(), "{failures:?}");
    }
}

fn holds_on_basis(g: &LeibnizAlgebra, pred: impl Fn(&[Scalar], &[Scalar]) -> bool) -> bool {
    let n = g.dim();
    (0..n).all(|p| (0..n).all(|q| pred(&g.basis_vector(p), &g.basis_vector(q))))
}

/// `|S|` for each space over `F_3`, by enumerating all `3^{n²}` maps. The
/// QDer and GenDer counts search all auxiliary maps and run only in dim 2.
fn brute_force_dims(name: &str) -> Vec<(&'static str, u32)> {
    let f = FieldSpec::prime(3).unwrap();
    let g = leibniz(name, f).unwrap();
    let n = g.dim();
    let maps: Vec<Matrix> = all_vectors(3, n * n).map(|v| Matrix::from_col_major(f, n, &v)).collect();
    let points: Vec<_> = all_vectors(3, n).collect();
    let log3 = |c: usize| {
        let mut d = 0;
        let mut c = c;
        while c > 1 {
            assert_eq!(c % 3, 0, "{name}: solution count {c} is not a power of 3");
            c /= 3;
            d += 1;
        }
        d
    };
    let der = |d: &Matrix| holds_on_basis(&g, |x, y| id::der_holds(&g, d, x, y));
    let mut out = vec![
        ("der", log3(maps.iter().filter(|d| der(d)).count())),
        (
            "der_z",
            log3(maps
                .iter()
                .filter(|d| der(d) && holds_on_basis(&g, |x, y| id::central_image_holds(&g, d, x, y)))
                .count()),
        ),
        (
            "der_c",
            log3(maps
                .iter()
                .filter(|d| der(d) && points.iter().all(|x| id::almost_inner_holds(&g, d, x)))
                .count()),
        ),
        (
            "centroid",
            log3(maps.iter().filter(|d| holds_on_basis(&g, |x, y| id::centroid_holds(&g, d, x, y))).count()),
        ),
        (
            "qcentroid",
            log3(maps.iter().filter(|d| holds_on_basis(&g, |x, y| id::qcentroid_holds(&g, d, x, y))).count()),
        ),
        (
            "forms",
            log3(maps.iter().filter(|m| holds_on_basis(&g, |x, y| id::form_invariant_holds(&g, m, x, y))).count()),
        ),
    ];
    if n == 2 {
        let gen = |f: &Matrix, tied: bool| {
            maps.iter().any(|f1| {
                if tied {
                    return holds_on_basis(&g, |x, y| id::gender_holds(&g, f, f1, f, x, y));
                }
                maps.iter().any(|f2| holds_on_basis(&g, |x, y| id::gender_holds(&g, f, f1, f2, x, y)))
            })
        };
        out.push(("qder", log3(maps.iter().filter(|f| gen(f, true)).count())));
        out.push(("gender", log3(maps.iter().filter(|f| gen(f, false)).count())));
    }
    out
}

fn solver_dim(name: &str, space: &str) -> u32 {
    let g = leibniz(name, FieldSpec::prime(3).unwrap()).unwrap();
    (match space {
        "der" => der_lie(&g).dim(),
        "der_z" => der_z_lie(&g).dim(),
        "der_c" => der_c_lie(&g, &SpaceOptions::default()).0.dim(),
        "centroid" => centroid_lie(&g).dim(),
        "qcentroid" => qcentroid_lie(&g).dim(),
        "forms" => invariant_forms(&g).dim(),
        "qder" => qder_lie(&g).dim(),
        "gender" => gender_lie(&g).dim(),
        _ => unreachable!(),
    }) as u32
}

/// Dimensions over `F_3` found by enumeration, frozen.
const FROZEN: &[(&str, &[(&str, u32)])] = &[
    ("L1", &[("der", 1), ("der_z", 0), ("der_c", 1), ("centroid", 1), ("qcentroid", 3), ("forms", 1), ("qder", 2), ("gender", 4)]),
    ("L2", &[("der", 2), ("der_z", 1), ("der_c", 1), ("centroid", 2), ("qcentroid", 3), ("forms", 2), ("qder", 3), ("gender", 3)]),
    ("N2b", &[("der", 5), ("der_z", 4), ("der_c", 1), ("centroid", 5), ("qcentroid", 7), ("forms", 5)]),
    ("N2c", &[("der", 4), ("der_z", 2), ("der_c", 2), ("centroid", 3), ("qcentroid", 6), ("forms", 4)]),
];

#[test]
fn space_dims_match_enumeration_mod_3() {
    for &(name, frozen) in FROZEN {
        let brute = brute_force_dims(name);
        assert_eq!(brute.as_slice(), frozen, "{name}: enumeration");
        for &(space, d) in frozen {
            assert_eq!(solver_dim(name, space), d, "{name} {space}: solver");
        }
    }
}
