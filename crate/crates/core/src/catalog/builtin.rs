use crate::algebra::{AssocCommAlgebra, LeibnizAlgebra, StructureTable};
use crate::error::{Error, Result};
use crate::field::{smallest_nonresidue, FieldSpec, Scalar};
use crate::linalg::unit_vector;

/// A catalog entry of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Leibniz(LeibnizAlgebra),
    Associative(AssocCommAlgebra),
}

impl Algebra {
    pub fn table(&self) -> &StructureTable {
        match self {
            Algebra::Leibniz(g) => g.table(),
            Algebra::Associative(a) => a.table(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Algebra::Leibniz(_) => "leibniz",
            Algebra::Associative(_) => "associative",
        }
    }

    pub fn into_leibniz(self, name: &str) -> Result<LeibnizAlgebra> {
        match self {
            Algebra::Leibniz(g) => Ok(g),
            Algebra::Associative(_) => Err(Error::UnknownAlgebra(format!(
                "{name} is associative, a Leibniz algebra is required"
            ))),
        }
    }

    pub fn into_associative(self, name: &str) -> Result<AssocCommAlgebra> {
        match self {
            Algebra::Associative(a) => Ok(a),
            Algebra::Leibniz(_) => Err(Error::UnknownAlgebra(format!(
                "{name} is a Leibniz algebra, an associative algebra is required"
            ))),
        }
    }
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: &'static str,
    pub description: &'static str,
}

/// Fixed entries. `TK<M>`, `B<M>` and `ABEL<n>` are families; the listed
/// members are the ones the test suites use.
pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "L1", kind: "leibniz", description: "[e,f] = e" },
    CatalogEntry { name: "L2", kind: "leibniz", description: "[f,f] = λe, λ = 2 over Q, least non-residue mod p" },
    CatalogEntry { name: "L1p", kind: "leibniz", description: "[a1,a2] = a1" },
    CatalogEntry { name: "N2b", kind: "leibniz", description: "[a3,a3] = a1" },
    CatalogEntry { name: "N2c", kind: "leibniz", description: "[a2,a2] = [a3,a3] = a1" },
    CatalogEntry { name: "OM5", kind: "leibniz", description: "5-dim, γ2 = <a4,a5>, centroid = scalars" },
    CatalogEntry { name: "ABEL1", kind: "leibniz", description: "abelian, dim 1 (ABEL<n> for any n)" },
    CatalogEntry { name: "ABEL2", kind: "leibniz", description: "abelian, dim 2" },
    CatalogEntry { name: "ABEL3", kind: "leibniz", description: "abelian, dim 3" },
    CatalogEntry { name: "A4", kind: "associative", description: "e1e1 = e1, e1e2 = e2, e2e2 = 0" },
    CatalogEntry { name: "TK2", kind: "associative", description: "K[t]/(t^2) (TK<M> for any M ≥ 1)" },
    CatalogEntry { name: "TK3", kind: "associative", description: "K[t]/(t^3)" },
    CatalogEntry { name: "B4", kind: "associative", description: "tK[t]/(t^4), no unit (B<M> for any M ≥ 2)" },
];

/// Leibniz entries used by the property suites.
pub const LEIBNIZ_NAMES: &[&str] = &["L1", "L2", "L1p", "N2b", "N2c", "OM5", "ABEL1", "ABEL2", "ABEL3"];

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn table(field: FieldSpec, basis: &[&str], products: &[(usize, usize, &[(usize, i64)])]) -> StructureTable {
    let mut t = StructureTable::zero(field, names(basis));
    for &(i, j, r) in products {
        t.set_product_ints(i, j, r);
    }
    t
}

fn leibniz(t: StructureTable) -> Result<Algebra> {
    Ok(Algebra::Leibniz(LeibnizAlgebra::new(t)?))
}

fn family(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Looks up a catalog algebra over `field`. Names are case-sensitive.
pub fn load(name: &str, field: FieldSpec) -> Result<Algebra> {
    match name {
        "L1" => leibniz(table(field, &["e", "f"], &[(0, 1, &[(0, 1)])])),
        "L2" => {
            let lambda = match field {
                FieldSpec::Rational => 2,
                FieldSpec::Prime(p) => smallest_nonresidue(p) as i64,
            };
            leibniz(table(field, &["e", "f"], &[(1, 1, &[(0, lambda)])]))
        }
        "L1p" => leibniz(table(field, &["a1", "a2"], &[(0, 1, &[(0, 1)])])),
        "N2b" => leibniz(table(field, &["a1", "a2", "a3"], &[(2, 2, &[(0, 1)])])),
        "N2c" => leibniz(table(
            field,
            &["a1", "a2", "a3"],
            &[(1, 1, &[(0, 1)]), (2, 2, &[(0, 1)])],
        )),
        "OM5" => leibniz(table(
            field,
            &["a1", "a2", "a3", "a4", "a5"],
            &[
                (1, 0, &[(2, -1)]),
                (0, 1, &[(2, 1)]),
                (0, 2, &[(0, -2)]),
                (2, 0, &[(0, 2)]),
                (2, 1, &[(1, -2)]),
                (1, 2, &[(1, 2)]),
                (4, 0, &[(3, 1)]),
                (3, 1, &[(4, 1)]),
                (3, 2, &[(3, -1)]),
                (4, 2, &[(4, 1)]),
            ],
        )),
        "A4" => {
            let t = table(
                field,
                &["e1", "e2"],
                &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 0, &[(1, 1)])],
            );
            Ok(Algebra::Associative(AssocCommAlgebra::new(t, Some(unit_vector(field, 2, 0)))?))
        }
        _ => {
            if let Some(n) = family(name, "ABEL") {
                return Ok(Algebra::Leibniz(LeibnizAlgebra::abelian(field, n)));
            }
            if let Some(m) = family(name, "TK").filter(|&m| m >= 1) {
                return Ok(Algebra::Associative(truncated_polynomials(field, m)?));
            }
            if let Some(m) = family(name, "B").filter(|&m| m >= 2) {
                return Ok(Algebra::Associative(truncated_ideal(field, m)?));
            }
            Err(Error::UnknownAlgebra(name.to_string()))
        }
    }
}

/// `K[t]/(t^m)` on the basis `1, t, …, t^{m−1}`.
pub fn truncated_polynomials(field: FieldSpec, m: usize) -> Result<AssocCommAlgebra> {
    let basis: Vec<String> = (0..m).map(monomial).collect();
    let mut t = StructureTable::zero(field, basis);
    for i in 0..m {
        for j in 0..m {
            if i + j < m {
                let mut v = vec![Scalar::zero(field); m];
                v[i + j] = Scalar::one(field);
                t.set_product(i, j, v);
            }
        }
    }
    AssocCommAlgebra::new(t, Some(unit_vector(field, m, 0)))
}

/// `tK[t]/(t^m)` on the basis `t, …, t^{m−1}`; it has no unit.
pub fn truncated_ideal(field: FieldSpec, m: usize) -> Result<AssocCommAlgebra> {
    let d = m - 1;
    let basis: Vec<String> = (1..m).map(monomial).collect();
    let mut t = StructureTable::zero(field, basis);
    for i in 0..d {
        for j in 0..d {
            // t^{i+1} t^{j+1} = t^{i+j+2}, basis index i + j + 1.
            if i + j + 2 < m {
                let mut v = vec![Scalar::zero(field); d];
                v[i + j + 1] = Scalar::one(field);
                t.set_product(i, j, v);
            }
        }
    }
    AssocCommAlgebra::new(t, None)
}

fn monomial(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{k}"),
    }
}
