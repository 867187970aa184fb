use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::algebra::{AssocCommAlgebra, LeibnizAlgebra, StructureTable};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Leibniz,
    Associative,
}

/// One non-zero product `[e_left, e_right] = Σ coeff·e_index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Product {
    pub left: usize,
    pub right: usize,
    pub result: Vec<(usize, String)>,
}

/// On-disk form of an algebra. Omitted products are zero; coefficients are
/// strings so that they stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub kind: Kind,
    pub dim: usize,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub table: Vec<Product>,
    #[serde(default)]
    pub unit: Option<Vec<String>>,
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })
}

impl AlgebraDocument {
    pub fn to_table(&self) -> Result<StructureTable> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse(format!(
                "basis lists {} names but dim is {n}",
                self.basis.len()
            )));
        }
        let f = self.field;
        let mut t = StructureTable::zero(f, self.basis.clone());
        let mut seen = std::collections::BTreeSet::new();
        for (pos, p) in self.table.iter().enumerate() {
            let at = |msg: String| Error::Parse(format!("table entry {pos}: {msg}"));
            if p.left >= n || p.right >= n {
                return Err(at(format!(
                    "index ({}, {}) out of range for dim {n}",
                    p.left, p.right
                )));
            }
            if !seen.insert((p.left, p.right)) {
                return Err(at(format!("product ({}, {}) given twice", p.left, p.right)));
            }
            let mut v = vec![Scalar::zero(f); n];
            for (k, c) in &p.result {
                if *k >= n {
                    return Err(at(format!("result index {k} out of range for dim {n}")));
                }
                let s = Scalar::parse(f, c).map_err(|e| at(format!("coefficient {c:?}: {e}")))?;
                v[*k] = &v[*k] + &s;
            }
            t.set_product(p.left, p.right, v);
        }
        Ok(t)
    }

    /// Parses and certifies the algebra.
    pub fn certify(&self) -> Result<Algebra> {
        let t = self.to_table()?;
        match self.kind {
            Kind::Leibniz => {
                if self.unit.is_some() {
                    return Err(Error::Parse("a Leibniz document cannot declare a unit".into()));
                }
                Ok(Algebra::Leibniz(LeibnizAlgebra::new(t)?))
            }
            Kind::Associative => {
                let unit = self
                    .unit
                    .as_ref()
                    .map(|u| {
                        if u.len() != self.dim {
                            return Err(Error::Parse(format!(
                                "unit has {} coordinates but dim is {}",
                                u.len(),
                                self.dim
                            )));
                        }
                        u.iter().map(|c| Scalar::parse(self.field, c)).collect()
                    })
                    .transpose()?;
                Ok(Algebra::Associative(AssocCommAlgebra::new(t, unit)?))
            }
        }
    }

    /// Canonical document: products in `(left, right)` order, zero
    /// coefficients dropped, canonical coefficient strings.
    pub fn from_algebra(name: &str, alg: &Algebra) -> Self {
        let t = alg.table();
        let table = t
            .nonzero_products()
            .into_iter()
            .map(|(left, right, terms)| Product {
                left,
                right,
                result: terms.into_iter().map(|(k, s)| (k, s.to_string())).collect(),
            })
            .collect();
        let (kind, unit) = match alg {
            Algebra::Leibniz(_) => (Kind::Leibniz, None),
            Algebra::Associative(a) => (
                Kind::Associative,
                a.unit().map(|u| u.iter().map(|s| s.to_string()).collect()),
            ),
        };
        AlgebraDocument {
            name: name.to_string(),
            kind,
            dim: t.dim(),
            field: t.field(),
            basis: t.basis_names().to_vec(),
            table,
            unit,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

pub fn parse_algebra(text: &str) -> Result<(String, Algebra)> {
    let doc = parse_document(text)?;
    let alg = doc.certify()?;
    Ok((doc.name, alg))
}
