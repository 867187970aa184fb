//! Built-in example algebras, the JSON document format and random
//! basis changes.

mod builtin;
mod document;
mod random;

pub use builtin::{
    load, truncated_ideal, truncated_polynomials, Algebra, CatalogEntry, ENTRIES, LEIBNIZ_NAMES,
};
pub use document::{parse_algebra, parse_document, AlgebraDocument, Kind, Product};
pub use random::{random_variant, Variant};

use crate::algebra::{AssocCommAlgebra, LeibnizAlgebra};
use crate::error::Result;
use crate::field::FieldSpec;

pub fn leibniz(name: &str, field: FieldSpec) -> Result<LeibnizAlgebra> {
    load(name, field)?.into_leibniz(name)
}

pub fn associative(name: &str, field: FieldSpec) -> Result<AssocCommAlgebra> {
    load(name, field)?.into_associative(name)
}
