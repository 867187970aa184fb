use std::path::Path;

use leibalg::algebra::{AssocCommAlgebra, LeibnizAlgebra};
use leibalg::catalog::{self, Algebra};
use leibalg::{Error, FieldSpec, Result};

/// A catalog name or a path to an algebra document.
pub struct Loaded {
    pub name: String,
    pub algebra: Algebra,
}

pub fn load(source: &str, field: Option<FieldSpec>) -> Result<Loaded> {
    match catalog::load(source, field.unwrap_or(FieldSpec::Rational)) {
        Ok(algebra) => {
            return Ok(Loaded {
                name: source.to_string(),
                algebra,
            })
        }
        Err(Error::UnknownAlgebra(_)) if Path::new(source).is_file() => {}
        Err(e) => return Err(e),
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::Parse(format!("cannot read `{source}`: {e}")))?;
    let (name, algebra) = catalog::parse_algebra(&text)?;
    let algebra = match field {
        Some(f) if f != algebra.table().field() => match algebra {
            Algebra::Leibniz(g) => Algebra::Leibniz(g.to_field(f)?),
            Algebra::Associative(a) => Algebra::Associative(a.to_field(f)?),
        },
        _ => algebra,
    };
    Ok(Loaded { name, algebra })
}

pub fn leibniz(source: &str, field: Option<FieldSpec>) -> Result<(String, LeibnizAlgebra)> {
    let l = load(source, field)?;
    let g = l.algebra.into_leibniz(&l.name)?;
    Ok((l.name, g))
}

pub fn associative(source: &str, field: Option<FieldSpec>) -> Result<(String, AssocCommAlgebra)> {
    let l = load(source, field)?;
    let a = l.algebra.into_associative(&l.name)?;
    Ok((l.name, a))
}
