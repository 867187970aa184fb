use std::fmt;

use serde::{Deserialize, Serialize};

use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sides {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for Sides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sides::Left => "left",
            Sides::Right => "right",
            Sides::TwoSided => "two-sided",
        })
    }
}

/// A subspace certified to absorb brackets with the algebra on the given
/// side(s). A left ideal satisfies `[h, g] ⊆ h`, a right ideal `[g, h] ⊆ h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    carrier: Subspace,
    sides: Sides,
}

impl Ideal {
    pub fn new(g: &LeibnizAlgebra, carrier: Subspace, sides: Sides) -> Result<Self> {
        if carrier.ambient_dim() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                found: carrier.ambient_dim(),
            });
        }
        if carrier.field() != g.field() {
            return Err(Error::FieldMismatch {
                expected: g.field(),
                found: carrier.field(),
            });
        }
        let check_left = matches!(sides, Sides::Left | Sides::TwoSided);
        let check_right = matches!(sides, Sides::Right | Sides::TwoSided);
        for h in carrier.basis_vectors() {
            for j in 0..g.dim() {
                let e = g.basis_vector(j);
                if check_left && !carrier.contains(&g.bracket(&h, &e))? {
                    return Err(not_ideal(g, sides, "[h, ", j, "]"));
                }
                if check_right && !carrier.contains(&g.bracket(&e, &h))? {
                    return Err(not_ideal(g, sides, "[", j, ", h]"));
                }
            }
        }
        Ok(Ideal { carrier, sides })
    }

    pub fn two_sided(g: &LeibnizAlgebra, carrier: Subspace) -> Result<Self> {
        Ideal::new(g, carrier, Sides::TwoSided)
    }

    pub fn whole(g: &LeibnizAlgebra) -> Self {
        Ideal {
            carrier: Subspace::full(g.field(), g.dim()),
            sides: Sides::TwoSided,
        }
    }

    pub fn zero(g: &LeibnizAlgebra) -> Self {
        Ideal {
            carrier: Subspace::zero(g.field(), g.dim()),
            sides: Sides::TwoSided,
        }
    }

    /// For subspaces already known to be two-sided ideals by construction.
    pub(crate) fn trusted(carrier: Subspace) -> Self {
        Ideal {
            carrier,
            sides: Sides::TwoSided,
        }
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn sides(&self) -> Sides {
        self.sides
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub(crate) fn require_two_sided(&self) -> Result<()> {
        if self.sides == Sides::TwoSided {
            Ok(())
        } else {
            Err(Error::NotAnIdeal {
                sides: "two-sided",
                detail: format!("a {} ideal was supplied", self.sides),
            })
        }
    }
}

fn not_ideal(g: &LeibnizAlgebra, sides: Sides, pre: &str, j: usize, post: &str) -> Error {
    Error::NotAnIdeal {
        sides: match sides {
            Sides::Left => "left",
            Sides::Right => "right",
            Sides::TwoSided => "two-sided",
        },
        detail: format!("{pre}{}{post} leaves the subspace", g.table().name(j)),
    }
}
