//! Executable checks of the structural statements, one report each.

mod context;
mod pair;
mod report;
mod single;
mod tensor;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use context::AlgebraContext;
pub use pair::run_pair_suite;
pub use report::{TheoremReport, Verdict, Witness};
pub use tensor::run_tensor_suite;

/// Check groups selectable with `--suite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    /// Centroid structure.
    S3,
    /// Generalized derivations.
    S4,
    /// Almost inner derivations.
    S5,
    /// Single-algebra consequences used with tensor products.
    S6,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::S3, Group::S4, Group::S5, Group::S6];
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::S3 => "s3",
            Group::S4 => "s4",
            Group::S5 => "s5",
            Group::S6 => "s6",
        })
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s3" => Ok(Group::S3),
            "s4" => Ok(Group::S4),
            "s5" => Ok(Group::S5),
            "s6" => Ok(Group::S6),
            _ => Err(Error::Parse(format!("unknown suite `{s}` (expected all, s3, s4, s5 or s6)"))),
        }
    }
}

pub trait Check: Send + Sync {
    fn id(&self) -> &'static str;
    fn group(&self) -> Group;
    fn run(&self, ctx: &AlgebraContext) -> Result<TheoremReport>;
}

pub fn checks() -> &'static [&'static dyn Check] {
    single::CHECKS
}

/// Runs every check in `groups`, in registry order. A check that cannot be
/// carried out is reported as skipped.
pub fn run_suite(ctx: &AlgebraContext, groups: &[Group]) -> Vec<TheoremReport> {
    checks()
        .iter()
        .filter(|c| groups.contains(&c.group()))
        .map(|c| {
            c.run(ctx)
                .unwrap_or_else(|e| TheoremReport::skipped(c.id(), format!("not computable: {e}")))
        })
        .collect()
}

pub fn any_refuted(reports: &[TheoremReport]) -> bool {
    reports.iter().any(TheoremReport::is_refuted)
}
