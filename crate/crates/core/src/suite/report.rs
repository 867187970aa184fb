use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::spaces::OperatorSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Skipped => "skipped",
        })
    }
}

/// A matrix or vector attached to a report, entries as exact strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub applicable: bool,
    pub reason: String,
    pub verdict: Verdict,
    pub dims: BTreeMap<String, usize>,
    pub witnesses: Vec<Witness>,
}

impl TheoremReport {
    pub fn new(id: &str) -> Self {
        TheoremReport {
            id: id.to_string(),
            applicable: true,
            reason: String::new(),
            verdict: Verdict::Verified,
            dims: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn skipped(id: &str, reason: impl Into<String>) -> Self {
        TheoremReport {
            applicable: false,
            reason: reason.into(),
            verdict: Verdict::Skipped,
            ..TheoremReport::new(id)
        }
    }

    pub fn reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = reason.into();
        self
    }

    pub fn dim(mut self, key: &str, value: usize) -> Self {
        self.dims.insert(key.to_string(), value);
        self
    }

    pub fn space_dim(self, key: &str, s: &OperatorSpace) -> Self {
        self.dim(key, s.dim())
    }

    /// Marks the report refuted with a matrix witness.
    pub fn refute(mut self, label: &str, m: &Matrix) -> Self {
        self.verdict = Verdict::Refuted;
        self.witnesses.push(Witness {
            label: label.to_string(),
            rows: m.to_strings(),
        });
        self
    }

    pub fn refute_vector(mut self, label: &str, v: &[Scalar]) -> Self {
        self.verdict = Verdict::Refuted;
        self.witnesses.push(Witness {
            label: label.to_string(),
            rows: vec![v.iter().map(|s| s.to_string()).collect()],
        });
        self
    }

    /// Marks the report refuted when there is no single object to show.
    pub fn refute_plain(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::Refuted;
        self.reason = why.into();
        self
    }

    /// Attaches supporting data without changing the verdict.
    pub fn attach(mut self, label: &str, m: &Matrix) -> Self {
        self.witnesses.push(Witness {
            label: label.to_string(),
            rows: m.to_strings(),
        });
        self
    }

    pub fn is_refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<34} {:<9}", self.id, self.verdict)?;
        if !self.dims.is_empty() {
            let dims: Vec<String> = self.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", dims.join(" "))?;
        }
        if !self.reason.is_empty() {
            write!(f, " {}", self.reason)?;
        }
        for w in &self.witnesses {
            write!(f, "\n    {}:", w.label)?;
            for row in &w.rows {
                write!(f, "\n      [ {} ]", row.join("  "))?;
            }
        }
        Ok(())
    }
}

/// First basis element of `lhs` outside `rhs`.
pub(crate) fn outside(lhs: &OperatorSpace, rhs: &OperatorSpace) -> Option<Matrix> {
    lhs.basis().iter().find(|m| !rhs.contains(m)).cloned()
}

/// First commutator `[a, b]` of basis elements that leaves `target`.
pub(crate) fn commutator_outside(
    a: &OperatorSpace,
    b: &OperatorSpace,
    target: &OperatorSpace,
) -> Option<Matrix> {
    for x in a.basis() {
        for y in b.basis() {
            let c = x.commutator(y);
            if !target.contains(&c) {
                return Some(c);
            }
        }
    }
    None
}
