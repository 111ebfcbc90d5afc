use std::fmt;

use crate::graph::VertexSet;
use crate::secure::DefenseCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Dominating,
    TwoDominating,
    TwoSecureDominating,
}

impl Problem {
    /// Short label used in reports and on the command line.
    pub fn label(self) -> &'static str {
        match self {
            Problem::Dominating => "dom",
            Problem::TwoDominating => "2dom",
            Problem::TwoSecureDominating => "2sds",
        }
    }

    /// Name of the optimum value in reports.
    pub fn value_key(self) -> &'static str {
        match self {
            Problem::Dominating => "gamma",
            Problem::TwoDominating => "gamma2",
            Problem::TwoSecureDominating => "gamma2s",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of an exact solve. `value == witness.len()`.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub problem: Problem,
    pub value: usize,
    pub witness: VertexSet,
    pub certificate: Option<DefenseCertificate>,
    pub subsets_examined: u64,
}
