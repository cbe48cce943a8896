use serde::{Deserialize, Serialize};

use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::residue::InvariantFactors;
use crate::sequence::TimeSubset;

/// The state space at a cut, computed four independent ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateSpaceReport {
    pub cut: TimeSubset,
    /// `C / (C_{:J} + C_{:I−J})`
    pub two_sided: InvariantFactors,
    /// `C_{|J} / C_{|:J}`
    pub one_sided_past: InvariantFactors,
    /// `C_{|I−J} / C_{|:I−J}`
    pub one_sided_future: InvariantFactors,
    /// `(C_{|J} × C_{|I−J}) / C`
    pub reciprocal: InvariantFactors,
}

impl StateSpaceReport {
    pub fn consistent(&self) -> bool {
        self.two_sided == self.one_sided_past
            && self.two_sided == self.one_sided_future
            && self.two_sided == self.reciprocal
    }

    pub fn value(&self) -> &InvariantFactors {
        &self.two_sided
    }
}

/// Two-sided state space only.
pub fn state_invariants(c: &GroupCode, j: &TimeSubset) -> Result<InvariantFactors> {
    check_cut(c, j)?;
    let rest = j.complement();
    let den = c.shorten(j)?.code_sum(&c.shorten(&rest)?)?;
    c.carrier().quotient_invariants(den.carrier())
}

fn check_cut(c: &GroupCode, j: &TimeSubset) -> Result<()> {
    if j.axis_len() != c.axis_len() {
        return Err(Error::LayoutMismatch(format!(
            "cut on axis {} for code on axis {}",
            j.axis_len(),
            c.axis_len()
        )));
    }
    if j.is_empty() || j.is_full() {
        return Err(Error::DegenerateCut);
    }
    Ok(())
}

pub fn state_space(c: &GroupCode, j: &TimeSubset) -> Result<StateSpaceReport> {
    check_cut(c, j)?;
    let rest = j.complement();
    let two_sided = state_invariants(c, j)?;
    let one_sided = |s: &TimeSubset| -> Result<InvariantFactors> {
        let r = c.restriction(s)?;
        let rs = c.restricted_subcode(s)?;
        r.carrier().quotient_invariants(rs.carrier())
    };
    let one_sided_past = one_sided(j)?;
    let one_sided_future = one_sided(&rest)?;
    let product = c.project(j)?.code_sum(&c.project(&rest)?)?;
    let reciprocal = product.carrier().quotient_invariants(c.carrier())?;
    Ok(StateSpaceReport {
        cut: j.clone(),
        two_sided,
        one_sided_past,
        one_sided_future,
        reciprocal,
    })
}

/// State space between the past `[0, k)` and the future `[k, N)`.
pub fn state_at(c: &GroupCode, k: usize) -> Result<StateSpaceReport> {
    let n = c.axis_len();
    if k == 0 || k >= n {
        return Err(Error::TimeOutOfRange {
            time: k,
            axis_len: n,
        });
    }
    state_space(c, &TimeSubset::past(n, k))
}
