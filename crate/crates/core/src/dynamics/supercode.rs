use crate::code::GroupCode;
use crate::error::Result;
use crate::sequence::{Interval, TimeSubset};

/// `C_j`: the sum of the subcodes supported on length-`(j+1)` intervals.
pub fn controllable_subcode(c: &GroupCode, j: usize) -> Result<GroupCode> {
    let n = c.axis_len();
    if j + 1 >= n {
        return Ok(c.clone());
    }
    let mut acc = GroupCode::trivial(c.layout().clone());
    for k in 0..n - j {
        acc = acc.code_sum(&c.shorten(&Interval::at(k, j).to_subset(n)?)?)?;
    }
    Ok(acc)
}

/// `C^j`: words that look like codewords through every length-`(j+1)` window.
pub fn observable_supercode(c: &GroupCode, j: usize) -> Result<GroupCode> {
    let n = c.axis_len();
    if j + 1 >= n {
        return Ok(c.clone());
    }
    let mut acc = GroupCode::full(c.layout().clone());
    for k in 0..n - j {
        acc = acc.code_intersect(&c.lift(&Interval::at(k, j).to_subset(n)?)?)?;
    }
    Ok(acc)
}

/// `C^{j−1}`, with `C^{−1}` the whole sequence space.
pub(crate) fn supercode_below(c: &GroupCode, j: usize) -> Result<GroupCode> {
    if j == 0 {
        Ok(GroupCode::full(c.layout().clone()))
    } else {
        observable_supercode(c, j - 1)
    }
}

/// `(C⊥)^j == (C_j)⊥`.
pub fn subcode_supercode_duality_check(c: &GroupCode, j: usize) -> Result<bool> {
    let lhs = observable_supercode(&c.dual(), j)?;
    let rhs = controllable_subcode(c, j)?.dual();
    lhs.code_equal(&rhs)
}

/// The past `[0, k)`.
pub(crate) fn past(c: &GroupCode, k: usize) -> TimeSubset {
    TimeSubset::past(c.axis_len(), k)
}

/// The future `[k, N)`.
pub(crate) fn future(c: &GroupCode, k: usize) -> TimeSubset {
    TimeSubset::future(c.axis_len(), k)
}
