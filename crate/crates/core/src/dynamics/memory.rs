use serde::{Deserialize, Serialize};

use super::supercode::{controllable_subcode, future, past};
use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::sequence::TimeSubset;

/// Verdicts of the two independent tests for one interval `[m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestPair {
    pub first: bool,
    pub second: bool,
}

impl TestPair {
    pub fn agree(&self) -> bool {
        self.first == self.second
    }

    fn verdict(self, what: &str, m: usize, n: usize) -> Result<bool> {
        if !self.agree() {
            return Err(Error::InternalInconsistency(format!(
                "{what} tests disagree on [{m}, {n}): first={}, second={}",
                self.first, self.second
            )));
        }
        Ok(self.first)
    }
}

fn check_interval(c: &GroupCode, m: usize, n: usize) -> Result<()> {
    if m > n || n > c.axis_len() {
        return Err(Error::MalformedInterval(format!(
            "[{m}, {n}) on an axis of length {}",
            c.axis_len()
        )));
    }
    Ok(())
}

/// Both `[m, n)`-controllability tests:
/// `P_{I−[m,n)}(C) = P_{[0,m)}(C) + P_{[n,N)}(C)` and `C = C_{:[0,n)} + C_{:[m,N)}`.
pub fn controllability_tests(c: &GroupCode, m: usize, n: usize) -> Result<TestPair> {
    check_interval(c, m, n)?;
    let outside = TimeSubset::range(c.axis_len(), m, n).complement();
    let lhs = c.project(&outside)?;
    let rhs = c
        .project(&past(c, m))?
        .code_sum(&c.project(&future(c, n))?)?;
    let first = lhs.code_equal(&rhs)?;
    let split = c
        .shorten(&past(c, n))?
        .code_sum(&c.shorten(&future(c, m))?)?;
    let second = c.code_equal(&split)?;
    Ok(TestPair { first, second })
}

/// Both `[m, n)`-observability tests:
/// `C = {w : w_{[0,n)} ∈ C_{|[0,n)}, w_{[m,N)} ∈ C_{|[m,N)}}` and
/// `C_{:I−[m,n)} = C_{:[0,m)} + C_{:[n,N)}`.
pub fn observability_tests(c: &GroupCode, m: usize, n: usize) -> Result<TestPair> {
    check_interval(c, m, n)?;
    let glued = c
        .lift(&past(c, n))?
        .code_intersect(&c.lift(&future(c, m))?)?;
    let first = c.code_equal(&glued)?;
    let outside = TimeSubset::range(c.axis_len(), m, n).complement();
    let lhs = c.shorten(&outside)?;
    let rhs = c
        .shorten(&past(c, m))?
        .code_sum(&c.shorten(&future(c, n))?)?;
    let second = lhs.code_equal(&rhs)?;
    Ok(TestPair { first, second })
}

/// `[m, n)`-controllability; errors if the two tests ever disagree.
pub fn controllable_on(c: &GroupCode, m: usize, n: usize) -> Result<bool> {
    controllability_tests(c, m, n)?.verdict("controllability", m, n)
}

/// `[m, n)`-observability; errors if the two tests ever disagree.
pub fn observable_on(c: &GroupCode, m: usize, n: usize) -> Result<bool> {
    observability_tests(c, m, n)?.verdict("observability", m, n)
}

fn least_length(
    c: &GroupCode,
    margin: usize,
    test: impl Fn(&GroupCode, usize, usize) -> Result<bool>,
) -> Result<Option<usize>> {
    let n = c.axis_len();
    if 2 * margin > n {
        return Ok(None);
    }
    for l in 0..=n - 2 * margin {
        let mut eligible = 0;
        let mut pass = true;
        for m in margin..=n - margin - l {
            if m == 0 && l == n {
                continue;
            }
            eligible += 1;
            if !test(c, m, m + l)? {
                pass = false;
                break;
            }
        }
        if eligible > 0 && pass {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Least `L` such that every `[m, m+L)` with `margin <= m`, `m+L <= N−margin` is controllable.
pub fn controllability_index(c: &GroupCode, margin: usize) -> Result<Option<usize>> {
    least_length(c, margin, controllable_on)
}

/// Least `L` such that every `[m, m+L)` with `margin <= m`, `m+L <= N−margin` is observable.
pub fn observability_index(c: &GroupCode, margin: usize) -> Result<Option<usize>> {
    least_length(c, margin, observable_on)
}

/// Every nontrivial `[m, m+L)` (with `1 <= m`, `m+L <= N−1`) is controllable.
pub fn l_controllable(c: &GroupCode, l: usize) -> Result<bool> {
    let n = c.axis_len();
    if l + 2 > n {
        return Ok(true);
    }
    for m in 1..=n - 1 - l {
        if !controllable_on(c, m, m + l)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C = C_L`.
pub fn l_finite_check(c: &GroupCode, l: usize) -> Result<bool> {
    controllable_subcode(c, l)?.code_equal(c)
}

/// Least `L` with `C = C_L`; always exists on a finite axis.
pub fn controller_memory(c: &GroupCode) -> Result<usize> {
    for l in 0..c.axis_len() {
        if l_finite_check(c, l)? {
            return Ok(l);
        }
    }
    Ok(c.axis_len())
}

/// Least `L` such that every `[m, m+L)` on the whole axis is observable.
pub fn observer_memory(c: &GroupCode) -> Result<usize> {
    let n = c.axis_len();
    for l in 0..=n {
        let mut ok = true;
        for m in 0..=n - l {
            if !observable_on(c, m, m + l)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(l);
        }
    }
    Ok(n)
}
