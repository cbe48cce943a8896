use serde::{Deserialize, Serialize};

use super::supercode::{controllable_subcode, observable_supercode, supercode_below};
use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::residue::{InvariantFactors, Subgroup};
use crate::sequence::{Interval, TimeSubset};

fn subset(c: &GroupCode, times: &[usize]) -> Result<TimeSubset> {
    TimeSubset::new(c.axis_len(), times.iter().copied())
}

/// Controller granule over an ordered run of times `t_0, ..., t_j`:
/// `C_{:T} / (C_{:T−t_j} + C_{:T−t_0})`.
pub fn controller_granule_on(c: &GroupCode, times: &[usize]) -> Result<InvariantFactors> {
    if times.is_empty() {
        return Err(Error::EmptySubset);
    }
    let num = c.shorten(&subset(c, times)?)?;
    let n = times.len();
    let without_last = c.shorten(&subset(c, &times[..n - 1])?)?;
    let without_first = c.shorten(&subset(c, &times[1..])?)?;
    let den = without_last.code_sum(&without_first)?;
    num.carrier().quotient_invariants(den.carrier())
}

/// Observer granule over an ordered run of times, via the window form:
/// `{v on T : v_{T−t_j} ∈ C_{|T−t_j}, v_{T−t_0} ∈ C_{|T−t_0}} / C_{|T}`,
/// and `G_t / C_{|{t}}` for a single time.
pub fn observer_granule_on(c: &GroupCode, times: &[usize]) -> Result<InvariantFactors> {
    if times.is_empty() {
        return Err(Error::EmptySubset);
    }
    let all = subset(c, times)?;
    let cols = c.layout().coords(&all)?;
    let den = c.carrier().select_columns(&cols);
    let num = if times.len() == 1 {
        Subgroup::full(c.modulus(), cols.len())
    } else {
        let n = times.len();
        let a = c.lift(&subset(c, &times[..n - 1])?)?;
        let b = c.lift(&subset(c, &times[1..])?)?;
        a.code_intersect(&b)?.carrier().select_columns(&cols)
    };
    num.quotient_invariants(&den)
}

fn interval_times(c: &GroupCode, k: usize, j: usize) -> Result<Vec<usize>> {
    Interval::at(k, j).ordered_times(c.axis_len())
}

/// `Γ_{[k,k+j]}(C)`.
pub fn controller_granule(c: &GroupCode, k: usize, j: usize) -> Result<InvariantFactors> {
    controller_granule_on(c, &interval_times(c, k, j)?)
}

/// `Φ_{[k,k+j]}(C) = (C^{j−1})_{|[k,k+j]} / (C^j)_{|[k,k+j]}`, straight from the definition.
pub fn observer_granule(c: &GroupCode, k: usize, j: usize) -> Result<InvariantFactors> {
    let times = interval_times(c, k, j)?;
    let above = supercode_below(c, j)?;
    let here = observable_supercode(c, j)?;
    observer_granule_between(&above, &here, &times)
}

fn observer_granule_between(
    above: &GroupCode,
    here: &GroupCode,
    times: &[usize],
) -> Result<InvariantFactors> {
    let s = subset(above, times)?;
    let num = above.restriction(&s)?;
    let den = here.restriction(&s)?;
    num.carrier().quotient_invariants(den.carrier())
}

/// Controller granule on an interval, which may wrap around the axis ends.
pub fn end_around_controller_granule(c: &GroupCode, iv: Interval) -> Result<InvariantFactors> {
    controller_granule_on(c, &iv.ordered_times(c.axis_len())?)
}

/// Observer granule on an interval, which may wrap around the axis ends.
pub fn end_around_observer_granule(c: &GroupCode, iv: Interval) -> Result<InvariantFactors> {
    observer_granule_on(c, &iv.ordered_times(c.axis_len())?)
}

/// `Φ_{[k,k+j]}(C) ≅ Γ_{[k,k+j]}(C⊥)`, compared as invariant lists.
pub fn granule_duality_check(c: &GroupCode, k: usize, j: usize) -> Result<bool> {
    Ok(observer_granule(c, k, j)? == controller_granule(&c.dual(), k, j)?)
}

/// End-around controller granule `Γ_{[n,m]}` against the observer granule `Φ_{[m,n]}`.
pub fn end_around_check(c: &GroupCode, m: usize, n: usize) -> Result<bool> {
    if n <= m {
        return Err(Error::MalformedInterval(format!(
            "end-around check needs n > m, got m={m}, n={n}"
        )));
    }
    let gamma = end_around_controller_granule(c, Interval::end_around(n, m))?;
    Ok(gamma == observer_granule(c, m, n - m)?)
}

/// The dual direction: `Φ_{[n,m]}` (end-around) against `Γ_{[m,n]}`.
pub fn end_around_observer_check(c: &GroupCode, m: usize, n: usize) -> Result<bool> {
    if n <= m {
        return Err(Error::MalformedInterval(format!(
            "end-around check needs n > m, got m={m}, n={n}"
        )));
    }
    let phi = end_around_observer_granule(c, Interval::end_around(n, m))?;
    Ok(phi == controller_granule(c, m, n - m)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GranuleEntry {
    pub k: usize,
    pub j: usize,
    pub controller: InvariantFactors,
    pub observer: InvariantFactors,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndAroundEntry {
    pub interval: Interval,
    pub controller: InvariantFactors,
    pub observer: InvariantFactors,
}

/// Controller and observer granules for every in-range interval up to a level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GranuleTable {
    pub axis_len: usize,
    pub max_level: usize,
    pub entries: Vec<GranuleEntry>,
    pub end_around: Vec<EndAroundEntry>,
}

impl GranuleTable {
    /// Levels `0..=max_level` (capped at `N − 1`); end-around entries only if requested.
    pub fn build(c: &GroupCode, max_level: usize, with_end_around: bool) -> Result<Self> {
        let n = c.axis_len();
        let max_level = max_level.min(n - 1);
        let mut entries = Vec::new();
        let mut above = GroupCode::full(c.layout().clone());
        for j in 0..=max_level {
            let here = observable_supercode(c, j)?;
            for k in 0..n - j {
                let times = interval_times(c, k, j)?;
                entries.push(GranuleEntry {
                    k,
                    j,
                    controller: controller_granule_on(c, &times)?,
                    observer: observer_granule_between(&above, &here, &times)?,
                });
            }
            above = here;
        }
        let mut end_around = Vec::new();
        if with_end_around {
            for lo in 1..n {
                for hi in 0..lo - 1 {
                    let iv = Interval::end_around(lo, hi);
                    end_around.push(EndAroundEntry {
                        interval: iv,
                        controller: end_around_controller_granule(c, iv)?,
                        observer: end_around_observer_granule(c, iv)?,
                    });
                }
            }
        }
        Ok(GranuleTable {
            axis_len: n,
            max_level,
            entries,
            end_around,
        })
    }

    pub fn get(&self, k: usize, j: usize) -> Option<&GranuleEntry> {
        self.entries.iter().find(|e| e.k == k && e.j == j)
    }

    /// Controller granule, trivial for intervals that leave the axis.
    pub fn controller(&self, k: isize, j: usize) -> InvariantFactors {
        self.lookup(k, j)
            .map(|e| e.controller.clone())
            .unwrap_or_default()
    }

    /// Observer granule, trivial for intervals that leave the axis.
    pub fn observer(&self, k: isize, j: usize) -> InvariantFactors {
        self.lookup(k, j)
            .map(|e| e.observer.clone())
            .unwrap_or_default()
    }

    fn lookup(&self, k: isize, j: usize) -> Option<&GranuleEntry> {
        if k < 0 {
            return None;
        }
        self.get(k as usize, j)
    }
}

/// `∏_{j≥1} ∏_{i∈[k−j,k)} |Γ_{[i,i+j]}|` over in-range intervals, and the same with `Φ`.
pub fn state_size_from_granules(c: &GroupCode, k: usize) -> Result<(u128, u128)> {
    let n = c.axis_len();
    let table = GranuleTable::build(c, n - 1, false)?;
    let mut by_gamma = 1u128;
    let mut by_phi = 1u128;
    for e in &table.entries {
        if e.j >= 1 && e.k < k && k <= e.k + e.j {
            by_gamma *= e.controller.order();
            by_phi *= e.observer.order();
        }
    }
    Ok((by_gamma, by_phi))
}

/// For each level `j`: `(∏_k |Γ_{[k,k+j]}|, |C_j|/|C_{j−1}|, ∏_k |Φ_{[k,k+j]}|, |C^{j−1}|/|C^j|)`.
pub fn level_factorization(c: &GroupCode) -> Result<Vec<(u128, u128, u128, u128)>> {
    let n = c.axis_len();
    let table = GranuleTable::build(c, n - 1, false)?;
    let mut out = Vec::new();
    let mut prev_sub = 1u128;
    let mut prev_sup = GroupCode::full(c.layout().clone()).code_order();
    for j in 0..n {
        let sub = controllable_subcode(c, j)?.code_order();
        let sup = observable_supercode(c, j)?.code_order();
        let (mut g, mut p) = (1u128, 1u128);
        for e in table.entries.iter().filter(|e| e.j == j) {
            g *= e.controller.order();
            p *= e.observer.order();
        }
        out.push((g, sub / prev_sub, p, prev_sup / sup));
        prev_sub = sub;
        prev_sup = sup;
    }
    Ok(out)
}
