//! Finite windows of time-invariant codes built from shifted tap generators
//! and periodic full-axis patterns, plus interior ("central") reports.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::code::GroupCode;
use crate::dynamics::{
    controllability_index, observability_index, output_chains, state_at, GranuleTable,
};
use crate::error::{Error, Result};
use crate::residue::{dot, InvariantFactors, Modulus};
use crate::sequence::SymbolLayout;

/// A time-invariant code description over `(ℤ_M)^width`.
///
/// `generators` are finite tap sequences (tap `d` sits at delay `d`); every
/// shift that fits in the window is included. `patterns` are periodic words
/// repeated over the whole axis, included in every phase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub modulus: Modulus,
    pub width: usize,
    #[serde(default)]
    pub generators: Vec<Vec<Vec<u64>>>,
    #[serde(default)]
    pub patterns: Vec<Vec<Vec<u64>>>,
}

fn is_zero(sym: &[u64]) -> bool {
    sym.iter().all(|&x| x == 0)
}

impl ConvSpec {
    pub fn new(
        modulus: Modulus,
        width: usize,
        generators: Vec<Vec<Vec<u64>>>,
        patterns: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self> {
        let spec = ConvSpec {
            name: None,
            modulus,
            width,
            generators: reduce_all(modulus, generators),
            patterns: reduce_all(modulus, patterns),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.width == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        for seq in self.generators.iter().chain(&self.patterns) {
            for sym in seq {
                if sym.len() != self.width {
                    return Err(Error::DimensionMismatch {
                        expected: self.width,
                        found: sym.len(),
                    });
                }
            }
            if seq.iter().all(|s| is_zero(s)) {
                return Err(Error::Parse(
                    "generator or pattern with no nonzero symbol".into(),
                ));
            }
        }
        Ok(())
    }

    /// Degree of a tap generator: its last nonzero delay.
    pub fn degree(taps: &[Vec<u64>]) -> usize {
        taps.iter().rposition(|s| !is_zero(s)).unwrap_or(0)
    }

    /// Largest generator degree, counting a period-`p` pattern as degree `p − 1`.
    pub fn max_degree(&self) -> usize {
        let g = self.generators.iter().map(|t| Self::degree(t));
        let p = self.patterns.iter().map(|p| p.len().saturating_sub(1));
        g.chain(p).max().unwrap_or(0)
    }

    /// Default interior margin: one past the largest degree, and at least 2.
    pub fn default_margin(&self) -> usize {
        (self.max_degree() + 1).max(2)
    }

    /// Shortest axis whose centre is at least one margin from both ends.
    pub fn min_central_axis(&self, margin: usize) -> usize {
        2 * margin + self.max_degree() + 1
    }
}

fn reduce_all(m: Modulus, seqs: Vec<Vec<Vec<u64>>>) -> Vec<Vec<Vec<u64>>> {
    seqs.into_iter()
        .map(|s| {
            s.into_iter()
                .map(|sym| sym.into_iter().map(|x| m.reduce(x)).collect())
                .collect()
        })
        .collect()
}

/// A spec realized on the axis `0..N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowedCode {
    pub spec: ConvSpec,
    pub axis_len: usize,
    pub margin: usize,
    pub code: GroupCode,
}

/// All in-window shifts of the tap generators plus every phase of every pattern.
pub fn window(spec: &ConvSpec, axis_len: usize) -> Result<WindowedCode> {
    spec.validate()?;
    let need = spec.max_degree() + 1;
    if axis_len < need {
        return Err(Error::AxisTooShort {
            axis_len,
            required: need,
        });
    }
    let layout = SymbolLayout::uniform(spec.modulus, axis_len, spec.width)?;
    let w = spec.width;
    let mut words = Vec::new();
    for taps in &spec.generators {
        let deg = ConvSpec::degree(taps);
        for s in 0..axis_len - deg {
            let mut v = vec![0; layout.total_dim()];
            for (d, sym) in taps.iter().take(deg + 1).enumerate() {
                v[(s + d) * w..(s + d + 1) * w].copy_from_slice(sym);
            }
            words.push(v);
        }
    }
    for pat in &spec.patterns {
        let p = pat.len();
        for phase in 0..p {
            let mut v = vec![0; layout.total_dim()];
            for t in 0..axis_len {
                v[t * w..(t + 1) * w].copy_from_slice(&pat[(t + phase) % p]);
            }
            words.push(v);
        }
    }
    let code = GroupCode::from_generators(layout, words)?;
    Ok(WindowedCode {
        spec: spec.clone(),
        axis_len,
        margin: spec.default_margin(),
        code,
    })
}

/// Distinct granule values over the interior intervals of one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelGranules {
    pub level: usize,
    pub controller: Vec<InvariantFactors>,
    pub observer: Vec<InvariantFactors>,
}

/// Chain quotients at the centre, per level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralChains {
    pub first_output: Vec<InvariantFactors>,
    pub last_output: Vec<InvariantFactors>,
    pub dual_first_output: Vec<InvariantFactors>,
    pub dual_last_output: Vec<InvariantFactors>,
    pub input_group_order: u128,
    pub syndrome_group: InvariantFactors,
}

/// Interior values of a code: the state at the centre, both memories (with
/// the margin), the granule table over interior intervals and the output
/// chains at the centre.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralReport {
    pub name: Option<String>,
    pub axis_len: usize,
    pub center: usize,
    pub margin: usize,
    pub state: InvariantFactors,
    pub controller_memory: Option<usize>,
    pub observer_memory: Option<usize>,
    pub granules: Vec<LevelGranules>,
    pub chains: CentralChains,
}

impl CentralReport {
    /// Equality of everything except the axis length and centre position.
    pub fn same_interior_values(&self, other: &CentralReport) -> bool {
        self.margin == other.margin
            && self.state == other.state
            && self.controller_memory == other.controller_memory
            && self.observer_memory == other.observer_memory
            && self.granules == other.granules
            && self.chains == other.chains
    }
}

/// Central report for an arbitrary code, using intervals at least `margin` from the ends.
pub fn central_report_for_code(
    code: &GroupCode,
    margin: usize,
    name: Option<String>,
) -> Result<CentralReport> {
    let n = code.axis_len();
    if n < 2 * margin + 2 {
        return Err(Error::AxisTooShort {
            axis_len: n,
            required: 2 * margin + 2,
        });
    }
    let center = n / 2;
    let state = state_at(code, center)?;
    if !state.consistent() {
        return Err(Error::InternalInconsistency(format!(
            "state space computations disagree at time {center}"
        )));
    }
    let controller_memory = controllability_index(code, margin)?;
    let observer_memory = observability_index(code, margin)?;
    let l_max = match (controller_memory, observer_memory) {
        (Some(a), Some(b)) => a.max(b),
        _ => n - 1,
    };
    let table = GranuleTable::build(code, l_max, false)?;
    let mut granules = Vec::new();
    for j in 0..=table.max_level {
        let mut ctl = BTreeSet::new();
        let mut obs = BTreeSet::new();
        for e in table.entries.iter().filter(|e| e.j == j) {
            if e.k >= margin && e.k + j < n - margin {
                ctl.insert(e.controller.clone());
                obs.insert(e.observer.clone());
            }
        }
        if ctl.is_empty() {
            break;
        }
        granules.push(LevelGranules {
            level: j,
            controller: ctl.into_iter().collect(),
            observer: obs.into_iter().collect(),
        });
    }
    let report = output_chains(code, center, l_max)?;
    let q = |levels: &[crate::dynamics::ChainLevel]| -> Vec<InvariantFactors> {
        levels.iter().map(|l| l.quotient.clone()).collect()
    };
    let chains = CentralChains {
        first_output: q(&report.first_output),
        last_output: q(&report.last_output),
        dual_first_output: q(&report.dual_first_output[1..]),
        dual_last_output: q(&report.dual_last_output[1..]),
        input_group_order: report.input_group.order(),
        syndrome_group: report.syndrome_group,
    };
    Ok(CentralReport {
        name,
        axis_len: n,
        center,
        margin,
        state: state.two_sided,
        controller_memory,
        observer_memory,
        granules,
        chains,
    })
}

/// Central report of `window(spec, N)` with the spec's default margin.
pub fn central_report(spec: &ConvSpec, axis_len: usize) -> Result<CentralReport> {
    let margin = spec.default_margin();
    let need = spec.min_central_axis(margin);
    if axis_len < need {
        return Err(Error::AxisTooShort {
            axis_len,
            required: need,
        });
    }
    let w = window(spec, axis_len)?;
    central_report_for_code(&w.code, margin, spec.name.clone())
}

/// Whether every time shift of every generator and every phase of every
/// pattern is orthogonal to every shift of every dual tap sequence.
pub fn orthogonality_check(spec: &ConvSpec, dual_taps: &[Vec<Vec<u64>>]) -> Result<bool> {
    let m = spec.modulus;
    for h in dual_taps {
        if let Some(bad) = h.iter().find(|s| s.len() != spec.width) {
            return Err(Error::DimensionMismatch {
                expected: spec.width,
                found: bad.len(),
            });
        }
    }
    let at = |seq: &[Vec<u64>], i: isize| -> Option<Vec<u64>> {
        (i >= 0 && (i as usize) < seq.len()).then(|| seq[i as usize].clone())
    };
    for h in dual_taps {
        let h: Vec<Vec<u64>> = h
            .iter()
            .map(|s| s.iter().map(|&x| m.reduce(x)).collect())
            .collect();
        for g in &spec.generators {
            // h shifted by s relative to g; only overlapping shifts matter.
            for s in -(h.len() as isize)..=(g.len() as isize) {
                let mut acc = 0u64;
                for d in 0..g.len() as isize {
                    if let Some(hs) = at(&h, d - s) {
                        acc = m.add(acc, dot(m, &g[d as usize], &hs));
                    }
                }
                if acc != 0 {
                    return Ok(false);
                }
            }
        }
        for pat in &spec.patterns {
            let p = pat.len();
            for phase in 0..p {
                let mut acc = 0u64;
                for (d, hs) in h.iter().enumerate() {
                    acc = m.add(acc, dot(m, &pat[(d + phase) % p], hs));
                }
                if acc != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
