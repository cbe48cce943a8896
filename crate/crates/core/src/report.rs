//! Full analysis report of a code: state space at a cut, indices, the granule
//! table, output chains and per-time input/syndrome groups.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::code::GroupCode;
use crate::dynamics::{
    controllability_index, controller_memory, observability_index, observer_memory, output_chains,
    state_at, ChainReport, GranuleTable, StateSpaceReport,
};
use crate::error::{Error, Result};
use crate::residue::{InvariantFactors, Subgroup};

pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GranuleRow {
    pub k: usize,
    pub j: usize,
    pub controller: InvariantFactors,
    pub observer: InvariantFactors,
    /// The interval `[k, k+j]` comes within `margin` of an axis end.
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeRow {
    pub k: usize,
    pub input_order: u128,
    pub syndrome_group: InvariantFactors,
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format_version: u32,
    pub name: Option<String>,
    pub modulus: u64,
    pub widths: Vec<usize>,
    pub order: u128,
    pub invariants: InvariantFactors,
    pub dual_order: u128,
    pub margin: usize,
    pub state: StateSpaceReport,
    pub controllability_index: Option<usize>,
    pub observability_index: Option<usize>,
    pub controller_memory: usize,
    pub observer_memory: usize,
    pub granules: Vec<GranuleRow>,
    pub chains: ChainReport,
    pub times: Vec<TimeRow>,
}

/// Analyses `c` with the state cut `J = [0, cut)` and the given interior margin.
pub fn analyze(
    c: &GroupCode,
    cut: usize,
    margin: usize,
    name: Option<String>,
) -> Result<AnalysisReport> {
    let n = c.axis_len();
    if n < 2 {
        return Err(Error::AxisTooShort {
            axis_len: n,
            required: 2,
        });
    }
    let state = state_at(c, cut)?;
    if !state.consistent() {
        return Err(Error::InternalInconsistency(format!(
            "state space computations disagree at cut {cut}"
        )));
    }
    let ci = controllability_index(c, margin)?;
    let oi = observability_index(c, margin)?;
    let l_max = match (ci, oi) {
        (Some(a), Some(b)) => a.max(b),
        _ => n - 1,
    };
    let boundary = |k: usize, j: usize| k < margin || k + j + margin >= n;
    let table = GranuleTable::build(c, l_max, false)?;
    let granules = table
        .entries
        .into_iter()
        .map(|e| GranuleRow {
            boundary: boundary(e.k, e.j),
            k: e.k,
            j: e.j,
            controller: e.controller,
            observer: e.observer,
        })
        .collect();
    let mut times = Vec::with_capacity(n);
    for k in 0..n {
        let ch = output_chains(c, k, 0)?;
        times.push(TimeRow {
            k,
            input_order: ch.input_group.order(),
            syndrome_group: ch.syndrome_group,
            boundary: boundary(k, 0),
        });
    }
    let full = Subgroup::trivial(c.modulus(), c.layout().total_dim());
    Ok(AnalysisReport {
        format_version: REPORT_FORMAT_VERSION,
        name,
        modulus: c.modulus().get(),
        widths: c.layout().widths().to_vec(),
        order: c.code_order(),
        invariants: c.carrier().quotient_invariants(&full)?,
        dual_order: c.dual().code_order(),
        margin,
        state,
        controllability_index: ci,
        observability_index: oi,
        controller_memory: controller_memory(c)?,
        observer_memory: observer_memory(c)?,
        granules,
        chains: output_chains(c, cut, l_max)?,
        times,
    })
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let n = self.widths.len();
        if let Some(name) = &self.name {
            let _ = writeln!(s, "code: {name}");
        }
        let _ = writeln!(
            s,
            "modulus: {}  axis: {n}  widths: {:?}",
            self.modulus, self.widths
        );
        let _ = writeln!(s, "code: {}", self.invariants);
        let _ = writeln!(s, "dual order: {}", self.dual_order);
        let _ = writeln!(s, "cut: {}", self.state.cut);
        let _ = writeln!(s, "state: {}", self.state.two_sided);
        let _ = writeln!(s, "  one-sided past:   {}", self.state.one_sided_past);
        let _ = writeln!(s, "  one-sided future: {}", self.state.one_sided_future);
        let _ = writeln!(s, "  reciprocal:       {}", self.state.reciprocal);
        let _ = writeln!(s, "margin: {}", self.margin);
        let _ = writeln!(
            s,
            "controllability index: {}",
            opt(self.controllability_index)
        );
        let _ = writeln!(s, "observability index: {}", opt(self.observability_index));
        let _ = writeln!(
            s,
            "controller memory (whole axis): {}",
            self.controller_memory
        );
        let _ = writeln!(s, "observer memory (whole axis): {}", self.observer_memory);
        let _ = writeln!(s, "granules ([k, k+j]; * = boundary):");
        for g in &self.granules {
            let _ = writeln!(
                s,
                "  {}[{}, {}]  controller {:?}  observer {:?}",
                if g.boundary { "*" } else { " " },
                g.k,
                g.k + g.j,
                g.controller.factors(),
                g.observer.factors()
            );
        }
        let c = &self.chains;
        let _ = writeln!(s, "output chains at k = {}:", c.k);
        for j in 0..=c.max_level {
            let _ = writeln!(
                s,
                "  level {j}: first {:?}  last {:?}  dual-first {:?}  dual-last {:?}",
                c.first_output[j].quotient.factors(),
                c.last_output[j].quotient.factors(),
                c.dual_first_output[j + 1].quotient.factors(),
                c.dual_last_output[j + 1].quotient.factors(),
            );
        }
        let _ = writeln!(s, "  input group order: {}", c.input_group.order());
        let _ = writeln!(s, "  syndrome group: {}", c.syndrome_group);
        let _ = writeln!(s, "per time (* = boundary):");
        for t in &self.times {
            let _ = writeln!(
                s,
                "  {}k={}  input order {}  syndrome {:?}",
                if t.boundary { "*" } else { " " },
                t.k,
                t.input_order,
                t.syndrome_group.factors()
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn three_tap_report_and_json_round_trip() {
        let c = fixtures::three_tap_z4_code();
        let r = analyze(&c, 6, 3, Some("three_tap_z4".into())).unwrap();
        assert_eq!(r.state.two_sided.factors(), &[2, 4]);
        assert!(r.render_text().contains("state: Z2 x Z4 (order 8)"));
        let back = AnalysisReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let interior: u128 = r.times.iter().map(|t| t.input_order).product();
        assert_eq!(interior, r.order);
    }
}
