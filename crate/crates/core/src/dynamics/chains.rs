use serde::{Deserialize, Serialize};

use super::granule::GranuleTable;
use super::supercode::controllable_subcode;
use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::residue::{InvariantFactors, Subgroup};
use crate::sequence::TimeSubset;

/// One level of an output chain: a subgroup of the symbol group `G_k`, and its
/// quotient against the neighbouring level (ascending chains: `X_j / X_{j−1}`;
/// descending chains: `X_{j−1} / X_j`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLevel {
    pub level: isize,
    pub group: Subgroup,
    pub order: u128,
    pub quotient: InvariantFactors,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub k: usize,
    pub max_level: usize,
    /// `F_{j,k} = ((C_j)_{:[k,N)})_{|{k}}`, ascending.
    pub first_output: Vec<ChainLevel>,
    /// `L_{j,k} = ((C_j)_{:[0,k]})_{|{k}}`, ascending.
    pub last_output: Vec<ChainLevel>,
    /// `F^{j,k} = (C_{:I−[k−j,k)})_{|{k}}`, descending from `F^{−1,k} = G_k`.
    pub dual_first_output: Vec<ChainLevel>,
    /// `L^{j,k} = (C_{:I−(k,k+j]})_{|{k}}`, descending from `L^{−1,k} = G_k`.
    pub dual_last_output: Vec<ChainLevel>,
    /// `F_k = (C_{:[k,N)})_{|{k}}`.
    pub input_group: Subgroup,
    /// `S_k = G_k / F_k`.
    pub syndrome_group: InvariantFactors,
}

fn at_time(c: &GroupCode, code: &GroupCode, k: usize) -> Result<Subgroup> {
    let cols = c.layout().coords(&TimeSubset::new(c.axis_len(), [k])?)?;
    Ok(code.carrier().select_columns(&cols))
}

fn ascending(groups: Vec<Subgroup>, first_level: isize) -> Result<Vec<ChainLevel>> {
    let mut out = Vec::with_capacity(groups.len());
    let mut prev: Option<Subgroup> = None;
    for (i, g) in groups.into_iter().enumerate() {
        let quotient = match &prev {
            Some(p) => g.quotient_invariants(p)?,
            None => g.quotient_invariants(&Subgroup::trivial(g.modulus(), g.ambient_dim()))?,
        };
        prev = Some(g.clone());
        out.push(ChainLevel {
            level: first_level + i as isize,
            order: g.order(),
            group: g,
            quotient,
        });
    }
    Ok(out)
}

fn descending(groups: Vec<Subgroup>, first_level: isize) -> Result<Vec<ChainLevel>> {
    let mut out = Vec::with_capacity(groups.len());
    let mut prev: Option<Subgroup> = None;
    for (i, g) in groups.into_iter().enumerate() {
        let quotient = match &prev {
            Some(p) => p.quotient_invariants(&g)?,
            None => InvariantFactors::trivial(),
        };
        prev = Some(g.clone());
        out.push(ChainLevel {
            level: first_level + i as isize,
            order: g.order(),
            group: g,
            quotient,
        });
    }
    Ok(out)
}

/// The four output chains at time `k`, levels `0..=max_level`.
pub fn output_chains(c: &GroupCode, k: usize, max_level: usize) -> Result<ChainReport> {
    let n = c.axis_len();
    if k >= n {
        return Err(Error::TimeOutOfRange {
            time: k,
            axis_len: n,
        });
    }
    let future = TimeSubset::future(n, k);
    let through_k = TimeSubset::past(n, k + 1);
    let mut first = Vec::new();
    let mut last = Vec::new();
    for j in 0..=max_level {
        let cj = controllable_subcode(c, j)?;
        first.push(at_time(c, &cj.shorten(&future)?, k)?);
        last.push(at_time(c, &cj.shorten(&through_k)?, k)?);
    }
    let g_k = Subgroup::full(c.modulus(), c.layout().width(k));
    let mut dual_first = vec![g_k.clone()];
    let mut dual_last = vec![g_k.clone()];
    for j in 0..=max_level {
        let before = TimeSubset::range(n, k.saturating_sub(j), k);
        dual_first.push(at_time(c, &c.shorten(&before.complement())?, k)?);
        let after = TimeSubset::range(n, k + 1, k + 1 + j);
        dual_last.push(at_time(c, &c.shorten(&after.complement())?, k)?);
    }
    let input_group = at_time(c, &c.shorten(&future)?, k)?;
    let syndrome_group = g_k.quotient_invariants(&input_group)?;
    Ok(ChainReport {
        k,
        max_level,
        first_output: ascending(first, 0)?,
        last_output: ascending(last, 0)?,
        dual_first_output: descending(dual_first, -1)?,
        dual_last_output: descending(dual_last, -1)?,
        input_group,
        syndrome_group,
    })
}

impl ChainReport {
    /// Checks every chain quotient against the matching granule in `table`:
    /// `F_j/F_{j−1} ≅ Γ_{[k,k+j]}`, `L_j/L_{j−1} ≅ Γ_{[k−j,k]}`,
    /// `L^{j−1}/L^j ≅ Φ_{[k,k+j]}`, `F^{j−1}/F^j ≅ Φ_{[k−j,k]}`.
    pub fn matches_granules(&self, table: &GranuleTable) -> bool {
        let k = self.k as isize;
        let upto = self.max_level.min(table.max_level);
        (0..=upto).all(|j| {
            let ji = j as isize;
            let idx = j;
            self.first_output[idx].quotient == table.controller(k, j)
                && self.last_output[idx].quotient == table.controller(k - ji, j)
                && self.dual_last_output[idx + 1].quotient == table.observer(k, j)
                && self.dual_first_output[idx + 1].quotient == table.observer(k - ji, j)
        })
    }
}
