//! Finite time axes, per-time symbol blocks and time subsets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::Modulus;

/// Time axis `0..N` where time `k` carries a block of `widths[k]` residues mod `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LayoutRepr", into = "LayoutRepr")]
pub struct SymbolLayout {
    modulus: Modulus,
    widths: Vec<usize>,
    offsets: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct LayoutRepr {
    modulus: Modulus,
    widths: Vec<usize>,
}

impl TryFrom<LayoutRepr> for SymbolLayout {
    type Error = Error;

    fn try_from(r: LayoutRepr) -> Result<Self> {
        SymbolLayout::new(r.modulus, r.widths)
    }
}

impl From<SymbolLayout> for LayoutRepr {
    fn from(l: SymbolLayout) -> Self {
        LayoutRepr {
            modulus: l.modulus,
            widths: l.widths,
        }
    }
}

impl SymbolLayout {
    pub fn new(modulus: Modulus, widths: Vec<usize>) -> Result<Self> {
        if widths.is_empty() {
            return Err(Error::AxisTooShort {
                axis_len: 0,
                required: 1,
            });
        }
        if let Some(&w) = widths.iter().find(|&&w| w == 0) {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: w,
            });
        }
        let mut offsets = Vec::with_capacity(widths.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &w in &widths {
            acc += w;
            offsets.push(acc);
        }
        Ok(SymbolLayout {
            modulus,
            widths,
            offsets,
        })
    }

    pub fn uniform(modulus: Modulus, axis_len: usize, width: usize) -> Result<Self> {
        Self::new(modulus, vec![width; axis_len])
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn axis_len(&self) -> usize {
        self.widths.len()
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn width(&self, k: usize) -> usize {
        self.widths[k]
    }

    pub fn total_dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Coordinate range of the block at time `k`.
    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn full(&self) -> TimeSubset {
        TimeSubset::full(self.axis_len())
    }

    fn check(&self, j: &TimeSubset) -> Result<()> {
        if j.axis_len != self.axis_len() {
            return Err(Error::LayoutMismatch(format!(
                "time subset on axis {} used with layout on axis {}",
                j.axis_len,
                self.axis_len()
            )));
        }
        Ok(())
    }

    /// Sorted coordinates of the blocks at the times in `j`.
    pub fn coords(&self, j: &TimeSubset) -> Result<Vec<usize>> {
        self.check(j)?;
        Ok(j.iter().flat_map(|k| self.block(k)).collect())
    }

    /// Coordinates of the blocks at the listed times, in the listed order.
    pub fn coords_ordered(&self, times: &[usize]) -> Result<Vec<usize>> {
        for &k in times {
            if k >= self.axis_len() {
                return Err(Error::TimeOutOfRange {
                    time: k,
                    axis_len: self.axis_len(),
                });
            }
        }
        Ok(times.iter().flat_map(|&k| self.block(k)).collect())
    }

    /// Layout of the times in `j`, renumbered `0..|J|`.
    pub fn restrict(&self, j: &TimeSubset) -> Result<SymbolLayout> {
        self.check(j)?;
        if j.is_empty() {
            return Err(Error::EmptySubset);
        }
        SymbolLayout::new(self.modulus, j.iter().map(|k| self.widths[k]).collect())
    }

    /// Places a vector on the blocks of `j` and zeros elsewhere.
    pub fn embed_zero(&self, j: &TimeSubset, v: &[u64]) -> Result<Vec<u64>> {
        let cs = self.coords(j)?;
        if cs.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: cs.len(),
                found: v.len(),
            });
        }
        let mut out = vec![0; self.total_dim()];
        for (&c, &x) in cs.iter().zip(v) {
            out[c] = self.modulus.reduce(x);
        }
        Ok(out)
    }

    /// Keeps only the coordinates of the blocks in `j`.
    pub fn restrict_vector(&self, j: &TimeSubset, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.total_dim(),
                found: v.len(),
            });
        }
        Ok(self.coords(j)?.into_iter().map(|c| v[c]).collect())
    }

    /// Merges consecutive times: new time `i` covers `sizes[i]` old times.
    pub fn coarsen(&self, sizes: &[usize]) -> Result<SymbolLayout> {
        if sizes.iter().sum::<usize>() != self.axis_len() || sizes.contains(&0) {
            return Err(Error::LayoutMismatch(format!(
                "block sizes {sizes:?} do not partition an axis of length {}",
                self.axis_len()
            )));
        }
        let mut widths = Vec::with_capacity(sizes.len());
        let mut t = 0;
        for &s in sizes {
            widths.push(self.widths[t..t + s].iter().sum());
            t += s;
        }
        SymbolLayout::new(self.modulus, widths)
    }

    /// Splits a flat vector into per-time symbols.
    pub fn split(&self, v: &[u64]) -> Vec<Vec<u64>> {
        (0..self.axis_len())
            .map(|k| v[self.block(k)].to_vec())
            .collect()
    }
}

/// An arbitrary subset of the times `0..axis_len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TimeSubset {
    axis_len: usize,
    members: Vec<usize>,
}

impl TimeSubset {
    pub fn new(axis_len: usize, times: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = times.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&k| k >= axis_len) {
            return Err(Error::TimeOutOfRange {
                time: bad,
                axis_len,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(TimeSubset { axis_len, members })
    }

    pub fn empty(axis_len: usize) -> Self {
        TimeSubset {
            axis_len,
            members: Vec::new(),
        }
    }

    pub fn full(axis_len: usize) -> Self {
        TimeSubset {
            axis_len,
            members: (0..axis_len).collect(),
        }
    }

    /// `[a, b)` clipped to the axis.
    pub fn range(axis_len: usize, a: usize, b: usize) -> Self {
        let b = b.min(axis_len);
        TimeSubset {
            axis_len,
            members: (a.min(b)..b).collect(),
        }
    }

    /// The past `[0, k)`.
    pub fn past(axis_len: usize, k: usize) -> Self {
        Self::range(axis_len, 0, k)
    }

    /// The future `[k, N)`.
    pub fn future(axis_len: usize, k: usize) -> Self {
        Self::range(axis_len, k, axis_len)
    }

    pub fn axis_len(&self) -> usize {
        self.axis_len
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.axis_len
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    pub fn complement(&self) -> TimeSubset {
        TimeSubset {
            axis_len: self.axis_len,
            members: (0..self.axis_len).filter(|&k| !self.contains(k)).collect(),
        }
    }

    pub fn union(&self, other: &TimeSubset) -> TimeSubset {
        let mut members: Vec<usize> = self.iter().chain(other.iter()).collect();
        members.sort_unstable();
        members.dedup();
        TimeSubset {
            axis_len: self.axis_len,
            members,
        }
    }

    pub fn minus(&self, other: &TimeSubset) -> TimeSubset {
        TimeSubset {
            axis_len: self.axis_len,
            members: self.iter().filter(|&k| !other.contains(k)).collect(),
        }
    }
}

impl fmt::Display for TimeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

/// A closed interval `[lo, hi]`, or with `wrap` the end-around set
/// `{lo, ..., N-1} ∪ {0, ..., hi}` (requires `lo > hi`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
    pub wrap: bool,
}

impl Interval {
    pub fn closed(lo: usize, hi: usize) -> Self {
        Interval {
            lo,
            hi,
            wrap: false,
        }
    }

    pub fn end_around(lo: usize, hi: usize) -> Self {
        Interval { lo, hi, wrap: true }
    }

    /// `[k, k + j]`.
    pub fn at(k: usize, j: usize) -> Self {
        Interval::closed(k, k + j)
    }

    /// Member times in traversal order (for end-around sets, `lo..N` then `0..=hi`).
    pub fn ordered_times(&self, axis_len: usize) -> Result<Vec<usize>> {
        let bad = |why: &str| Err(Error::MalformedInterval(format!("{self}: {why}")));
        if self.wrap {
            if self.lo <= self.hi {
                return bad("an end-around interval needs lo > hi");
            }
            if self.lo >= axis_len {
                return bad("start lies outside the axis");
            }
            Ok((self.lo..axis_len).chain(0..=self.hi).collect())
        } else {
            if self.lo > self.hi {
                return bad("lo > hi without wraparound");
            }
            if self.hi >= axis_len {
                return bad("end lies outside the axis");
            }
            Ok((self.lo..=self.hi).collect())
        }
    }

    pub fn to_subset(&self, axis_len: usize) -> Result<TimeSubset> {
        TimeSubset::new(axis_len, self.ordered_times(axis_len)?)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.wrap {
            write!(f, "[{}, {}] (end-around)", self.lo, self.hi)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}
