//! Brute-force ground truth by enumeration.
//!
//! Nothing here uses Howell forms or Smith forms: groups are explicit element
//! sets, closed under addition by breadth-first search, and quotient
//! structure is read off from element counts.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::residue::{add_vec, dot, factorize, InvariantFactors, Modulus};
use crate::sequence::{Interval, TimeSubset};

pub type ElementSet = BTreeSet<Vec<u64>>;

/// Explicit limits; exceeding either is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_elements: u128,
    pub max_ambient: u128,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_elements: 1 << 20,
            max_ambient: 1 << 24,
        }
    }
}

/// Additive closure of a generator set, by breadth-first search from zero.
pub fn closure(m: Modulus, dim: usize, gens: &[Vec<u64>], cap: u128) -> Result<ElementSet> {
    let zero = vec![0u64; dim];
    let gens: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| m.reduce(x)).collect())
        .collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = add_vec(m, &v, g);
            if !seen.contains(&w) {
                if seen.len() as u128 >= cap {
                    return Err(Error::OrderExceedsCap {
                        order: seen.len() as u128 + 1,
                        cap,
                    });
                }
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every vector of `(ℤ_M)^dim`.
pub fn ambient(m: Modulus, dim: usize, cap: u128) -> Result<Vec<Vec<u64>>> {
    let total = (m.get() as u128)
        .checked_pow(dim as u32)
        .unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::OrderExceedsCap { order: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut v = vec![0u64; dim];
    loop {
        out.push(v.clone());
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(out);
            }
            v[i] += 1;
            if v[i] < m.get() {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// A code as an explicit element set together with its layout.
#[derive(Debug, Clone)]
pub struct Oracle {
    code: GroupCode,
    elements: ElementSet,
    caps: OracleCaps,
}

impl Oracle {
    /// Elements are the closure of `generators`, which need not be a canonical basis.
    pub fn from_generators(
        code: &GroupCode,
        generators: &[Vec<u64>],
        caps: OracleCaps,
    ) -> Result<Self> {
        let dim = code.layout().total_dim();
        let elements = closure(code.modulus(), dim, generators, caps.max_elements)?;
        Ok(Oracle {
            code: code.clone(),
            elements,
            caps,
        })
    }

    pub fn new(code: &GroupCode, caps: OracleCaps) -> Result<Self> {
        let gens: Vec<Vec<u64>> = code.carrier().basis_rows().cloned().collect();
        Self::from_generators(code, &gens, caps)
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    fn m(&self) -> Modulus {
        self.code.modulus()
    }

    fn dim(&self) -> usize {
        self.code.layout().total_dim()
    }

    fn all_words(&self) -> Result<Vec<Vec<u64>>> {
        ambient(self.m(), self.dim(), self.caps.max_ambient)
    }

    fn coords(&self, j: &TimeSubset) -> Result<Vec<usize>> {
        self.code.layout().coords(j)
    }

    pub fn order(&self) -> u128 {
        self.elements.len() as u128
    }

    /// `{x : <c, x> = 0 for every codeword c}`.
    pub fn dual(&self) -> Result<ElementSet> {
        let m = self.m();
        Ok(self
            .all_words()?
            .into_iter()
            .filter(|x| self.elements.iter().all(|c| dot(m, c, x) == 0))
            .collect())
    }

    /// Codewords vanishing outside `k`.
    pub fn shorten(&self, k: &TimeSubset) -> Result<ElementSet> {
        let outside = self.coords(&k.complement())?;
        Ok(self
            .elements
            .iter()
            .filter(|c| outside.iter().all(|&i| c[i] == 0))
            .cloned()
            .collect())
    }

    /// Restrictions of codewords to the coordinates of `j`.
    pub fn restrict(&self, j: &TimeSubset) -> Result<ElementSet> {
        Ok(restrict_set(&self.elements, &self.coords(j)?))
    }

    /// `|C / (C_{:[0,k)} + C_{:[k,N)})|`.
    pub fn state_count(&self, k: usize) -> Result<u128> {
        let inv = self.state_invariants(k)?;
        Ok(inv.order())
    }

    pub fn state_invariants(&self, k: usize) -> Result<InvariantFactors> {
        let n = self.code.axis_len();
        if k == 0 || k >= n {
            return Err(Error::TimeOutOfRange {
                time: k,
                axis_len: n,
            });
        }
        let den = set_sum(
            self.m(),
            &self.shorten(&TimeSubset::past(n, k))?,
            &self.shorten(&TimeSubset::future(n, k))?,
        );
        quotient_invariants(self.m(), &self.elements, &den)
    }

    /// `C_{:[k,k+j]} / (C_{:[k,k+j)} + C_{:(k,k+j]})`.
    pub fn controller_granule(&self, k: usize, j: usize) -> Result<InvariantFactors> {
        let n = self.code.axis_len();
        let times = Interval::at(k, j).ordered_times(n)?;
        let sub = |t: &[usize]| -> Result<ElementSet> {
            self.shorten(&TimeSubset::new(n, t.iter().copied())?)
        };
        let num = sub(&times)?;
        let den = set_sum(
            self.m(),
            &sub(&times[1..])?,
            &sub(&times[..times.len() - 1])?,
        );
        quotient_invariants(self.m(), &num, &den)
    }

    /// Words whose every length-`(j+1)` window is a window of some codeword;
    /// `None` means `j = −1`, the whole space.
    pub fn observable_supercode(&self, j: Option<usize>) -> Result<ElementSet> {
        let words = self.all_words()?;
        let Some(j) = j else {
            return Ok(words.into_iter().collect());
        };
        let n = self.code.axis_len();
        if j + 1 >= n {
            return Ok(self.elements.clone());
        }
        let mut windows = Vec::new();
        for k in 0..n - j {
            let cs = self.coords(&Interval::at(k, j).to_subset(n)?)?;
            let allowed = restrict_set(&self.elements, &cs);
            windows.push((cs, allowed));
        }
        Ok(words
            .into_iter()
            .filter(|w| {
                windows.iter().all(|(cs, allowed)| {
                    let r: Vec<u64> = cs.iter().map(|&c| w[c]).collect();
                    allowed.contains(&r)
                })
            })
            .collect())
    }

    /// `(C^{j−1})_{|[k,k+j]} / (C^j)_{|[k,k+j]}`.
    pub fn observer_granule(&self, k: usize, j: usize) -> Result<InvariantFactors> {
        let n = self.code.axis_len();
        let cs = self.coords(&Interval::at(k, j).to_subset(n)?)?;
        let above = self.observable_supercode(j.checked_sub(1))?;
        let here = self.observable_supercode(Some(j))?;
        quotient_invariants(
            self.m(),
            &restrict_set(&above, &cs),
            &restrict_set(&here, &cs),
        )
    }

    /// `|(C_{:[k,N)})_{|{k}}|`.
    pub fn input_group_order(&self, k: usize) -> Result<u128> {
        let n = self.code.axis_len();
        let f = self.shorten(&TimeSubset::future(n, k))?;
        let cs = self.coords(&TimeSubset::new(n, [k])?)?;
        Ok(restrict_set(&f, &cs).len() as u128)
    }

    /// Words accepted by `accept`, over the whole ambient space.
    pub fn kernel_of(&self, accept: impl Fn(&[u64]) -> Result<bool>) -> Result<ElementSet> {
        let mut out = ElementSet::new();
        for w in self.all_words()? {
            if accept(&w)? {
                out.insert(w);
            }
        }
        Ok(out)
    }
}

pub fn restrict_set(s: &ElementSet, cols: &[usize]) -> ElementSet {
    s.iter()
        .map(|v| cols.iter().map(|&c| v[c]).collect())
        .collect()
}

pub fn set_sum(m: Modulus, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::new();
    for x in a {
        for y in b {
            out.insert(add_vec(m, x, y));
        }
    }
    out
}

/// Invariant factors of `A / B` from counts: for each prime power `e`,
/// `|{x ∈ A/B : e·x = 0}| = |{a ∈ A : e·a ∈ B}| / |B|`.
pub fn quotient_invariants(m: Modulus, a: &ElementSet, b: &ElementSet) -> Result<InvariantFactors> {
    if !b.is_subset(a) {
        return Err(Error::NotSubgroup);
    }
    let index = (a.len() / b.len()) as u64;
    if index == 1 {
        return Ok(InvariantFactors::trivial());
    }
    let killed = |e: u64| -> u64 {
        let count = a
            .iter()
            .filter(|x| {
                let ex: Vec<u64> = x.iter().map(|&v| m.mul(e % m.get(), v)).collect();
                b.contains(&ex)
            })
            .count();
        (count / b.len()) as u64
    };
    let mut orders: Vec<u64> = Vec::new();
    for (p, _) in factorize(index) {
        // f(t) = log_p |{x : p^t x = 0}| = Σ_i min(t, e_i).
        let mut exps: BTreeMap<u32, usize> = BTreeMap::new();
        let mut prev = 0u32;
        let mut prev_diff = usize::MAX;
        let mut t = 1u32;
        loop {
            let n = killed(p.pow(t));
            let f = n.ilog(p);
            let at_least_t = (f - prev) as usize;
            if prev_diff != usize::MAX && prev_diff > at_least_t {
                *exps.entry(t - 1).or_default() += prev_diff - at_least_t;
            }
            if at_least_t == 0 {
                break;
            }
            prev = f;
            prev_diff = at_least_t;
            t += 1;
        }
        for (e, count) in exps {
            for _ in 0..count {
                orders.push(p.pow(e));
            }
        }
    }
    Ok(InvariantFactors::from_cyclic_orders(&orders))
}
