use super::lift::Lifter;
use crate::code::GroupCode;
use crate::dynamics::observer_memory;
use crate::error::{Error, Result};
use crate::residue::Subgroup;
use crate::sequence::TimeSubset;

/// Sliding-window state observer: maps the last `L` symbols before a cut to
/// the canonical label of the codeword's coset of `C_{:[0,k)} + C_{:[k,N)}`.
#[derive(Debug, Clone)]
pub struct StateObserver {
    code: GroupCode,
    memory: usize,
    reducers: Vec<Subgroup>,
    lifters: Vec<Lifter>,
}

impl StateObserver {
    pub fn new(code: &GroupCode) -> Result<Self> {
        let n = code.axis_len();
        let memory = observer_memory(code)?;
        let mut reducers = Vec::with_capacity(n + 1);
        let mut lifters = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let split = code
                .shorten(&TimeSubset::past(n, k))?
                .code_sum(&code.shorten(&TimeSubset::future(n, k))?)?;
            reducers.push(split.carrier().clone());
            let win = code.layout().coords(&Self::window_times(n, memory, k))?;
            lifters.push(Lifter::new(code.carrier(), &win));
        }
        Ok(StateObserver {
            code: code.clone(),
            memory,
            reducers,
            lifters,
        })
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn code(&self) -> &GroupCode {
        &self.code
    }

    /// The times `[max(0, k−L), k)` the observer reads before cut `k`.
    pub fn window_times(axis_len: usize, memory: usize, k: usize) -> TimeSubset {
        TimeSubset::range(axis_len, k.saturating_sub(memory), k)
    }

    fn check_cut(&self, k: usize) -> Result<()> {
        if k > self.code.axis_len() {
            return Err(Error::TimeOutOfRange {
                time: k,
                axis_len: self.code.axis_len(),
            });
        }
        Ok(())
    }

    /// Label at cut `k` from a full codeword.
    pub fn observe_full(&self, w: &[u64], k: usize) -> Result<Vec<u64>> {
        self.check_cut(k)?;
        if !self.code.code_membership(w)? {
            return Err(Error::NotACodeword);
        }
        self.reducers[k].coset_reduce(w)
    }

    /// Label at cut `k` from only the symbols on `[max(0, k−L), k)`, flattened.
    pub fn observe_window(&self, window: &[u64], k: usize) -> Result<Vec<u64>> {
        self.check_cut(k)?;
        let expected = self
            .code
            .layout()
            .coords(&Self::window_times(self.code.axis_len(), self.memory, k))?
            .len();
        if window.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: window.len(),
            });
        }
        let c = self.lifters[k]
            .lift(window)?
            .ok_or(Error::WindowNotInRestriction { time: k })?;
        self.reducers[k].coset_reduce(&c)
    }

    /// Label from a full word, reading only its window.
    pub fn observe_state(&self, w: &[u64], k: usize) -> Result<Vec<u64>> {
        let n = self.code.axis_len();
        let win = self
            .code
            .layout()
            .restrict_vector(&Self::window_times(n, self.memory, k), w)?;
        self.observe_window(&win, k)
    }
}
