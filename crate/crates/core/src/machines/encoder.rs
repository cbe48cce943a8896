use rand::Rng;

use super::lift::Lifter;
use super::observer::StateObserver;
use super::trace::{MachineTrace, TraceStep};
use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::residue::{add_vec, Subgroup};
use crate::sequence::TimeSubset;

/// Observer-form encoder: at time `k` it looks at the last `L` emitted
/// symbols, picks the canonical allowed next symbol, and adds a free input
/// from the input group `F_k = (C_{:[k,N)})_{|{k}}`.
#[derive(Debug, Clone)]
pub struct ObserverEncoder {
    observer: StateObserver,
    inputs: Vec<Subgroup>,
    /// Lifts the window `[k−L, k)` into `C_{|[k−L,k]}`.
    steps: Vec<Lifter>,
}

impl ObserverEncoder {
    pub fn new(code: &GroupCode) -> Result<Self> {
        let observer = StateObserver::new(code)?;
        let n = code.axis_len();
        let layout = code.layout();
        let mut inputs = Vec::with_capacity(n);
        let mut steps = Vec::with_capacity(n);
        for k in 0..n {
            let at_k = TimeSubset::new(n, [k])?;
            let f = code
                .shorten(&TimeSubset::future(n, k))?
                .restriction(&at_k)?;
            inputs.push(f.carrier().clone());
            let span = StateObserver::window_times(n, observer.memory(), k).union(&at_k);
            let local = code.restriction(&span)?;
            let known: Vec<usize> = (0..local.layout().total_dim() - layout.width(k)).collect();
            steps.push(Lifter::new(local.carrier(), &known));
        }
        Ok(ObserverEncoder {
            observer,
            inputs,
            steps,
        })
    }

    pub fn memory(&self) -> usize {
        self.observer.memory()
    }

    pub fn observer(&self) -> &StateObserver {
        &self.observer
    }

    pub fn code(&self) -> &GroupCode {
        self.observer.code()
    }

    /// `F_k` for every time.
    pub fn input_groups(&self) -> &[Subgroup] {
        &self.inputs
    }

    /// `∏_k |F_k|`.
    pub fn input_count(&self) -> u128 {
        self.inputs.iter().map(Subgroup::order).product()
    }

    /// Uniformly random element of each `F_k`.
    pub fn random_inputs<R: Rng>(&self, rng: &mut R) -> Vec<Vec<u64>> {
        self.inputs.iter().map(|f| random_element(f, rng)).collect()
    }

    pub fn encode(&self, inputs: &[Vec<u64>]) -> Result<(Vec<u64>, MachineTrace)> {
        let code = self.code();
        let layout = code.layout();
        let n = code.axis_len();
        if inputs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: inputs.len(),
            });
        }
        let mut word = vec![0u64; layout.total_dim()];
        let mut trace = MachineTrace::new("encoder");
        for k in 0..n {
            let input = &inputs[k];
            if input.len() != layout.width(k) {
                return Err(Error::DimensionMismatch {
                    expected: layout.width(k),
                    found: input.len(),
                });
            }
            if !self.inputs[k].membership(input)? {
                return Err(Error::InputNotInInputGroup { time: k });
            }
            let win_times = StateObserver::window_times(n, self.memory(), k);
            let window = layout.restrict_vector(&win_times, &word)?;
            let state = self.observer.observe_window(&window, k)?;
            let local = self.steps[k]
                .lift(&window)?
                .ok_or(Error::WindowNotInRestriction { time: k })?;
            let candidate = &local[window.len()..];
            let base = self.inputs[k].coset_reduce(candidate)?;
            let symbol = add_vec(code.modulus(), &base, input);
            word[layout.block(k)].copy_from_slice(&symbol);
            trace.steps.push(TraceStep {
                time: k,
                input: Some(input.clone()),
                symbol,
                state: Some(state),
                syndrome: None,
            });
        }
        if !code.code_membership(&word)? {
            return Err(Error::InternalInconsistency(
                "encoder emitted a non-codeword".into(),
            ));
        }
        Ok((word, trace))
    }
}

pub(crate) fn random_element<R: Rng>(h: &Subgroup, rng: &mut R) -> Vec<u64> {
    let m = h.modulus();
    let mut v = vec![0u64; h.ambient_dim()];
    for ((_, d), row) in h.pivots().into_iter().zip(h.basis_rows()) {
        let q = rng.gen_range(0..m.get() / d);
        crate::residue::axpy(m, &mut v, q, row);
    }
    v
}
