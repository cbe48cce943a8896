//! Executable machines: state observer, observer-form encoder and syndrome-former.

mod encoder;
mod lift;
mod observer;
mod syndrome;
mod trace;

use rand::Rng;

pub use encoder::ObserverEncoder;
pub use observer::StateObserver;
pub use syndrome::SyndromeFormer;
pub use trace::{MachineTrace, TraceStep, TRACE_FORMAT_VERSION};

use crate::code::GroupCode;
use crate::error::Result;
use crate::residue::add_vec;

/// Outcome of [`roundtrip_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripSummary {
    pub encoded: usize,
    pub perturbed: usize,
    pub syndromes_zero_on_codewords: bool,
    pub states_agree: bool,
    pub perturbed_detected: bool,
    pub input_count_matches_order: bool,
}

impl RoundtripSummary {
    pub fn passed(&self) -> bool {
        self.syndromes_zero_on_codewords
            && self.states_agree
            && self.perturbed_detected
            && self.input_count_matches_order
    }
}

/// Encodes random inputs and checks the syndrome-former and observer against
/// the encoder, then checks that perturbed non-codewords are flagged.
pub fn roundtrip_check<R: Rng>(
    code: &GroupCode,
    trials: usize,
    rng: &mut R,
) -> Result<RoundtripSummary> {
    let enc = ObserverEncoder::new(code)?;
    let sf = SyndromeFormer::new(code)?;
    let mut summary = RoundtripSummary {
        encoded: 0,
        perturbed: 0,
        syndromes_zero_on_codewords: true,
        states_agree: true,
        perturbed_detected: true,
        input_count_matches_order: enc.input_count() == code.code_order(),
    };
    let full_space = code.layout().total_dim();
    let m = code.modulus();
    for _ in 0..trials {
        let inputs = enc.random_inputs(rng);
        let (word, trace) = enc.encode(&inputs)?;
        summary.encoded += 1;
        if !sf.is_member(&word)? {
            summary.syndromes_zero_on_codewords = false;
        }
        for (k, step) in trace.steps.iter().enumerate() {
            let full = enc.observer().observe_full(&word, k)?;
            if step.state.as_ref() != Some(&full) {
                summary.states_agree = false;
            }
        }
        // Perturb by an error outside the code, if the code is not everything.
        if code
            .carrier()
            .ambient_order()
            .is_none_or(|a| code.code_order() < a)
        {
            let e = loop {
                let e: Vec<u64> = (0..full_space).map(|_| rng.gen_range(0..m.get())).collect();
                if !code.code_membership(&e)? {
                    break e;
                }
            };
            let bad = add_vec(m, &word, &e);
            summary.perturbed += 1;
            if sf.is_member(&bad)? {
                summary.perturbed_detected = false;
            }
        }
    }
    Ok(summary)
}
