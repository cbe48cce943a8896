//! Interval controllability / observability and the resulting indices.
//!
//! cargo run --example controllability

use abelcodes::dynamics::{
    controllability_index, controllable_on, observability_index, observable_on,
};
use abelcodes::fixtures;

fn main() -> abelcodes::Result<()> {
    for (name, code, margin) in [
        ("three_tap_z4", fixtures::three_tap_z4_code(), 3),
        ("autonomous_z4", fixtures::autonomous_z4_code(), 2),
        ("repetition_z4", fixtures::repetition_z4_code(), 2),
    ] {
        let n = code.axis_len();
        let c = n / 2 - 1;
        println!(
            "{name}: [{c}, {}) controllable={} observable={}; indices {:?}/{:?}, dual {:?}/{:?}",
            c + 2,
            controllable_on(&code, c, c + 2)?,
            observable_on(&code, c, c + 2)?,
            controllability_index(&code, margin)?,
            observability_index(&code, margin)?,
            controllability_index(&code.dual(), margin)?,
            observability_index(&code.dual(), margin)?,
        );
    }
    Ok(())
}
