//! Windowed convolutional codes: interior values, their stability under a
//! longer window, and tap orthogonality of a dual.
//!
//! cargo run --example convolutional_report

use abelcodes::convolutional::{central_report, orthogonality_check};
use abelcodes::fixtures;

fn main() -> abelcodes::Result<()> {
    let spec = fixtures::three_tap_z4();
    let a = central_report(&spec, 12)?;
    let b = central_report(&spec, 14)?;
    println!(
        "state {}  memories {:?}/{:?}",
        a.state, a.controller_memory, a.observer_memory
    );
    for g in &a.granules {
        let show = |v: &[abelcodes::InvariantFactors]| -> Vec<Vec<u64>> {
            v.iter().map(|f| f.factors().to_vec()).collect()
        };
        println!(
            "level {}: controller {:?}  observer {:?}",
            g.level,
            show(&g.controller),
            show(&g.observer)
        );
    }
    println!(
        "same interior values at N=12 and N=14: {}",
        a.same_interior_values(&b)
    );
    println!(
        "dual taps orthogonal: {}",
        orthogonality_check(&spec, &fixtures::three_tap_z4_dual_taps())?
    );
    let auto = fixtures::autonomous_z4();
    println!(
        "autonomous: dual taps orthogonal {}, taps 1,0,1 orthogonal {}",
        orthogonality_check(&auto, &fixtures::autonomous_z4_dual_taps())?,
        orthogonality_check(&auto, &[fixtures::autonomous_z4_non_dual_taps()])?
    );
    Ok(())
}
