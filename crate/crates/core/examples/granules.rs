//! Controller and observer granule table, and the state-size factorization.
//!
//! cargo run --example granules

use abelcodes::dynamics::{state_size_from_granules, GranuleTable};
use abelcodes::fixtures;

fn main() -> abelcodes::Result<()> {
    let code = fixtures::three_tap_z4_code();
    let table = GranuleTable::build(&code, 2, false)?;
    for e in &table.entries {
        println!(
            "[{:>2}, {:>2}]  controller {:<8}  observer {:?}",
            e.k,
            e.k + e.j,
            format!("{:?}", e.controller.factors()),
            e.observer.factors()
        );
    }
    let (by_gamma, by_phi) = state_size_from_granules(&code, 6)?;
    println!("state size at k=6 from granules: {by_gamma} (controller), {by_phi} (observer)");
    Ok(())
}
