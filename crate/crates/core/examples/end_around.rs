//! End-around granules: a controller granule on a wrapped interval against the
//! observer granule on its complement-closure, in both directions.
//!
//! cargo run --example end_around

use abelcodes::dynamics::{end_around_check, end_around_observer_check, GranuleTable};
use abelcodes::fixtures;

fn main() -> abelcodes::Result<()> {
    let code = fixtures::autonomous_z4_code();
    let table = GranuleTable::build(&code, 0, true)?;
    for e in table.end_around.iter().take(6) {
        println!(
            "{:?}: controller {}  observer {}",
            e.interval, e.controller, e.observer
        );
    }
    let n = code.axis_len();
    let mut all = true;
    for m in 0..n {
        for k in m + 1..n {
            all &= end_around_check(&code, m, k)? && end_around_observer_check(&code, m, k)?;
        }
    }
    println!("end-around isomorphisms hold for every m < n: {all}");
    Ok(())
}
