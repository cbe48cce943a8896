//! Compare fast-path results with brute-force enumeration on a small code.
//!
//! cargo run --example oracle_check

use abelcodes::dynamics::{controller_granule, observer_granule, state_at};
use abelcodes::fixtures;
use abelcodes::oracle::{Oracle, OracleCaps};

fn main() -> abelcodes::Result<()> {
    let code = fixtures::autonomous_z4_code();
    let o = Oracle::new(&code, OracleCaps::default())?;
    println!("order: fast {} oracle {}", code.code_order(), o.order());
    println!(
        "dual order: fast {} oracle {}",
        code.dual().code_order(),
        o.dual()?.len()
    );
    for k in 1..code.axis_len() {
        println!(
            "k={k}: state fast {} oracle {}; Φ[k,k+1] fast {:?} oracle {:?}; Γ fast {:?} oracle {:?}",
            state_at(&code, k)?.two_sided.order(),
            o.state_count(k)?,
            observer_granule(&code, k - 1, 1)?.factors(),
            o.observer_granule(k - 1, 1)?.factors(),
            controller_granule(&code, k - 1, 1)?.factors(),
            o.controller_granule(k - 1, 1)?.factors(),
        );
    }
    Ok(())
}
