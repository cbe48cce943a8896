//! State space of a code at every cut, computed four ways.
//!
//! cargo run --example state_space

use abelcodes::dynamics::state_at;
use abelcodes::fixtures;

fn main() -> abelcodes::Result<()> {
    let code = fixtures::three_tap_z4_code();
    for k in 1..code.axis_len() {
        let r = state_at(&code, k)?;
        println!(
            "k={k:>2}  two-sided {}  agree={}",
            r.two_sided,
            r.consistent()
        );
    }
    Ok(())
}
