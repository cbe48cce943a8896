//! Randomized theorem suite with a fixed seed.
//!
//! cargo run --release --example verify_duality -- [trials]

use abelcodes::verify::{run, VerifyConfig};

fn main() -> abelcodes::Result<()> {
    let trials = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);
    let report = run(&VerifyConfig {
        trials,
        ..VerifyConfig::default()
    })?;
    print!("{}", report.render_text());
    Ok(())
}
