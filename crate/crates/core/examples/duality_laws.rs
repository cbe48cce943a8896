//! Dual code, order duality and the projection / subcode duality on a small explicit code.
//!
//! cargo run --example duality_laws

use abelcodes::dynamics::{dual_state_space_check, projection_subcode_duality_check};
use abelcodes::{GroupCode, Modulus, SymbolLayout, TimeSubset};

fn main() -> abelcodes::Result<()> {
    let layout = SymbolLayout::uniform(Modulus::new(6)?, 4, 1)?;
    let code = GroupCode::from_generators(layout, vec![vec![1, 2, 0, 3], vec![0, 3, 3, 0]])?;
    let dual = code.dual();
    println!(
        "|C| = {}, |C⊥| = {}, 6^4 = {}",
        code.code_order(),
        dual.code_order(),
        6u128.pow(4)
    );
    println!("dual basis:");
    for row in dual.carrier().basis_rows() {
        println!("  {row:?}");
    }
    println!("dual of dual is C: {}", dual.dual() == code);
    let j = TimeSubset::new(4, [0, 2])?;
    println!(
        "projection/subcode duality on {j}: {}",
        projection_subcode_duality_check(&code, &j)?
    );
    println!(
        "state spaces of C and C⊥ agree on {j}: {}",
        dual_state_space_check(&code, &j)?
    );
    Ok(())
}
