//! Syndrome-former: zero on codewords, nonzero on a corrupted word.
//!
//! cargo run --example syndrome_former

use abelcodes::fixtures;
use abelcodes::machines::SyndromeFormer;

fn main() -> abelcodes::Result<()> {
    let code = fixtures::repetition_z4_code();
    let sf = SyndromeFormer::new(&code)?;
    println!("memory {}; checks:", sf.memory());
    for (first, last, row) in sf.check_rows() {
        println!("  times [{first}, {last}]  {row:?}");
    }
    for w in [vec![3u64; 6], vec![3, 3, 1, 3, 3, 3]] {
        let (s, _) = sf.form_syndromes(&w)?;
        println!("{w:?} -> {s:?}  member={}", sf.is_member(&w)?);
    }
    Ok(())
}
