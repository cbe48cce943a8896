//! Observer-based encoder: random inputs to a codeword, with the state trace.
//!
//! cargo run --example encoder

use abelcodes::fixtures;
use abelcodes::machines::ObserverEncoder;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> abelcodes::Result<()> {
    let code = fixtures::three_tap_z4_code();
    let enc = ObserverEncoder::new(&code)?;
    println!(
        "memory {}, {} input sequences, |C| = {}",
        enc.memory(),
        enc.input_count(),
        code.code_order()
    );
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (word, trace) = enc.encode(&enc.random_inputs(&mut rng))?;
    for step in &trace.steps {
        println!(
            "k={:>2}  input {:?}  symbol {:?}  state {:?}",
            step.time, step.input, step.symbol, step.state
        );
    }
    println!("codeword is in C: {}", code.code_membership(&word)?);
    Ok(())
}
