//! Load a code-spec file, analyze it and export its dual as an explicit spec.
//!
//! cargo run --example spec_files -- crates/core/fixtures/repetition_z4.toml

use abelcodes::report::analyze;
use abelcodes::spec_file::CodeSpecFile;

fn main() -> abelcodes::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/repetition_z4.toml").to_string()
    });
    let loaded = CodeSpecFile::read(path.as_ref())?.load()?;
    let n = loaded.code.axis_len();
    let report = analyze(&loaded.code, n / 2, loaded.margin, loaded.name.clone())?;
    print!("{}", report.render_text());
    println!("--- dual as an explicit spec ---");
    print!(
        "{}",
        CodeSpecFile::explicit_from_code(&loaded.code.dual(), None, None).to_toml()
    );
    Ok(())
}
