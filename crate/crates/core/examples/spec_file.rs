//! Write a code pair to a spec file, read it back and verify it.

use convertible_codes::cli::{verify, BuiltCode, CodeKind, CodeSpecFile, Level};
use convertible_codes::Result;

fn main() -> Result<()> {
    let code = BuiltCode::build(CodeKind::Lrc, 2, 2, Some(2), 3, 1, None)?;
    let spec = code.to_spec();
    let path = std::env::temp_dir().join("convertible-lrc.json");
    spec.save(&path)?;
    println!("wrote {}", path.display());

    let loaded = CodeSpecFile::load(&path)?;
    assert_eq!(loaded, spec);
    let again = BuiltCode::from_spec(&loaded)?;
    print!("{}", verify(&again, Some(&loaded), Level::Quick, 0).render());
    Ok(())
}
