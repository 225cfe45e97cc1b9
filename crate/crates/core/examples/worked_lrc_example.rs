//! The (9,4,2) LRC over F_19 merged two at a time into a (15,8,2) LRC.

use convertible_codes::cli::repro_example2;

fn main() -> convertible_codes::Result<()> {
    for line in repro_example2()? {
        println!("{line}");
    }
    Ok(())
}
