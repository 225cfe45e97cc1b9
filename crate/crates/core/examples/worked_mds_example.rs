//! The six-symbol MDS code over F_19 merged two at a time into a ten-symbol code.

use convertible_codes::cli::repro_example1;

fn main() -> convertible_codes::Result<()> {
    for line in repro_example1()? {
        println!("{line}");
    }
    Ok(())
}
