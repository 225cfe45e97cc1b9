//! Merge three [7,4] MDS codewords into one [14,12] codeword and show which
//! symbols were kept, read and written.
//!
//! Usage: `cargo run --example mds_conversion [zeta k l_I l_F]`

use convertible_codes::access::SymbolRole;
use convertible_codes::codes::LinearCode;
use convertible_codes::mds_convert::{build_mds_convertible, build_mds_sets, find_mds_field};
use convertible_codes::{PrimeField, Result};
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let [zeta, k, l_i, l_f] = <[usize; 4]>::try_from(args).unwrap_or([3, 4, 3, 2]);
    let field: PrimeField = find_mds_field(zeta, k, l_i)?;
    let code = build_mds_convertible(build_mds_sets(zeta, k, l_i, l_f, field)?)?;
    println!("F_{}  A_1 = {:?}  C = {:?}  B = {:?}", field.modulus(), code.layout().a_sets[0].values(), code.layout().c.values(), code.layout().b.values());

    let mut rng = SplitMix64::seed_from_u64(42);
    let messages: Vec<_> = (0..zeta)
        .map(|_| (0..k).map(|_| field.elem(rng.gen_range(0..field.modulus()))).collect::<Vec<_>>())
        .collect();
    let words = messages.iter().map(|m| code.initial().encode(m)).collect::<Result<Vec<_>>>()?;
    let (d, trace) = code.convert(&words)?;

    for rec in trace.records(&words[0].points(), &d.points()) {
        if rec.role != SymbolRole::Untouched {
            println!("{:>3}[{:>2}] {:>9} {}", rec.codeword, rec.coord, rec.role.as_str(), rec.source);
        }
    }
    println!("{}", trace.cost_line());
    assert_eq!(d, code.encode_from_scratch(&messages)?);
    assert_eq!(code.decode_sources(&d)?, messages);
    Ok(())
}
