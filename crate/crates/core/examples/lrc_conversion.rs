//! Merge two LRC codewords with locality 3 and watch the last symbol of each
//! new repair group come from local repair.
//!
//! Usage: `cargo run --example lrc_conversion [zeta k r l_I l_F]`

use convertible_codes::codes::LinearCode;
use convertible_codes::lrc_convert::{build_lrc_convertible, build_lrc_sets, find_lrc_field};
use convertible_codes::Result;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let [zeta, k, r, l_i, l_f] = <[usize; 5]>::try_from(args).unwrap_or([2, 3, 3, 3, 2]);
    let field = find_lrc_field(zeta, k, r, l_i)?;
    let layout = build_lrc_sets(zeta, k, r, l_i, l_f, field)?;
    println!(
        "F_{}  beta = {}  alpha = {}  B taken from cosets {:?}",
        field.modulus(),
        layout.beta.map_or(0, |b| b.value()),
        layout.alpha.map_or(0, |a| a.value()),
        layout.b_origin
    );
    let code = build_lrc_convertible(layout)?;
    let dim = code.initial().dimension();

    let mut rng = SplitMix64::seed_from_u64(7);
    let messages: Vec<_> = (0..zeta)
        .map(|_| (0..dim).map(|_| field.elem(rng.gen_range(0..field.modulus()))).collect::<Vec<_>>())
        .collect();
    let words = messages.iter().map(|m| code.initial().encode(m)).collect::<Result<Vec<_>>>()?;
    let (d, trace) = code.convert(&words)?;

    for (s, reads) in trace.accessed.iter().enumerate() {
        println!("read from c{}: {:?}", s + 1, reads);
    }
    for (coord, how) in &trace.new_symbols {
        println!("d[{coord}] <- {how}");
    }
    println!("{}", trace.cost_line());
    println!("locality of the final code holds: {}", code.final_code().check_locality().passed());
    assert_eq!(code.decode_sources(&d)?, messages);
    Ok(())
}
