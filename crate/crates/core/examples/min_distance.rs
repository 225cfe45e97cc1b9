//! Exhaustive minimum distance of small codes against the Singleton-type bounds.

use convertible_codes::bounds::singleton_lrc;
use convertible_codes::codes::{min_distance_bruteforce, GrsCode, LinearCode, LrcCode, DEFAULT_BUDGET};
use convertible_codes::poly::{EvaluationSet, XGBasis};
use convertible_codes::{PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(19)?;
    let rs = GrsCode::rs(EvaluationSet::from_u64(f, &[1, 8, 7, 18, 4, 9])?, 4)?;
    let d = min_distance_bruteforce(&rs, DEFAULT_BUDGET)?;
    println!("[6,4] Reed-Solomon: d = {d}, Singleton {}", rs.length() - rs.dimension() + 1);

    let groups = [[1, 7, 11], [8, 18, 12], [4, 9, 6]]
        .iter()
        .map(|g| EvaluationSet::from_u64(f, g))
        .collect::<Result<Vec<_>>>()?;
    let lrc = LrcCode::plain(groups, XGBasis::power(f, 2, 2)?)?;
    let d = min_distance_bruteforce(&lrc, DEFAULT_BUDGET)?;
    let (bound, _) = singleton_lrc(9, 4, 2)?;
    println!("(9,4,2) LRC: d = {d}, bound {bound}");
    Ok(())
}
