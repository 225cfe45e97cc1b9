//! Lower bounds on conversion costs next to the costs the constructions achieve.

use convertible_codes::bounds::{lrc_access_bounds, mds_access_bounds, optimal_lrc_closed_form, singleton_lrc};
use convertible_codes::Result;

fn main() -> Result<()> {
    println!("MDS, (n_I, k, n_F, zeta):");
    for (ni, k, nf, zeta) in [(6, 4, 10, 2), (6, 4, 14, 2), (7, 4, 13, 3), (9, 3, 12, 3)] {
        let b = mds_access_bounds(ni, k, nf, zeta)?;
        println!("  ({ni}, {k}, {nf}, {zeta}): read >= {:>2}  write >= {:>2}  [{}]", b.read_lower, b.write_lower, b.regime_note);
    }

    println!("optimal LRC, (k groups, r, l_I, l_F, zeta):");
    for (k, r, li, lf, zeta) in [(2, 2, 1, 1, 2), (3, 2, 2, 2, 2), (2, 3, 4, 1, 3)] {
        let (ni, nf) = ((k + li) * (r + 1), (zeta * k + lf) * (r + 1));
        let (d, _) = singleton_lrc(nf, zeta * k * r, r)?;
        let b = lrc_access_bounds(ni, k * r, nf, zeta, r, d as usize)?;
        let c = optimal_lrc_closed_form(ni, k, nf, zeta, r);
        println!(
            "  n_I={ni:>2} n_F={nf:>2} d={d}: read >= {:>2}  write >= {:>2}  (closed form {}/{})",
            b.read_lower, b.write_lower, c.read_lower, c.write_lower
        );
    }
    Ok(())
}
