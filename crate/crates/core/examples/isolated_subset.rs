//! Pick coordinates of an LRC that can each be repaired without the others.

use std::collections::BTreeSet;

use convertible_codes::bounds::isolated_subset;
use convertible_codes::codes::LrcCode;
use convertible_codes::lrc_convert::build_lrc_sets;
use convertible_codes::poly::EvaluationSet;
use convertible_codes::{PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(19)?;
    let layout = build_lrc_sets(2, 2, 2, 1, 1, field)?;
    let groups: Vec<EvaluationSet> = layout.a_groups.iter().flatten().chain(&layout.c_groups).cloned().collect();
    let code = LrcCode::plain(groups, layout.basis.with_k(4))?;

    for a in [vec![0, 1, 2], vec![0, 4, 5, 13], (0..15).collect::<Vec<_>>()] {
        let a: BTreeSet<usize> = a.into_iter().collect();
        let found = isolated_subset(&code, &a)?;
        println!("A = {a:?}");
        for (i, rec) in found.subset.iter().zip(&found.recovering) {
            println!("  {i} repaired from {rec:?}");
        }
    }
    Ok(())
}
