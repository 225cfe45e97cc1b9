#![allow(dead_code)]

use convertible_codes::poly::EvaluationSet;
use convertible_codes::PrimeField;
use rand::seq::SliceRandom;
use rand::Rng;

/// `(zeta, k, r, l_I, l_F)` in the sweep ranges; `r = 0` marks an MDS tuple.
pub fn admissible_tuples() -> Vec<(usize, usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for zeta in 2..=3 {
        for k in 1..=4 {
            for r in 0..=3 {
                for l_i in 1..=4 {
                    for l_f in 1..=l_i.min(k) {
                        out.push((zeta, k, r, l_i, l_f));
                    }
                }
            }
        }
    }
    out
}

/// `k` distinct cosets of the order-`(r+1)` subgroup, each shuffled.
pub fn random_groups<R: Rng>(rng: &mut R, field: PrimeField, k: usize, r: usize) -> Vec<EvaluationSet> {
    let q = field.modulus();
    let h = field.subgroup_generator((r + 1) as u64).expect("r + 1 divides q - 1");
    let beta = field.primitive_root();
    let cosets = ((q - 1) / (r as u64 + 1)) as usize;
    let mut reps: Vec<usize> = (0..cosets).collect();
    reps.shuffle(rng);
    reps.truncate(k);
    reps.into_iter()
        .map(|e| {
            let base = beta.pow(e as u64);
            let mut pts: Vec<_> = (0..=r).map(|j| base * h.pow(j as u64)).collect();
            pts.shuffle(rng);
            EvaluationSet::new(field, pts).expect("coset points are distinct")
        })
        .collect()
}
