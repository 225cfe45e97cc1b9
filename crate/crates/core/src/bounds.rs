//! Access-cost lower bounds, the LRC Singleton-type bound, isolated subsets
//! of a locally repairable code and numerical checks of the `x^s g^t` basis.

use std::collections::BTreeSet;

use rand::Rng;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::codes::{LinearCode, LrcCode};
use crate::error::{CodeError, Result};
use crate::field::FieldElem;
use crate::matrix::{in_span, Matrix};
use crate::poly::{annihilator_eval, vandermonde_of, EvaluationSet, Polynomial, XGBasis};

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// Lower bounds on the read and write costs of a merge conversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AccessBounds {
    pub read_lower: usize,
    pub write_lower: usize,
    pub regime_note: String,
}

impl AccessBounds {
    pub fn total(&self) -> usize {
        self.read_lower + self.write_lower
    }
}

/// Largest distance an `(n, k, r)`-LRC can have, and whether `k/n <= r/(r+1)`.
pub fn singleton_lrc(n: usize, k: usize, r: usize) -> Result<(i64, bool)> {
    if r == 0 || r > k || k > n {
        return Err(CodeError::Parameter(format!("need 1 <= r <= k <= n, got n={n} k={k} r={r}")));
    }
    let (n, k, r) = (n as i64, k as i64, r as i64);
    Ok((n - k - ceil_div(k, r) + 2, k * (r + 1) <= n * r))
}

/// Bounds for MDS codes; `k` is the initial dimension.
pub fn mds_access_bounds(n_i: usize, k: usize, n_f: usize, zeta: usize) -> Result<AccessBounds> {
    if k == 0 || zeta == 0 || n_i < k || n_f < zeta * k {
        return Err(CodeError::Parameter(format!(
            "need n_I >= k >= 1 and n_F >= zeta k, got n_I={n_i} k={k} n_F={n_f} zeta={zeta}"
        )));
    }
    let redundancy = n_f - zeta * k;
    let (read_lower, regime_note) = if n_i - k < redundancy {
        (zeta * k, "initial redundancy below final redundancy: every message symbol read")
    } else if redundancy >= k {
        (zeta * k, "final redundancy at least k")
    } else {
        (zeta * redundancy, "final redundancy below k")
    };
    Ok(AccessBounds {
        read_lower,
        write_lower: redundancy,
        regime_note: regime_note.to_string(),
    })
}

/// Most symbols of one initial codeword that can survive into a final code with
/// locality `r` and distance `d`.
fn max_remaining(n_f: i64, k: i64, zeta: i64, r: i64, d: i64) -> i64 {
    let rest = (zeta - 1) * k;
    n_f - d - (rest + ceil_div(rest, r)) + 2
}

/// Fewest reads from one initial codeword, given the slack `delta` and an isolated
/// subset of size `isolated` among the unread remaining symbols.
fn min_reads_per_codeword(k: i64, delta: i64, isolated: i64) -> i64 {
    if delta <= 0 {
        k
    } else {
        k - delta + isolated
    }
}

/// Bounds when the final code is linear with locality `r` and distance `d`;
/// `k` is the initial dimension.
pub fn lrc_access_bounds(n_i: usize, k: usize, n_f: usize, zeta: usize, r: usize, d: usize) -> Result<AccessBounds> {
    if d == 0 || r == 0 || k == 0 || zeta == 0 || r > zeta * k || n_f < zeta * k || n_i < k {
        return Err(CodeError::Parameter(format!(
            "need d, r, k >= 1, r <= zeta k, n_F >= zeta k, n_I >= k; got n_I={n_i} k={k} n_F={n_f} zeta={zeta} r={r} d={d}"
        )));
    }
    let (ni, ki, nf, z, ri, di) = (n_i as i64, k as i64, n_f as i64, zeta as i64, r as i64, d as i64);
    let kept = max_remaining(nf, ki, z, ri, di);
    let write = (nf - z * kept).max(0);
    let delta = kept - di + 1;
    let (per, note) = if di > ni - ki + 1 {
        (ki, "distance exceeds n_I - k + 1: every message symbol read")
    } else if delta <= 0 {
        (ki, "slack non-positive: every message symbol read")
    } else {
        let isolated = delta.div_euclid(ri + 1);
        (
            min_reads_per_codeword(ki, delta, isolated),
            "positive slack: reads reduced by the unread remaining symbols",
        )
    };
    Ok(AccessBounds {
        read_lower: (z * per.max(0)) as usize,
        write_lower: write as usize,
        regime_note: note.to_string(),
    })
}

/// Closed-form bounds for optimal LRC conversions with `(r+1) | n_F`; `k` counts groups
/// so the initial dimension is `kr`.
pub fn optimal_lrc_closed_form(n_i: usize, k: usize, n_f: usize, zeta: usize, r: usize) -> AccessBounds {
    let blocks = n_f / (r + 1);
    let write_lower = n_f.saturating_sub(zeta * k * (r + 1));
    let (read_lower, note) = if n_f >= n_i + (zeta - 1) * k * r + zeta * k {
        (zeta * k * r, "final length far above initial length")
    } else if (zeta + 1) * k <= blocks {
        (zeta * k * r, "at least (zeta+1)k groups in the final code")
    } else {
        (zeta * (r * blocks - zeta * k * r), "fewer than (zeta+1)k groups in the final code")
    };
    AccessBounds {
        read_lower,
        write_lower,
        regime_note: note.to_string(),
    }
}

/// A subset of `A` whose members are repairable without touching each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedSubset {
    pub subset: BTreeSet<usize>,
    /// Recovering set used for each member, in subset order.
    pub recovering: Vec<BTreeSet<usize>>,
}

/// Drops members of `family` one at a time while the rest still covers `target`.
fn prune_cover(mut family: Vec<BTreeSet<usize>>, target: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut idx = 0;
    while idx < family.len() {
        let covered = target
            .iter()
            .all(|x| family.iter().enumerate().any(|(j, s)| j != idx && s.contains(x)));
        if covered {
            family.remove(idx);
        } else {
            idx += 1;
        }
    }
    family
}

/// Greedy isolated subset from a family of extended recovering sets covering `[n]`.
pub fn isolated_subset_from_family(
    n: usize,
    family: &[BTreeSet<usize>],
    a: &BTreeSet<usize>,
) -> Result<IsolatedSubset> {
    let all: BTreeSet<usize> = (0..n).collect();
    if a.iter().any(|&x| x >= n) {
        return Err(CodeError::Parameter(format!("A has coordinates outside 0..{n}")));
    }
    let cover: BTreeSet<usize> = family.iter().flatten().copied().collect();
    if cover != all {
        return Err(CodeError::Parameter("recovering sets do not cover every coordinate".into()));
    }
    let irredundant = prune_cover(family.to_vec(), &all);
    let traces: Vec<BTreeSet<usize>> = irredundant.iter().map(|r| r.intersection(a).copied().collect()).collect();
    let kept = prune_cover(traces.clone(), a);
    let mut subset = BTreeSet::new();
    let mut recovering = Vec::new();
    for (pos, s) in kept.iter().enumerate() {
        let unique = s
            .iter()
            .copied()
            .find(|x| kept.iter().enumerate().all(|(j, t)| j == pos || !t.contains(x)))
            .ok_or_else(|| CodeError::ConditionViolation("cover of A is not irredundant".into()))?;
        let owner = traces.iter().position(|t| t == s).expect("trace came from the family");
        let mut rec = irredundant[owner].clone();
        rec.remove(&unique);
        subset.insert(unique);
        recovering.push(rec);
    }
    Ok(IsolatedSubset { subset, recovering })
}

/// Checks size and disjointness, and that each recovering set spans its coordinate.
pub fn verify_isolated(generator: &Matrix, r: usize, a: &BTreeSet<usize>, found: &IsolatedSubset) -> bool {
    let field = generator.field();
    if !found.subset.is_subset(a) || found.subset.len() < a.len().div_ceil(r + 1) {
        return false;
    }
    found.subset.iter().zip(&found.recovering).all(|(&i, rec)| {
        rec.len() <= r
            && rec.is_disjoint(&found.subset)
            && {
                let cols: Vec<Vec<FieldElem>> = rec.iter().map(|&j| generator.column(j)).collect();
                matches!(in_span(field, &generator.column(i), &cols), Ok(Some(_)))
            }
    })
}

/// Isolated subset of `a` for a Tamo–Barg code; each repair group is the extended
/// recovering set of its members. The result is verified before it is returned.
pub fn isolated_subset(code: &LrcCode, a: &BTreeSet<usize>) -> Result<IsolatedSubset> {
    let family: Vec<BTreeSet<usize>> = (0..code.groups().len()).map(|g| code.group_coords(g).collect()).collect();
    let found = isolated_subset_from_family(code.length(), &family, a)?;
    if !verify_isolated(&code.generator_matrix(), code.r(), a, &found) {
        return Err(CodeError::ConditionViolation("isolated subset failed verification".into()));
    }
    Ok(found)
}

/// Every extended recovering set of size at most `r + 1` of a short linear code.
pub fn extended_recovering_sets<C: LinearCode + ?Sized>(code: &C, r: usize) -> Result<Vec<BTreeSet<usize>>> {
    let n = code.length();
    if n > 16 {
        return Err(CodeError::Parameter(format!("exhaustive enumeration is limited to n <= 16, got {n}")));
    }
    let gm = code.generator_matrix();
    let field = code.field();
    let cols: Vec<Vec<FieldElem>> = (0..n).map(|j| gm.column(j)).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() as usize > r + 1 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        let extends = members.iter().any(|&i| {
            let others: Vec<Vec<FieldElem>> = members.iter().filter(|&&j| j != i).map(|&j| cols[j].clone()).collect();
            matches!(in_span(field, &cols[i], &others), Ok(Some(_)))
        });
        if extends {
            out.push(members.into_iter().collect());
        }
    }
    Ok(out)
}

/// Isolated subset for an arbitrary short code with locality `r`.
pub fn isolated_subset_bruteforce<C: LinearCode + ?Sized>(code: &C, r: usize, a: &BTreeSet<usize>) -> Result<IsolatedSubset> {
    let family = extended_recovering_sets(code, r)?;
    let found = isolated_subset_from_family(code.length(), &family, a)?;
    if !verify_isolated(&code.generator_matrix(), r, a, &found) {
        return Err(CodeError::ConditionViolation("isolated subset failed verification".into()));
    }
    Ok(found)
}

/// Outcome of the three basis identities on one family of groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    /// The `kr` vectors from the first `r` points of each group are independent.
    pub independent: bool,
    /// Interpolation weights rebuild the basis vector of every sampled point.
    pub expansion: bool,
    pub samples: usize,
    /// The stacked Vandermonde product vanishes.
    pub block_product_zero: bool,
    pub block_shape: (usize, usize),
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.independent && self.expansion && self.block_product_zero
    }
}

/// Runs the three identities on `k` disjoint groups of size `r + 1`, using `samples`
/// seeded random points for the expansion check.
pub fn appendix_checks(groups: &[EvaluationSet], g: &Polynomial, seed: u64, samples: usize) -> Result<AppendixReport> {
    let k = groups.len();
    if k == 0 {
        return Err(CodeError::Parameter("no groups".into()));
    }
    let r = groups[0].len().checked_sub(1).filter(|&r| r > 0).ok_or_else(|| {
        CodeError::Parameter("groups need at least two points".into())
    })?;
    let basis = XGBasis::new(g.clone(), r, k)?;
    let field = basis.field();
    let lrc = LrcCode::plain(groups.to_vec(), basis.clone())?;
    let consts = lrc.group_constants().to_vec();
    let a = Matrix::from_columns(
        field,
        &groups
            .iter()
            .flat_map(|grp| grp.points()[..r].iter().map(|&p| basis.xg_vector(p)))
            .collect::<Vec<_>>(),
    )?;
    let independent = a.rank() == k * r;

    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut expansion = true;
    for _ in 0..samples {
        let c = field.elem(rng.gen_range(0..field.modulus()));
        let gc = g.eval(c);
        let mut acc = vec![field.zero(); k * r];
        for (i, grp) in groups.iter().enumerate() {
            let others: Vec<FieldElem> = consts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            let w_group = annihilator_eval(&others, gc) / annihilator_eval(&others, consts[i]);
            let tilde = &grp.points()[..r];
            for (j, &p) in tilde.iter().enumerate() {
                let rest: Vec<FieldElem> = tilde.iter().enumerate().filter(|&(t, _)| t != j).map(|(_, &v)| v).collect();
                let w = w_group * annihilator_eval(&rest, c) / annihilator_eval(&rest, p);
                for (slot, v) in acc.iter_mut().zip(basis.xg_vector(p)) {
                    *slot += w * v;
                }
            }
        }
        if acc != basis.xg_vector(c) {
            expansion = false;
        }
    }

    let rows = (k - 1) * r;
    let mut left = Matrix::zeros(field, rows, k * r);
    let mut right = Matrix::zeros(field, k * r, r);
    for (i, grp) in groups.iter().enumerate() {
        let v = vandermonde_of(field, &grp.points()[..r], r);
        let vinv = v.inverse()?;
        let others: Vec<FieldElem> = consts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        let scale = annihilator_eval(&others, consts[i])
            .inverse()
            .ok_or_else(|| CodeError::Layout("group constants repeat".into()))?;
        for t in 0..k - 1 {
            let gt = consts[i].pow(t as u64);
            for x in 0..r {
                for y in 0..r {
                    left.set(t * r + x, i * r + y, gt * v.get(x, y));
                }
            }
        }
        for x in 0..r {
            for y in 0..r {
                right.set(i * r + x, y, scale * vinv.get(x, y));
            }
        }
    }
    let product = left.mul(&right)?;
    Ok(AppendixReport {
        independent,
        expansion,
        samples,
        block_product_zero: product.is_zero(),
        block_shape: (product.rows(), product.cols()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::lrc_convert::build_lrc_sets;

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_lrc(9, 4, 2).unwrap(), (5, true));
        assert_eq!(singleton_lrc(15, 8, 2).unwrap(), (5, true));
        assert_eq!(singleton_lrc(10, 4, 4).unwrap().0, 7);
        assert!(singleton_lrc(3, 4, 2).is_err());
    }

    #[test]
    fn mds_examples() {
        let b = mds_access_bounds(6, 4, 10, 2).unwrap();
        assert_eq!((b.read_lower, b.write_lower), (4, 2));
        let b = mds_access_bounds(6, 4, 8, 2).unwrap();
        assert_eq!((b.read_lower, b.write_lower), (0, 0));
        let b = mds_access_bounds(6, 4, 14, 2).unwrap();
        assert_eq!((b.read_lower, b.write_lower), (8, 6));
        assert!(mds_access_bounds(6, 4, 7, 2).is_err());
    }

    #[test]
    fn lrc_example() {
        let b = lrc_access_bounds(9, 4, 15, 2, 2, 5).unwrap();
        assert_eq!((b.read_lower, b.write_lower), (4, 3));
    }

    #[test]
    fn closed_form_agrees_on_a_sweep() {
        for zeta in 2..5 {
            for k in 1..5 {
                for r in 1..4 {
                    for li in 1..6 {
                        for blocks in zeta * k..zeta * k + 6 {
                            let (ni, nf) = ((k + li) * (r + 1), blocks * (r + 1));
                            let d = nf - zeta * k * (r + 1) + 2;
                            let b = lrc_access_bounds(ni, k * r, nf, zeta, r, d).unwrap();
                            let c = optimal_lrc_closed_form(ni, k, nf, zeta, r);
                            assert_eq!((b.read_lower, b.write_lower), (c.read_lower, c.write_lower));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lrc_degenerates_to_mds() {
        for zeta in 2..5 {
            for k in 1..6 {
                for ni in k..k + 6 {
                    for nf in zeta * k..zeta * k + 8 {
                        let m = mds_access_bounds(ni, k, nf, zeta).unwrap();
                        let l = lrc_access_bounds(ni, k, nf, zeta, zeta * k, nf - zeta * k + 1).unwrap();
                        assert_eq!((m.read_lower, m.write_lower), (l.read_lower, l.write_lower));
                    }
                }
            }
        }
    }

    fn example_final() -> LrcCode {
        let f = PrimeField::new(19).unwrap();
        let l = build_lrc_sets(2, 2, 2, 1, 1, f).unwrap();
        let groups: Vec<EvaluationSet> = l.a_groups.iter().flatten().chain(&l.c_groups).cloned().collect();
        LrcCode::plain(groups, l.basis.with_k(4)).unwrap()
    }

    #[test]
    fn isolated_examples() {
        let code = example_final();
        let one: BTreeSet<usize> = (0..3).collect();
        assert_eq!(isolated_subset(&code, &one).unwrap().subset.len(), 1);
        let c_group: BTreeSet<usize> = (12..15).collect();
        let found = isolated_subset(&code, &c_group).unwrap();
        assert!(found.subset.len() >= 1);
        let spread: BTreeSet<usize> = (0..9).collect();
        assert_eq!(isolated_subset(&code, &spread).unwrap().subset.len(), 3);
        let mixed: BTreeSet<usize> = [0, 4, 5, 13].into_iter().collect();
        assert_eq!(isolated_subset(&code, &mixed).unwrap().subset.len(), 3);
    }

    #[test]
    fn isolated_bruteforce_on_a_short_code() {
        let f = PrimeField::new(13).unwrap();
        let groups = vec![
            EvaluationSet::from_u64(f, &[1, 3, 9]).unwrap(),
            EvaluationSet::from_u64(f, &[2, 6, 5]).unwrap(),
            EvaluationSet::from_u64(f, &[4, 12, 10]).unwrap(),
        ];
        let code = LrcCode::plain(groups, XGBasis::power(f, 2, 2).unwrap()).unwrap();
        let a: BTreeSet<usize> = [0, 1, 4, 8].into_iter().collect();
        let found = isolated_subset_bruteforce(&code, 2, &a).unwrap();
        assert!(found.subset.len() >= 2);
    }

    #[test]
    fn appendix_on_example_groups() {
        let f = PrimeField::new(19).unwrap();
        let l = build_lrc_sets(2, 2, 2, 1, 1, f).unwrap();
        for block in &l.a_groups {
            let rep = appendix_checks(block, l.g(), 7, 20).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert_eq!(rep.block_shape, (2, 2));
        }
        let single = appendix_checks(&l.a_groups[0][..1], l.g(), 7, 20).unwrap();
        assert!(single.passed());
        assert_eq!(single.block_shape, (0, 2));
    }
}
