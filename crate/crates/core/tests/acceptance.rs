//! End-to-end acceptance checks; prints one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use convertible_codes::bounds::{
    appendix_checks, isolated_subset, isolated_subset_bruteforce, lrc_access_bounds, mds_access_bounds,
    singleton_lrc,
};
use convertible_codes::cli::{conversion_trial, repro_example1, repro_example2, BuiltCode, CodeKind};
use convertible_codes::codes::{exhaustive_mds_check, min_distance_bruteforce, GrsCode, LinearCode, LrcCode, DEFAULT_BUDGET};
use convertible_codes::field::FieldElem;
use convertible_codes::lrc_convert::{build_lrc_sets, lrc_min_field_size};
use convertible_codes::matrix::in_span;
use convertible_codes::mds_convert::MdsPlan;
use convertible_codes::poly::{EvaluationSet, XGBasis};
use convertible_codes::PrimeField;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn golden_mds() -> Outcome {
    let start = Instant::now();
    let lines = repro_example1().map_err(|e| e.to_string())?;
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("{} values match, {took:?}", lines.len()))
}

fn golden_lrc() -> Outcome {
    let start = Instant::now();
    let lines = repro_example2().map_err(|e| e.to_string())?;
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("{} values match, {took:?}", lines.len()))
}

fn brute_distance() -> Outcome {
    let start = Instant::now();
    let f = PrimeField::new(19).map_err(|e| e.to_string())?;
    let set = |xs: &[u64]| EvaluationSet::from_u64(f, xs).unwrap();
    let rs = GrsCode::rs(set(&[1, 8, 7, 18, 4, 9]), 4).unwrap();
    let d1 = min_distance_bruteforce(&rs, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(d1 == 3, || format!("RS distance {d1}"))?;
    let lrc = LrcCode::plain(vec![set(&[1, 7, 11]), set(&[8, 18, 12]), set(&[4, 9, 6])], XGBasis::power(f, 2, 2).unwrap())
        .unwrap();
    let d2 = min_distance_bruteforce(&lrc, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let (bound, _) = singleton_lrc(9, 4, 2).unwrap();
    ensure(d2 as i64 == bound && d2 == 5, || format!("LRC distance {d2}, bound {bound}"))?;
    let took = within(Duration::from_secs(30), start)?;
    Ok(format!("d = 3 and d = 5 = bound, {took:?}"))
}

struct Instance {
    label: String,
    code: BuiltCode,
}

fn build_sweep() -> Result<Vec<Instance>, String> {
    let mut out = Vec::new();
    for (zeta, k, r, l_i, l_f) in common::admissible_tuples() {
        let label = format!("(zeta={zeta}, k={k}, r={r}, lI={l_i}, lF={l_f})");
        let (kind, r_opt) = if r == 0 { (CodeKind::Mds, None) } else { (CodeKind::Lrc, Some(r)) };
        let code = BuiltCode::build(kind, zeta, k, r_opt, l_i, l_f, None).map_err(|e| format!("{label}: {e}"))?;
        out.push(Instance { label, code });
    }
    Ok(out)
}

fn field_inequalities(inst: &Instance) -> Result<(), String> {
    let q = inst.code.field().modulus();
    ensure(q <= 10_000, || format!("{}: q = {q} above 10^4", inst.label))?;
    let ini = inst.code.initial_code();
    match &inst.code {
        BuiltCode::Mds(MdsPlan::Optimal(c)) => {
            let l = c.layout();
            let m = l.k.max(l.l_i) as u64;
            ensure((q - 1) % m == 0 && q > (l.zeta as u64 + 1) * m, || {
                format!("{}: q = {q} violates the MDS field condition", inst.label)
            })
        }
        BuiltCode::Mds(MdsPlan::DefaultReencode(_)) => Err(format!("{}: unexpected re-encoding plan", inst.label)),
        BuiltCode::Lrc(c) => {
            let l = c.layout();
            let n = (l.k * (l.r + 1)) as u64;
            ensure(
                (q - 1) % n == 0 && q >= lrc_min_field_size(l.zeta, l.k, l.r, l.l_i) && ini.dimension() == l.k * l.r,
                || format!("{}: q = {q} violates the LRC field condition", inst.label),
            )
        }
    }
}

fn expected_bounds(inst: &Instance) -> Result<(usize, usize), String> {
    let ini = inst.code.initial_code();
    let fin = inst.code.final_code();
    let zeta = inst.code.zeta();
    let b = match inst.code.locality() {
        None => mds_access_bounds(ini.length(), ini.dimension(), fin.length(), zeta),
        Some(r) => {
            let (d, _) = singleton_lrc(fin.length(), fin.dimension(), r).map_err(|e| e.to_string())?;
            lrc_access_bounds(ini.length(), ini.dimension(), fin.length(), zeta, r, d as usize)
        }
    }
    .map_err(|e| e.to_string())?;
    Ok((b.read_lower, b.write_lower))
}

fn optimality_sweep(instances: &[Instance]) -> Outcome {
    let start = Instant::now();
    ensure(instances.len() >= 20, || format!("only {} tuples", instances.len()))?;
    let mut largest = 0;
    for inst in instances {
        field_inequalities(inst)?;
        largest = largest.max(inst.code.field().modulus());
        let (trace, problems) = conversion_trial(&inst.code, 11).map_err(|e| format!("{}: {e}", inst.label))?;
        ensure(problems.is_empty(), || format!("{}: {}", inst.label, problems[0]))?;
        let want = expected_bounds(inst)?;
        let got = (trace.read_cost(), trace.write_cost());
        ensure(got == want, || format!("{}: measured {got:?}, bound {want:?}", inst.label))?;
    }
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("{} tuples meet their bounds exactly, largest q = {largest}, {took:?}", instances.len()))
}

fn conversion_equivalence(instances: &[Instance]) -> Outcome {
    let mut trials = 0;
    for inst in instances {
        for seed in 0..100 {
            let (_, problems) = conversion_trial(&inst.code, 1000 + seed).map_err(|e| format!("{}: {e}", inst.label))?;
            ensure(problems.is_empty(), || format!("{}: {}", inst.label, problems[0]))?;
            trials += 1;
        }
    }
    Ok(format!("{trials} conversions agree with direct encoding, decoding and membership"))
}

const FIELDS: [u64; 5] = [13, 37, 61, 73, 97];

fn appendix_suite() -> Outcome {
    let start = Instant::now();
    let f19 = PrimeField::new(19).unwrap();
    let layout = build_lrc_sets(2, 2, 2, 1, 1, f19).map_err(|e| e.to_string())?;
    for block in &layout.a_groups {
        let rep = appendix_checks(block, layout.g(), 1, 20).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("worked example block fails: {rep:?}"))?;
    }
    let mut rng = SplitMix64::seed_from_u64(6);
    let mut fields = BTreeSet::new();
    for t in 0..50 {
        let q = FIELDS[t % FIELDS.len()];
        let field = PrimeField::new(q).unwrap();
        let r = rng.gen_range(1..=3);
        let cosets = (q as usize - 1) / (r + 1);
        let k = rng.gen_range(1..=4.min(cosets));
        let groups = common::random_groups(&mut rng, field, k, r);
        let g = XGBasis::power(field, r, k).unwrap().g().clone();
        let rep = appendix_checks(&groups, &g, t as u64, 20).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("layout {t} over F_{q} fails: {rep:?}"))?;
        ensure(rep.block_shape == ((k - 1) * r, r), || format!("block shape {:?}", rep.block_shape))?;
        fields.insert(q);
    }
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!("worked example plus 50 layouts over {} fields, {took:?}", fields.len()))
}

fn independent_isolation_check(code: &dyn LinearCode, r: usize, a: &BTreeSet<usize>, subset: &BTreeSet<usize>, recovering: &[BTreeSet<usize>]) -> Result<(), String> {
    ensure(subset.is_subset(a), || "subset leaves A".into())?;
    ensure(subset.len() >= a.len().div_ceil(r + 1), || format!("|A'| = {} for |A| = {}", subset.len(), a.len()))?;
    let gen = code.generator_matrix();
    for (&i, rec) in subset.iter().zip(recovering) {
        ensure(rec.len() <= r && rec.is_disjoint(subset), || format!("recovering set of {i} touches A'"))?;
        let cols: Vec<Vec<FieldElem>> = rec.iter().map(|&j| gen.column(j)).collect();
        let ok = matches!(in_span(code.field(), &gen.column(i), &cols), Ok(Some(_)));
        ensure(ok, || format!("coordinate {i} not spanned by {rec:?}"))?;
    }
    Ok(())
}

fn isolated_property() -> Outcome {
    let mut rng = SplitMix64::seed_from_u64(8);
    let mut brute = 0;
    for t in 0..50 {
        let q = FIELDS[t % FIELDS.len()];
        let field = PrimeField::new(q).unwrap();
        let r = rng.gen_range(1..=3);
        let cosets = (q as usize - 1) / (r + 1);
        let blocks = rng.gen_range(1..=3);
        let groups_n = rng.gen_range(blocks..=(blocks + 2).min(cosets));
        let groups = common::random_groups(&mut rng, field, groups_n, r);
        let code = LrcCode::plain(groups, XGBasis::power(field, r, blocks).unwrap()).map_err(|e| e.to_string())?;
        let n = code.length();
        let a: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let a = if a.is_empty() { BTreeSet::from([rng.gen_range(0..n)]) } else { a };
        let found = isolated_subset(&code, &a).map_err(|e| format!("pair {t}: {e}"))?;
        independent_isolation_check(&code, r, &a, &found.subset, &found.recovering).map_err(|e| format!("pair {t}: {e}"))?;
        if n <= 12 {
            let found = isolated_subset_bruteforce(&code, r, &a).map_err(|e| format!("pair {t}: {e}"))?;
            independent_isolation_check(&code, r, &a, &found.subset, &found.recovering)
                .map_err(|e| format!("pair {t} (enumerated family): {e}"))?;
            brute += 1;
        }
    }
    Ok(format!("50 pairs verified, {brute} also through the enumerated recovering-set family"))
}

fn structural(instances: &[Instance]) -> Outcome {
    let mut exhaustive = 0;
    for inst in instances {
        let fin = inst.code.final_code();
        let ini = inst.code.initial_code();
        let want = inst.code.zeta() * ini.dimension();
        let rank = fin.generator_matrix().rank();
        ensure(rank == want, || format!("{}: final rank {rank}, expected {want}", inst.label))?;
        match &inst.code {
            BuiltCode::Lrc(c) => {
                let rep = c.final_code().check_locality();
                ensure(rep.passed() && rep.checked == fin.length(), || format!("{}: locality {rep:?}", inst.label))?;
            }
            BuiltCode::Mds(_) if fin.length() <= 12 => {
                ensure(exhaustive_mds_check(fin).is_none(), || format!("{}: singular k-subset", inst.label))?;
                exhaustive += 1;
            }
            BuiltCode::Mds(_) => {}
        }
    }
    Ok(format!("{} final codes have full rank, {exhaustive} MDS codes checked on every k-subset", instances.len()))
}

fn guarded(f: &dyn Fn() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    })
}

fn main() {
    let mut results: Vec<(usize, Outcome)> = Vec::new();
    results.push((1, guarded(&golden_mds)));
    results.push((2, guarded(&golden_lrc)));
    results.push((3, guarded(&brute_distance)));
    match build_sweep() {
        Ok(instances) => {
            results.push((4, guarded(&|| optimality_sweep(&instances))));
            results.push((5, guarded(&|| conversion_equivalence(&instances))));
            results.push((6, guarded(&appendix_suite)));
            results.push((7, guarded(&isolated_property)));
            results.push((8, guarded(&|| structural(&instances))));
        }
        Err(e) => {
            for n in [4, 5, 8] {
                results.push((n, Err(format!("sweep did not build: {e}"))));
            }
            results.push((6, guarded(&appendix_suite)));
            results.push((7, guarded(&isolated_property)));
            results.sort_by_key(|r| r.0);
        }
    }
    let mut failed = false;
    for (n, out) in &results {
        match out {
            Ok(detail) => println!("criterion {n}: PASS  {detail}"),
            Err(detail) => {
                failed = true;
                println!("criterion {n}: FAIL  {detail}");
            }
        }
    }
    if failed {
        std::process::exit(1);
    }
}
