//! Command-line front end and the JSON spec-file format.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::access::{ConversionTrace, SymbolRecord};
use crate::bounds::{appendix_checks, lrc_access_bounds, mds_access_bounds, singleton_lrc, AccessBounds};
use crate::codes::{exhaustive_mds_check, min_distance_bruteforce, Codeword, LinearCode, DEFAULT_BUDGET};
use crate::error::{CodeError, Result};
use crate::field::{FieldElem, PrimeField};
use crate::lrc_convert::{build_lrc_convertible, build_lrc_sets, find_lrc_field, LrcConvertibleCode, LrcLayout};
use crate::matrix::Matrix;
use crate::mds_convert::{
    build_m_matrix, build_mds_sets, declared_accessed, find_mds_field, plan_mds, DefaultReencode, MdsConvertibleCode,
    MdsLayout, MdsPlan,
};
use crate::poly::{annihilator_eval, power_vector, EvaluationSet, XGBasis};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Mds,
    Lrc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Plan {
    Optimal,
    DefaultReencode,
}

/// Explicit point sets. For MDS codes every block holds one set; for LRCs every
/// set is a repair group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecSets {
    pub a: Vec<Vec<Vec<u64>>>,
    pub c: Vec<Vec<u64>>,
    pub b: Vec<Vec<u64>>,
}

/// Serializable description of a convertible code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecFile {
    pub schema_version: u32,
    pub kind: CodeKind,
    pub plan: Plan,
    pub modulus: u64,
    pub zeta: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub l_i: usize,
    pub l_f: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<(u64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta0: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b_origin: Vec<(usize, usize)>,
    pub sets: SpecSets,
    pub initial_multipliers: Vec<u64>,
    pub final_multipliers: Vec<u64>,
    pub matrices: Vec<Vec<Vec<u64>>>,
    pub thetas: Vec<Vec<u64>>,
}

impl CodeSpecFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CodeSpecFile = serde_json::from_str(text).map_err(|e| CodeError::Parse(e.to_string()))?;
        if spec.schema_version != SCHEMA_VERSION {
            return Err(CodeError::Parse(format!(
                "schema version {} is not supported (expected {SCHEMA_VERSION})",
                spec.schema_version
            )));
        }
        Ok(spec)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| CodeError::Io(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CodeError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// A built code pair of either family.
#[derive(Clone, Debug)]
pub enum BuiltCode {
    Mds(MdsPlan),
    Lrc(Box<LrcConvertibleCode>),
}

fn vals(xs: &[FieldElem]) -> Vec<u64> {
    xs.iter().map(|x| x.value()).collect()
}

fn elems(field: PrimeField, xs: &[u64]) -> Result<Vec<FieldElem>> {
    xs.iter()
        .map(|&x| {
            if x < field.modulus() {
                Ok(field.elem(x))
            } else {
                Err(CodeError::Parse(format!("{x} is not a residue mod {}", field.modulus())))
            }
        })
        .collect()
}

fn set_of(field: PrimeField, xs: &[u64]) -> Result<EvaluationSet> {
    EvaluationSet::new(field, elems(field, xs)?)
}

fn matrix_of(field: PrimeField, rows: &[Vec<u64>]) -> Result<Matrix> {
    for row in rows {
        elems(field, row)?;
    }
    Matrix::from_u64_rows(field, rows)
}

impl BuiltCode {
    /// Builds from parameters, searching for a field when none is given.
    pub fn build(kind: CodeKind, zeta: usize, k: usize, r: Option<usize>, l_i: usize, l_f: usize, field: Option<u64>) -> Result<Self> {
        match kind {
            CodeKind::Mds => {
                let field = match field {
                    Some(p) => PrimeField::new(p)?,
                    None => find_mds_field(zeta, k, l_i)?,
                };
                Ok(BuiltCode::Mds(plan_mds(zeta, k, l_i, l_f, field)?))
            }
            CodeKind::Lrc => {
                let r = r.ok_or_else(|| CodeError::Parameter("--r is required for LRCs".into()))?;
                let field = match field {
                    Some(p) => PrimeField::new(p)?,
                    None => find_lrc_field(zeta, k, r, l_i)?,
                };
                let layout = build_lrc_sets(zeta, k, r, l_i, l_f, field)?;
                Ok(BuiltCode::Lrc(Box::new(build_lrc_convertible(layout)?)))
            }
        }
    }

    pub fn kind(&self) -> CodeKind {
        match self {
            BuiltCode::Mds(_) => CodeKind::Mds,
            BuiltCode::Lrc(_) => CodeKind::Lrc,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.initial_code().field()
    }

    pub fn zeta(&self) -> usize {
        match self {
            BuiltCode::Mds(MdsPlan::Optimal(c)) => c.layout().zeta,
            BuiltCode::Mds(MdsPlan::DefaultReencode(d)) => d.zeta,
            BuiltCode::Lrc(c) => c.layout().zeta,
        }
    }

    pub fn locality(&self) -> Option<usize> {
        match self {
            BuiltCode::Lrc(c) => Some(c.layout().r),
            BuiltCode::Mds(_) => None,
        }
    }

    pub fn initial_code(&self) -> &dyn LinearCode {
        match self {
            BuiltCode::Mds(p) => p.initial(),
            BuiltCode::Lrc(c) => c.initial(),
        }
    }

    pub fn final_code(&self) -> &dyn LinearCode {
        match self {
            BuiltCode::Mds(p) => p.final_code(),
            BuiltCode::Lrc(c) => c.final_code(),
        }
    }

    pub fn encode_initial(&self, message: &[FieldElem]) -> Result<Codeword> {
        self.initial_code().encode(message)
    }

    pub fn convert(&self, initials: &[Codeword]) -> Result<(Codeword, ConversionTrace)> {
        match self {
            BuiltCode::Mds(p) => p.convert(initials),
            BuiltCode::Lrc(c) => c.convert(initials),
        }
    }

    /// Final codeword computed directly from the messages; not defined for re-encoding.
    pub fn encode_from_scratch(&self, messages: &[Vec<FieldElem>]) -> Option<Result<Codeword>> {
        match self {
            BuiltCode::Mds(MdsPlan::Optimal(c)) => Some(c.encode_from_scratch(messages)),
            BuiltCode::Mds(MdsPlan::DefaultReencode(_)) => None,
            BuiltCode::Lrc(c) => Some(c.encode_from_scratch(messages)),
        }
    }

    /// Interpolation-consistency membership test for the final code.
    pub fn check_final_membership(&self, word: &Codeword) -> Result<()> {
        match self {
            BuiltCode::Mds(p) => p.final_code().check_membership(word),
            BuiltCode::Lrc(c) => c.final_code().check_membership(word),
        }
    }

    pub fn decode_sources(&self, word: &Codeword) -> Result<Vec<Vec<FieldElem>>> {
        match self {
            BuiltCode::Mds(p) => p.decode_sources(word),
            BuiltCode::Lrc(c) => c.decode_sources(word),
        }
    }

    /// Lower bounds the conversion should meet.
    pub fn bounds(&self) -> Result<AccessBounds> {
        let (n_i, k_i) = (self.initial_code().length(), self.initial_code().dimension());
        let n_f = self.final_code().length();
        let zeta = self.zeta();
        match self {
            BuiltCode::Mds(_) => mds_access_bounds(n_i, k_i, n_f, zeta),
            BuiltCode::Lrc(c) => {
                let r = c.layout().r;
                let (d, _) = singleton_lrc(n_f, zeta * k_i, r)?;
                lrc_access_bounds(n_i, k_i, n_f, zeta, r, d.max(1) as usize)
            }
        }
    }

    pub fn condition_failures(&self) -> Vec<String> {
        match self {
            BuiltCode::Mds(MdsPlan::Optimal(c)) => c.condition_failures().iter().map(|f| f.to_string()).collect(),
            BuiltCode::Mds(MdsPlan::DefaultReencode(_)) => Vec::new(),
            BuiltCode::Lrc(c) => c.condition_failures().iter().map(|f| f.to_string()).collect(),
        }
    }

    pub fn to_spec(&self) -> CodeSpecFile {
        let field = self.field();
        match self {
            BuiltCode::Mds(MdsPlan::Optimal(c)) => {
                let l = c.layout();
                CodeSpecFile {
                    schema_version: SCHEMA_VERSION,
                    kind: CodeKind::Mds,
                    plan: Plan::Optimal,
                    modulus: field.modulus(),
                    zeta: l.zeta,
                    k: l.k,
                    r: None,
                    l_i: l.l_i,
                    l_f: l.l_f,
                    beta: None,
                    alpha: l.alpha.map(FieldElem::value),
                    subgroup: l.subgroup.map(|(o, g)| (o, g.value())),
                    zeta0: None,
                    b_origin: Vec::new(),
                    sets: SpecSets {
                        a: l.a_sets.iter().map(|s| vec![s.values()]).collect(),
                        c: vec![l.c.values()],
                        b: vec![l.b.values()],
                    },
                    initial_multipliers: vals(c.initial().multipliers()),
                    final_multipliers: vals(c.final_code().multipliers()),
                    matrices: c.matrices().iter().map(Matrix::to_u64_rows).collect(),
                    thetas: c.thetas().iter().map(|t| vals(t)).collect(),
                }
            }
            BuiltCode::Mds(MdsPlan::DefaultReencode(d)) => CodeSpecFile {
                schema_version: SCHEMA_VERSION,
                kind: CodeKind::Mds,
                plan: Plan::DefaultReencode,
                modulus: field.modulus(),
                zeta: d.zeta,
                k: d.k,
                r: None,
                l_i: d.l_i,
                l_f: d.l_f,
                beta: None,
                alpha: None,
                subgroup: None,
                zeta0: None,
                b_origin: Vec::new(),
                sets: SpecSets {
                    a: vec![vec![d.initial().points().values()]],
                    c: vec![d.final_code().points().values()],
                    b: Vec::new(),
                },
                initial_multipliers: vals(d.initial().multipliers()),
                final_multipliers: vals(d.final_code().multipliers()),
                matrices: Vec::new(),
                thetas: Vec::new(),
            },
            BuiltCode::Lrc(c) => {
                let l = c.layout();
                let groups = |gs: &[EvaluationSet]| gs.iter().map(EvaluationSet::values).collect::<Vec<_>>();
                CodeSpecFile {
                    schema_version: SCHEMA_VERSION,
                    kind: CodeKind::Lrc,
                    plan: Plan::Optimal,
                    modulus: field.modulus(),
                    zeta: l.zeta,
                    k: l.k,
                    r: Some(l.r),
                    l_i: l.l_i,
                    l_f: l.l_f,
                    beta: l.beta.map(FieldElem::value),
                    alpha: l.alpha.map(FieldElem::value),
                    subgroup: None,
                    zeta0: l.zeta0,
                    b_origin: l.b_origin.clone(),
                    sets: SpecSets {
                        a: l.a_groups.iter().map(|blk| groups(blk)).collect(),
                        c: groups(&l.c_groups),
                        b: groups(&l.b_groups),
                    },
                    initial_multipliers: vals(c.initial().multipliers()),
                    final_multipliers: vals(c.final_code().multipliers()),
                    matrices: c.matrices().iter().map(Matrix::to_u64_rows).collect(),
                    thetas: c.thetas().iter().map(|t| vals(t)).collect(),
                }
            }
        }
    }

    /// Rebuilds a code from a spec file without re-deriving its matrices.
    pub fn from_spec(spec: &CodeSpecFile) -> Result<Self> {
        let field = PrimeField::new(spec.modulus)?;
        let opt = |x: Option<u64>| -> Result<Option<FieldElem>> {
            x.map(|v| elems(field, &[v]).map(|e| e[0])).transpose()
        };
        let matrices = spec
            .matrices
            .iter()
            .map(|m| matrix_of(field, m))
            .collect::<Result<Vec<_>>>()?;
        let thetas = spec.thetas.iter().map(|t| elems(field, t)).collect::<Result<Vec<_>>>()?;
        let built = match (spec.kind, spec.plan) {
            (CodeKind::Mds, Plan::DefaultReencode) => BuiltCode::Mds(MdsPlan::DefaultReencode(DefaultReencode::new(
                spec.zeta, spec.k, spec.l_i, spec.l_f, field,
            )?)),
            (CodeKind::Mds, Plan::Optimal) => {
                let single = |blk: &[Vec<u64>]| -> Result<EvaluationSet> {
                    match blk {
                        [s] => set_of(field, s),
                        [] => Ok(EvaluationSet::empty(field)),
                        _ => Err(CodeError::Parse("MDS blocks hold exactly one set".into())),
                    }
                };
                let a = spec.sets.a.iter().map(|blk| single(blk)).collect::<Result<Vec<_>>>()?;
                let mut layout = MdsLayout::from_sets(field, a, single(&spec.sets.c)?, single(&spec.sets.b)?)?;
                layout.alpha = opt(spec.alpha)?;
                layout.subgroup = match spec.subgroup {
                    Some((o, g)) => Some((o, opt(Some(g))?.expect("present"))),
                    None => None,
                };
                BuiltCode::Mds(MdsPlan::Optimal(Box::new(MdsConvertibleCode::from_parts(layout, matrices, thetas)?)))
            }
            (CodeKind::Lrc, _) => {
                let r = spec.r.ok_or_else(|| CodeError::Parse("LRC spec without r".into()))?;
                let groups = |gs: &[Vec<u64>]| gs.iter().map(|g| set_of(field, g)).collect::<Result<Vec<_>>>();
                let a = spec.sets.a.iter().map(|blk| groups(blk)).collect::<Result<Vec<_>>>()?;
                let basis = XGBasis::power(field, r, spec.k)?;
                let mut layout = LrcLayout::from_groups(basis, a, groups(&spec.sets.c)?, groups(&spec.sets.b)?)?;
                layout.beta = opt(spec.beta)?;
                layout.alpha = opt(spec.alpha)?;
                layout.zeta0 = spec.zeta0;
                layout.b_origin = spec.b_origin.clone();
                BuiltCode::Lrc(Box::new(LrcConvertibleCode::from_parts(layout, matrices, thetas)?))
            }
        };
        Ok(built)
    }

    /// Initial coordinates a conversion is expected to read, per source.
    pub fn expected_reads(&self) -> Option<Vec<usize>> {
        match self {
            BuiltCode::Mds(MdsPlan::Optimal(c)) => Some(declared_accessed(c.layout()).into_iter().collect()),
            BuiltCode::Mds(MdsPlan::DefaultReencode(d)) => Some((0..d.k).collect()),
            BuiltCode::Lrc(c) => Some(c.layout().declared_accessed().into_iter().collect()),
        }
    }
}

/// `zeta` messages from splitmix64: each symbol is the next output reduced mod `p`.
pub fn seeded_messages(seed: u64, zeta: usize, dim: usize, field: PrimeField) -> Vec<Vec<FieldElem>> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..zeta)
        .map(|_| (0..dim).map(|_| field.elem(rng.next_u64() % field.modulus())).collect())
        .collect()
}

/// Parses `1,2,3;4,5,6` into one vector per codeword.
pub fn parse_vectors(text: &str, field: PrimeField) -> Result<Vec<Vec<FieldElem>>> {
    text.split(';')
        .map(|part| {
            let nums = part
                .split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|e| CodeError::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<u64>>>()?;
            elems(field, &nums)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::Skip,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "SKIP",
            };
            let _ = writeln!(out, "{tag} {:<22} {}", c.name, c.detail);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

/// One conversion of seeded messages, checked against the oracles.
pub fn conversion_trial(code: &BuiltCode, seed: u64) -> Result<(ConversionTrace, Vec<String>)> {
    let field = code.field();
    let msgs = seeded_messages(seed, code.zeta(), code.initial_code().dimension(), field);
    let words = msgs.iter().map(|m| code.encode_initial(m)).collect::<Result<Vec<_>>>()?;
    let (d, trace) = code.convert(&words)?;
    let mut problems = Vec::new();
    if let Some(direct) = code.encode_from_scratch(&msgs) {
        if direct? != d {
            problems.push(format!("seed {seed}: converted word differs from direct encoding"));
        }
    }
    match code.decode_sources(&d) {
        Ok(back) if back == msgs => {}
        Ok(_) => problems.push(format!("seed {seed}: decoded messages differ")),
        Err(e) => problems.push(format!("seed {seed}: decoding failed: {e}")),
    }
    if let Err(e) = code.check_final_membership(&d) {
        problems.push(format!("seed {seed}: converted word is outside the final code: {e}"));
    }
    Ok((trace, problems))
}

pub fn verify(code: &BuiltCode, spec: Option<&CodeSpecFile>, level: Level, seed: u64) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let failures = code.condition_failures();
    rep.push(
        "conditions",
        failures.is_empty(),
        failures.first().cloned().unwrap_or_else(|| "all hold".into()),
    );
    if let Some(spec) = spec {
        let again = code.to_spec();
        rep.push(
            "multipliers",
            again.initial_multipliers == spec.initial_multipliers && again.final_multipliers == spec.final_multipliers,
            "stored multipliers match the recomputed ones",
        );
    }
    let (ini, fin) = (code.initial_code(), code.final_code());
    let zeta = code.zeta();
    let ri = ini.generator_matrix().rank();
    let rf = fin.generator_matrix().rank();
    rep.push("initial_rank", ri == ini.dimension(), format!("rank {ri}, dimension {}", ini.dimension()));
    rep.push(
        "final_rank",
        rf == zeta * ini.dimension(),
        format!("rank {rf}, expected {}", zeta * ini.dimension()),
    );
    match code {
        BuiltCode::Lrc(c) => {
            let loc = c.final_code().check_locality();
            rep.push("final_locality", loc.passed(), format!("{} coordinates checked", loc.checked));
            let loc = c.initial().check_locality();
            rep.push("initial_locality", loc.passed(), format!("{} coordinates checked", loc.checked));
            let l = c.layout();
            let ok = l.a_groups.iter().all(|blk| {
                appendix_checks(blk, l.g(), seed, 20).map(|r| r.passed()).unwrap_or(false)
            });
            rep.push("basis_identities", ok, format!("{} blocks, 20 sample points each", l.zeta));
        }
        BuiltCode::Mds(_) => {
            if fin.length() <= 12 {
                let bad = exhaustive_mds_check(fin);
                rep.push(
                    "final_mds",
                    bad.is_none(),
                    bad.map(|s| format!("singular subset {s:?}")).unwrap_or_else(|| "every k-subset invertible".into()),
                );
            } else {
                rep.skip("final_mds", format!("n_F = {} above 12", fin.length()));
            }
        }
    }
    match (conversion_trial(code, seed), code.bounds()) {
        (Ok((trace, problems)), Ok(b)) => {
            let measured = (trace.read_cost(), trace.write_cost());
            rep.push(
                "access_costs",
                measured == (b.read_lower, b.write_lower),
                format!("{} vs bounds read>={} write>={}", trace.cost_line(), b.read_lower, b.write_lower),
            );
            if let Some(expected) = code.expected_reads() {
                let ok = trace.accessed.iter().all(|s| s.iter().copied().eq(expected.iter().copied()));
                rep.push("read_set", ok, format!("expected coordinates {expected:?} per source"));
            }
            rep.push("conversion", problems.is_empty(), problems.first().cloned().unwrap_or_else(|| "oracles agree".into()));
        }
        (Err(e), _) | (_, Err(e)) => rep.push("conversion", false, e.to_string()),
    }
    if level == Level::Full {
        let expected = match code {
            BuiltCode::Mds(_) => Ok((ini.length() - ini.dimension() + 1) as i64),
            BuiltCode::Lrc(c) => singleton_lrc(ini.length(), ini.dimension(), c.layout().r).map(|x| x.0),
        };
        for (name, which, want) in [("initial_distance", ini, expected.ok()), ("final_distance", fin, None)] {
            let want = want.or_else(|| match code {
                BuiltCode::Mds(_) => Some((fin.length() - fin.dimension() + 1) as i64),
                BuiltCode::Lrc(c) => singleton_lrc(fin.length(), fin.dimension(), c.layout().r).ok().map(|x| x.0),
            });
            match min_distance_bruteforce(which, DEFAULT_BUDGET) {
                Ok(d) => {
                    let shown = want.map_or_else(|| "unknown".to_string(), |w| w.to_string());
                    rep.push(name, Some(d as i64) == want, format!("distance {d}, expected {shown}"))
                }
                Err(e) => rep.skip(name, e.to_string()),
            }
        }
        let mut bad = Vec::new();
        for t in 0..100u64 {
            match conversion_trial(code, seed.wrapping_add(t)) {
                Ok((_, p)) => bad.extend(p),
                Err(e) => bad.push(e.to_string()),
            }
        }
        rep.push(
            "conversion_trials",
            bad.is_empty(),
            bad.first().cloned().unwrap_or_else(|| "100 seeded trials agree".into()),
        );
    }
    rep
}

/// Collects labelled values and fails on the first mismatch.
struct Golden {
    lines: Vec<String>,
}

impl Golden {
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) -> Result<()> {
        if got != want {
            return Err(CodeError::ConditionViolation(format!("{label}: got {got:?}, expected {want:?}")));
        }
        self.lines.push(format!("{label}: {got:?}"));
        Ok(())
    }

    fn note(&mut self, line: String) {
        self.lines.push(line);
    }
}

/// Rebuilds the worked MDS example over F_19 and checks every value it lists.
pub fn repro_example1() -> Result<Vec<String>> {
    let f = PrimeField::new(19)?;
    let mut g = Golden { lines: Vec::new() };
    let a = EvaluationSet::from_u64(f, &[1, 8, 7, 18])?;
    let b = EvaluationSet::from_u64(f, &[2, 16, 14, 17])?;
    let c = EvaluationSet::from_u64(f, &[4, 9])?;
    let (theta, m) = build_m_matrix(&a, &b, &c)?;
    g.check("theta", vals(&theta), vec![11, 3, 3, 6])?;
    g.check(
        "M",
        m.to_u64_rows(),
        vec![vec![0, 16, 14, 7], vec![1, 17, 17, 17], vec![16, 16, 10, 7], vec![1, 6, 17, 15]],
    )?;
    for (i, (&ai, &bi)) in a.points().iter().zip(b.points()).enumerate() {
        let lhs = m.mul_vec(&power_vector(bi, 4))?;
        let rhs: Vec<FieldElem> = power_vector(ai, 4).iter().map(|&x| x * theta[i]).collect();
        g.check(&format!("M b_{} = theta_{} a_{}", i + 1, i + 1, i + 1), vals(&lhs), vals(&rhs))?;
    }
    g.check("M c_1", vals(&m.mul_vec(&power_vector(c.points()[0], 4))?), vec![14, 4, 4, 3])?;
    g.check("M c_2", vals(&m.mul_vec(&power_vector(c.points()[1], 4))?), vec![16, 16, 12, 17])?;
    let layout = MdsLayout::from_sets(f, vec![a.clone(), b.clone()], c.clone(), EvaluationSet::empty(f))?;
    let code = crate::mds_convert::build_mds_convertible(layout)?;
    g.check("M c_1 in c-basis", code.eta(1, 0).map(vals).unwrap_or_default(), vec![13, 1])?;
    g.check("M c_2 in c-basis", code.eta(1, 1).map(vals).unwrap_or_default(), vec![18, 17])?;
    let built = build_mds_sets(2, 4, 2, 2, f)?;
    g.check(
        "builder sets A_1 | A_2 | C",
        (built.a_sets[0].values(), built.a_sets[1].values(), built.c.values()),
        (a.values(), b.values(), c.values()),
    )?;
    let msgs = seeded_messages(1, 2, 4, f);
    let words = msgs.iter().map(|x| code.initial().encode(x)).collect::<Result<Vec<_>>>()?;
    let (d, trace) = code.convert(&words)?;
    g.check("cost", trace.cost_line(), "read=4 write=2 total=6".to_string())?;
    g.check("d|A = c_1|A", d.values()[..4].to_vec(), words[0].values()[..4].to_vec())?;
    g.check("d|B = c_2|A", d.values()[4..8].to_vec(), words[1].values()[..4].to_vec())?;
    g.note(format!("d = {:?}", d.values()));
    Ok(g.lines)
}

/// Rebuilds the worked LRC example over F_19 and checks every value it lists.
pub fn repro_example2() -> Result<Vec<String>> {
    let f = PrimeField::new(19)?;
    let mut g = Golden { lines: Vec::new() };
    let s = |xs: &[u64]| EvaluationSet::from_u64(f, xs);
    let a = vec![s(&[1, 7, 11])?, s(&[8, 18, 12])?];
    let b = vec![s(&[2, 14, 3])?, s(&[16, 17, 5])?];
    let c = vec![s(&[4, 9, 6])?];
    let layout = LrcLayout::from_groups(XGBasis::power(f, 2, 2)?, vec![a.clone(), b.clone()], c.clone(), Vec::new())?;
    g.check("group constants", vals(&layout.group_constants()), vec![1, 18, 8, 11, 7])?;
    let code = build_lrc_convertible(layout)?;
    g.check("theta", vals(&code.thetas()[1]), vec![5, 15])?;
    let m = &code.matrices()[1];
    g.check(
        "M",
        m.to_u64_rows(),
        vec![vec![10, 0, 16, 0], vec![0, 5, 0, 8], vec![14, 0, 6, 0], vec![0, 7, 0, 3]],
    )?;
    let basis = code.layout().basis.clone();
    for i in 0..2 {
        for j in 0..3 {
            let lhs = m.mul_vec(&basis.xg_vector(b[i].points()[j]))?;
            let rhs: Vec<FieldElem> =
                basis.xg_vector(a[i].points()[j]).iter().map(|&x| x * code.thetas()[1][i]).collect();
            g.check(&format!("M b_{}{} = theta_{} a_{}{}", i + 1, j + 1, i + 1, i + 1, j + 1), vals(&lhs), vals(&rhs))?;
        }
    }
    g.check("M c_1", vals(&m.mul_vec(&basis.xg_vector(c[0].points()[0]))?), vec![8, 16, 18, 17])?;
    g.check("M c_2", vals(&m.mul_vec(&basis.xg_vector(c[0].points()[1]))?), vec![8, 17, 18, 5])?;
    g.check("M c_1 in c-basis", code.eta(1, 0, 0).map(vals).unwrap_or_default(), vec![15, 12])?;
    g.check("M c_2 in c-basis", code.eta(1, 0, 1).map(vals).unwrap_or_default(), vec![11, 16])?;
    g.check(
        "lengths",
        (code.initial().length(), code.final_code().length()),
        (9, 15),
    )?;
    let built = build_lrc_sets(2, 2, 2, 1, 1, f)?;
    g.check(
        "builder groups",
        built.a_groups.iter().flatten().chain(&built.c_groups).map(EvaluationSet::values).collect::<Vec<_>>(),
        a.iter().chain(&b).chain(&c).map(EvaluationSet::values).collect::<Vec<_>>(),
    )?;
    let msgs = seeded_messages(2, 2, 4, f);
    let words = msgs.iter().map(|x| code.initial().encode(x)).collect::<Result<Vec<_>>>()?;
    let (d, trace) = code.convert(&words)?;
    g.check("cost", trace.cost_line(), "read=4 write=3 total=7".to_string())?;
    g.check("c_3 never read", trace.accessed.iter().all(|r| !r.contains(&8)), true)?;
    g.check(
        "c_3 source",
        trace.new_symbols.get(&14).map(|s| s.starts_with("local repair")),
        Some(true),
    )?;
    g.check("d|A = c_1|A", d.values()[..6].to_vec(), words[0].values()[..6].to_vec())?;
    g.check("d|B = c_2|A", d.values()[6..12].to_vec(), words[1].values()[..6].to_vec())?;
    let weights: Vec<u64> = (0..2)
        .map(|s| annihilator_eval(&code.layout().g_without(s), f.elem(7)).value())
        .collect();
    g.check("C-group weights", weights, vec![4, 10])?;
    g.note(format!("d = {:?}", d.values()));
    Ok(g.lines)
}

#[derive(Parser, Debug)]
#[command(name = "convcode", version, about = "Build, convert and verify access-optimal convertible codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a convertible code pair and write its spec file.
    Build {
        #[arg(long, value_enum)]
        kind: CodeKind,
        #[arg(long)]
        zeta: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        li: usize,
        #[arg(long)]
        lf: usize,
        /// Field modulus; searched for when omitted.
        #[arg(long)]
        field: Option<u64>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode messages, convert them and report symbol provenance and costs.
    Convert {
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Explicit messages, `1,2,3;4,5,6`.
        #[arg(long, conflicts_with = "codewords")]
        messages: Option<String>,
        /// Explicit initial codewords, same format.
        #[arg(long)]
        codewords: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check the invariants of a spec file.
    Verify {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print access-cost lower bounds; pass `--r` and `--d` for a final LRC.
    Bounds {
        #[arg(long)]
        ni: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nf: usize,
        #[arg(long)]
        zeta: usize,
        #[arg(long, requires = "d")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        d: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the F_19 MDS example.
    ReproExample1,
    /// Reproduce the F_19 LRC example.
    ReproExample2,
}

fn io_err(e: std::io::Error) -> CodeError {
    CodeError::Io(e.to_string())
}

fn report_convert(
    code: &BuiltCode,
    messages: Option<&[Vec<FieldElem>]>,
    words: &[Codeword],
    json: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let (d, trace) = code.convert(words)?;
    let records: Vec<SymbolRecord> = trace.records(&words[0].points(), &d.points());
    if json {
        let doc = serde_json::json!({
            "kind": code.kind(),
            "modulus": code.field().modulus(),
            "messages": messages.map(|m| m.iter().map(|x| vals(x)).collect::<Vec<_>>()),
            "initial": words.iter().map(Codeword::values).collect::<Vec<_>>(),
            "final": d.values(),
            "records": records,
            "read": trace.read_cost(),
            "write": trace.write_cost(),
            "total": trace.total_cost(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("report serializes")).map_err(io_err)?;
        return Ok(());
    }
    let mut text = String::new();
    if let Some(ms) = messages {
        for (i, m) in ms.iter().enumerate() {
            let _ = writeln!(text, "m{} = {:?}", i + 1, vals(m));
        }
    }
    for (i, w) in words.iter().enumerate() {
        let _ = writeln!(text, "c{} = {:?}", i + 1, w.values());
    }
    let _ = writeln!(text, "{:<4} {:>5} {:>7}  {:<10} source", "word", "coord", "point", "role");
    for rec in &records {
        let _ = writeln!(
            text,
            "{:<4} {:>5} {:>7}  {:<10} {}",
            rec.codeword,
            rec.coord,
            rec.point,
            rec.role.as_str(),
            rec.source
        );
    }
    let _ = writeln!(text, "d = {:?}", d.values());
    let _ = writeln!(text, "{}", trace.cost_line());
    out.write_all(text.as_bytes()).map_err(io_err)
}

/// Runs one parsed command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Build { kind, zeta, k, r, li, lf, field, out: path } => {
            let code = BuiltCode::build(kind, zeta, k, r, li, lf, field)?;
            let spec = code.to_spec();
            let rep = verify(&code, Some(&spec), Level::Quick, 0);
            if !rep.passed() {
                out.write_all(rep.render().as_bytes()).map_err(io_err)?;
                return Err(CodeError::ConditionViolation("built code failed verification".into()));
            }
            match path {
                Some(p) => {
                    spec.save(&p)?;
                    writeln!(out, "wrote {} (F_{}, {:?})", p.display(), spec.modulus, spec.plan).map_err(io_err)
                }
                None => out.write_all(spec.to_json().as_bytes()).map_err(io_err),
            }
        }
        Command::Convert { spec, seed, messages, codewords, json } => {
            let code = BuiltCode::from_spec(&CodeSpecFile::load(&spec)?)?;
            let field = code.field();
            let dim = code.initial_code().dimension();
            if let Some(text) = codewords {
                let raw = parse_vectors(&text, field)?;
                if raw.len() != code.zeta() {
                    return Err(CodeError::Dimension(format!("{} codewords for zeta = {}", raw.len(), code.zeta())));
                }
                let coords = code.initial_code().coordinates();
                let words = raw
                    .into_iter()
                    .map(|w| Codeword::new(w, coords.clone()))
                    .collect::<Result<Vec<_>>>()?;
                return report_convert(&code, None, &words, json, out);
            }
            let msgs = match messages {
                Some(text) => parse_vectors(&text, field)?,
                None => seeded_messages(seed, code.zeta(), dim, field),
            };
            if msgs.len() != code.zeta() || msgs.iter().any(|m| m.len() != dim) {
                return Err(CodeError::Dimension(format!("need {} messages of length {dim}", code.zeta())));
            }
            let words = msgs.iter().map(|m| code.encode_initial(m)).collect::<Result<Vec<_>>>()?;
            report_convert(&code, Some(&msgs), &words, json, out)
        }
        Command::Verify { spec, level, seed } => {
            let file = CodeSpecFile::load(&spec)?;
            let code = BuiltCode::from_spec(&file)?;
            let rep = verify(&code, Some(&file), level, seed);
            out.write_all(rep.render().as_bytes()).map_err(io_err)?;
            if rep.passed() {
                Ok(())
            } else {
                let first = rep.checks.iter().find(|c| c.status == CheckStatus::Fail).expect("a failure");
                Err(CodeError::ConditionViolation(format!("{}: {}", first.name, first.detail)))
            }
        }
        Command::Bounds { ni, k, nf, zeta, r, d, json } => {
            let b = match (r, d) {
                (Some(r), Some(d)) => lrc_access_bounds(ni, k, nf, zeta, r, d)?,
                _ => mds_access_bounds(ni, k, nf, zeta)?,
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&b).expect("bounds serialize")).map_err(io_err)
            } else {
                writeln!(out, "read>={} write>={} total>={} ({})", b.read_lower, b.write_lower, b.total(), b.regime_note)
                    .map_err(io_err)
            }
        }
        Command::ReproExample1 | Command::ReproExample2 => {
            let lines = if matches!(cli.command, Command::ReproExample1) { repro_example1()? } else { repro_example2()? };
            for line in lines {
                writeln!(out, "{line}").map_err(io_err)?;
            }
            Ok(())
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match run(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let doc = serde_json::json!({ "error": e.code(), "message": e.to_string() });
            let _ = writeln!(err, "{doc}");
            e.exit_code()
        }
    }
}
