//! MDS convertible codes in the merge regime built from multiplicative cosets.
//!
//! Coordinates of the initial code are ordered `A_1 | C | B`; those of the
//! final code `A_1 | A_2 | ... | A_zeta | C`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::access::{ConversionTrace, SymbolSource, Tracked};
use crate::codes::{Codeword, GrsCode, LinearCode};
use crate::error::{CodeError, Result};
use crate::field::{find_modulus, FieldElem, PrimeField};
use crate::matrix::{in_span, Matrix};
use crate::poly::{
    annihilator, annihilator_eval, annihilator_eval_excluding, interpolate, power_vector,
    vandermonde, EvaluationSet, Polynomial,
};

/// Evaluation sets of an MDS convertible code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsLayout {
    pub field: PrimeField,
    pub zeta: usize,
    pub k: usize,
    pub l_i: usize,
    pub l_f: usize,
    pub a_sets: Vec<EvaluationSet>,
    pub c: EvaluationSet,
    pub b: EvaluationSet,
    /// Coset representative used to shift `A_1`, when known.
    pub alpha: Option<FieldElem>,
    /// Order and generator of the subgroup containing `A_1`, when known.
    pub subgroup: Option<(u64, FieldElem)>,
}

impl MdsLayout {
    /// Layout from explicit sets; checks sizes and disjointness only.
    pub fn from_sets(
        field: PrimeField,
        a_sets: Vec<EvaluationSet>,
        c: EvaluationSet,
        b: EvaluationSet,
    ) -> Result<Self> {
        let zeta = a_sets.len();
        if zeta < 2 {
            return Err(CodeError::Parameter(format!("zeta = {zeta}, need at least 2")));
        }
        let k = a_sets[0].len();
        if k == 0 || a_sets.iter().any(|a| a.len() != k) {
            return Err(CodeError::Parameter("A-sets must be nonempty and of equal size".into()));
        }
        let l_f = c.len();
        let l_i = l_f + b.len();
        if l_f > k.min(l_i) {
            return Err(CodeError::Parameter(format!(
                "l_F = {l_f} exceeds min(k, l_I) = {}",
                k.min(l_i)
            )));
        }
        let mut all: Vec<&EvaluationSet> = a_sets.iter().collect();
        all.push(&c);
        EvaluationSet::union_all(field, all).map_err(|e| CodeError::Layout(e.to_string()))?;
        let mut initial = vec![&a_sets[0], &c, &b];
        EvaluationSet::union_all(field, initial.drain(..))
            .map_err(|e| CodeError::Layout(e.to_string()))?;
        Ok(MdsLayout {
            field,
            zeta,
            k,
            l_i,
            l_f,
            a_sets,
            c,
            b,
            alpha: None,
            subgroup: None,
        })
    }

    pub fn initial_length(&self) -> usize {
        self.k + self.l_i
    }

    pub fn final_length(&self) -> usize {
        self.zeta * self.k + self.l_f
    }

    /// `A = A_1 u ... u A_zeta`.
    pub fn a_union(&self) -> Vec<FieldElem> {
        self.a_sets.iter().flat_map(|a| a.points().iter().copied()).collect()
    }

    /// Points of `A \ A_i`.
    pub fn a_without(&self, i: usize) -> Vec<FieldElem> {
        self.a_sets
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != i)
            .flat_map(|(_, a)| a.points().iter().copied())
            .collect()
    }

    pub fn initial_points(&self) -> Result<EvaluationSet> {
        self.a_sets[0].union(&self.c)?.union(&self.b)
    }

    pub fn final_points(&self) -> Result<EvaluationSet> {
        let mut sets: Vec<&EvaluationSet> = self.a_sets.iter().collect();
        sets.push(&self.c);
        EvaluationSet::union_all(self.field, sets)
    }
}

/// Smallest subgroup order usable for the layout, with the coset count check.
fn layout_subgroup(field: PrimeField, zeta: usize, k: usize, l_i: usize) -> Result<u64> {
    let want = k.max(l_i) as u64;
    let order = field.smallest_subgroup_order_at_least(want).ok_or_else(|| {
        CodeError::Parameter(format!("F_{} has no subgroup of order >= {want}", field.modulus()))
    })?;
    let cosets = (field.modulus() - 1) / order;
    if cosets < zeta as u64 + 1 {
        return Err(CodeError::Parameter(format!(
            "F_{} has {cosets} cosets of the order-{order} subgroup, need {}",
            field.modulus(),
            zeta + 1
        )));
    }
    Ok(order)
}

fn check_merge_params(zeta: usize, k: usize, l_i: usize, l_f: usize) -> Result<()> {
    if zeta < 2 {
        return Err(CodeError::Parameter(format!("zeta = {zeta}, need at least 2")));
    }
    if k == 0 || l_i == 0 {
        return Err(CodeError::Parameter("k and l_I must be positive".into()));
    }
    if l_f > k.min(l_i) {
        return Err(CodeError::Parameter(format!(
            "l_F = {l_f} exceeds min(k, l_I) = {}",
            k.min(l_i)
        )));
    }
    Ok(())
}

/// Builds `A_i = alpha^{i-1} A_1`, `C` and `B` inside cosets of a subgroup.
///
/// `A_1` holds the first `k` powers of the subgroup generator, `C` the `l_F`
/// smallest residues of `alpha^zeta A_1` and `B` the `l_I - l_F` smallest
/// residues of `alpha^zeta G \ C`.
pub fn build_mds_sets(
    zeta: usize,
    k: usize,
    l_i: usize,
    l_f: usize,
    field: PrimeField,
) -> Result<MdsLayout> {
    check_merge_params(zeta, k, l_i, l_f)?;
    let order = layout_subgroup(field, zeta, k, l_i)?;
    let gen = field.subgroup_generator(order)?;
    let alpha = field.primitive_root();
    let group: Vec<FieldElem> = (0..order).map(|e| gen.pow(e)).collect();
    let a1: Vec<FieldElem> = group[..k].to_vec();
    let a_sets = (0..zeta)
        .map(|i| {
            let shift = alpha.pow(i as u64);
            EvaluationSet::new(field, a1.iter().map(|&a| a * shift).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    let top = alpha.pow(zeta as u64);
    let mut c_pts: Vec<FieldElem> = a1.iter().map(|&a| a * top).collect();
    c_pts.sort();
    c_pts.truncate(l_f);
    let mut b_pts: Vec<FieldElem> = group
        .iter()
        .map(|&g| g * top)
        .filter(|x| !c_pts.contains(x))
        .collect();
    b_pts.sort();
    b_pts.truncate(l_i - l_f);
    let c = EvaluationSet::new(field, c_pts)?;
    let b = EvaluationSet::new(field, b_pts)?;
    let mut layout = MdsLayout::from_sets(field, a_sets, c, b)?;
    layout.alpha = Some(alpha);
    layout.subgroup = Some((order, gen));
    Ok(layout)
}

/// Smallest prime for which [`build_mds_sets`] succeeds.
pub fn find_mds_field(zeta: usize, k: usize, l_i: usize) -> Result<PrimeField> {
    let m = k.max(l_i) as u64;
    find_modulus(m, (zeta as u64 + 1) * m + 1)
}

/// A failed condition with the index of the offending vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    pub condition: u8,
    /// 1-based block index `s` (or `i` for MDS), then 1-based indices.
    pub witness: Vec<usize>,
}

impl fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.witness.iter().map(usize::to_string).collect();
        write!(f, "condition {} fails at ({})", self.condition, idx.join(","))
    }
}

/// `theta_j = h_{B u C \ b_j}(b_j) / h_{A u C \ a_j}(a_j)`.
pub fn mds_thetas(a: &EvaluationSet, b: &EvaluationSet, c: &EvaluationSet) -> Result<Vec<FieldElem>> {
    let ac: Vec<FieldElem> = a.points().iter().chain(c.points()).copied().collect();
    let bc: Vec<FieldElem> = b.points().iter().chain(c.points()).copied().collect();
    a.points()
        .iter()
        .zip(b.points())
        .map(|(&aj, &bj)| {
            let num = annihilator_eval_excluding(&bc, bj);
            let den = annihilator_eval_excluding(&ac, aj);
            if num.is_zero() || den.is_zero() {
                return Err(CodeError::Layout(format!("sets overlap at {aj} or {bj}")));
            }
            Ok(num / den)
        })
        .collect()
}

/// Checks `M b_j = theta_j a_j` and `M c_j in span{c}`; `block` labels witnesses.
pub fn mds_condition_failures(
    m: &Matrix,
    thetas: &[FieldElem],
    a: &EvaluationSet,
    b: &EvaluationSet,
    c: &EvaluationSet,
    block: usize,
) -> Vec<ConditionFailure> {
    let field = m.field();
    let k = m.rows();
    let mut out = Vec::new();
    for (j, ((&aj, &bj), &t)) in a.points().iter().zip(b.points()).zip(thetas).enumerate() {
        let lhs = m.mul_vec(&power_vector(bj, k)).unwrap();
        let rhs: Vec<FieldElem> = power_vector(aj, k).into_iter().map(|x| x * t).collect();
        if lhs != rhs {
            out.push(ConditionFailure {
                condition: 1,
                witness: vec![block, j + 1],
            });
        }
    }
    let cvecs: Vec<Vec<FieldElem>> = c.points().iter().map(|&x| power_vector(x, k)).collect();
    for (j, cv) in cvecs.iter().enumerate() {
        let img = m.mul_vec(cv).unwrap();
        if !matches!(in_span(field, &img, &cvecs), Ok(Some(_))) {
            out.push(ConditionFailure {
                condition: 2,
                witness: vec![block, j + 1],
            });
        }
    }
    out
}

/// `M = V(A) diag(theta) V(B)^{-1}`, so that `M (1, b_j, ...)^T = theta_j (1, a_j, ...)^T`.
pub fn build_m_matrix(
    a: &EvaluationSet,
    b: &EvaluationSet,
    c: &EvaluationSet,
) -> Result<(Vec<FieldElem>, Matrix)> {
    let field = a.field();
    let k = a.len();
    if b.len() != k || c.len() > k {
        return Err(CodeError::Parameter(format!(
            "|A| = {k}, |B| = {}, |C| = {}",
            b.len(),
            c.len()
        )));
    }
    let all: Vec<&EvaluationSet> = vec![a, b, c];
    EvaluationSet::union_all(field, all).map_err(|_| {
        CodeError::Parameter("A, B and C must be pairwise disjoint".into())
    })?;
    let thetas = mds_thetas(a, b, c)?;
    let m = vandermonde(a, k)
        .mul(&Matrix::diag(field, &thetas))?
        .mul(&vandermonde(b, k).inverse()?)?;
    if let Some(fail) = mds_condition_failures(&m, &thetas, a, b, c, 1).first() {
        return Err(CodeError::ConditionViolation(fail.to_string()));
    }
    Ok((thetas, m))
}

/// An MDS convertible code with its conversion data.
#[derive(Clone, Debug)]
pub struct MdsConvertibleCode {
    layout: MdsLayout,
    initial: GrsCode,
    final_code: GrsCode,
    m: Vec<Matrix>,
    thetas: Vec<Vec<FieldElem>>,
    /// `eta[i][j]`: coordinates of `M_i c_j` in the `c`-basis.
    eta: Vec<Vec<Option<Vec<FieldElem>>>>,
}

impl MdsConvertibleCode {
    /// Assembles a code from its parts without checking the conditions.
    pub fn from_parts(layout: MdsLayout, m: Vec<Matrix>, thetas: Vec<Vec<FieldElem>>) -> Result<Self> {
        let field = layout.field;
        let (zeta, k) = (layout.zeta, layout.k);
        if m.len() != zeta || thetas.len() != zeta {
            return Err(CodeError::Dimension(format!(
                "{} matrices and {} theta rows for zeta = {zeta}",
                m.len(),
                thetas.len()
            )));
        }
        if m.iter().any(|x| x.rows() != k || x.cols() != k) || thetas.iter().any(|t| t.len() != k) {
            return Err(CodeError::Dimension(format!("matrices must be {k}x{k}, theta rows of length {k}")));
        }
        if let Some((i, j)) = thetas
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|t| t.is_zero()).map(|j| (i, j)))
        {
            return Err(CodeError::ConditionViolation(format!(
                "theta at ({},{}) is zero",
                i + 1,
                j + 1
            )));
        }
        let initial = GrsCode::rs(layout.initial_points()?, k)?;
        let mut u = Vec::with_capacity(layout.final_length());
        for (i, a) in layout.a_sets.iter().enumerate() {
            let others = layout.a_without(i);
            for (j, &p) in a.points().iter().enumerate() {
                let h = annihilator_eval(&others, p);
                u.push((thetas[i][j] * h).inverse().ok_or_else(|| {
                    CodeError::Layout(format!("point {p} lies in another A-set"))
                })?);
            }
        }
        u.extend(std::iter::repeat(field.one()).take(layout.l_f));
        let final_code = GrsCode::new(layout.final_points()?, u, zeta * k)?;
        let cvecs: Vec<Vec<FieldElem>> =
            layout.c.points().iter().map(|&x| power_vector(x, k)).collect();
        let eta = m
            .iter()
            .map(|mi| {
                cvecs
                    .iter()
                    .map(|cv| in_span(field, &mi.mul_vec(cv).unwrap(), &cvecs).ok().flatten())
                    .collect()
            })
            .collect();
        Ok(MdsConvertibleCode {
            layout,
            initial,
            final_code,
            m,
            thetas,
            eta,
        })
    }

    pub fn layout(&self) -> &MdsLayout {
        &self.layout
    }

    pub fn initial(&self) -> &GrsCode {
        &self.initial
    }

    pub fn final_code(&self) -> &GrsCode {
        &self.final_code
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.m
    }

    pub fn thetas(&self) -> &[Vec<FieldElem>] {
        &self.thetas
    }

    /// Coefficients of `M_i c_j` in the `c`-basis (0-based `i`, `j`).
    pub fn eta(&self, i: usize, j: usize) -> Option<&[FieldElem]> {
        self.eta[i][j].as_deref()
    }

    /// All failures of both conditions, plus `M_1 = I`.
    pub fn condition_failures(&self) -> Vec<ConditionFailure> {
        let field = self.layout.field;
        let mut out = Vec::new();
        if self.m[0] != Matrix::identity(field, self.layout.k) {
            out.push(ConditionFailure {
                condition: 1,
                witness: vec![1],
            });
        }
        for i in 1..self.layout.zeta {
            out.extend(mds_condition_failures(
                &self.m[i],
                &self.thetas[i],
                &self.layout.a_sets[0],
                &self.layout.a_sets[i],
                &self.layout.c,
                i + 1,
            ));
            let expect = mds_thetas(&self.layout.a_sets[0], &self.layout.a_sets[i], &self.layout.c);
            if let Ok(expect) = expect {
                for (j, (&t, &e)) in self.thetas[i].iter().zip(&expect).enumerate() {
                    if t != e {
                        out.push(ConditionFailure {
                            condition: 1,
                            witness: vec![i + 1, j + 1],
                        });
                    }
                }
            }
        }
        out
    }

    pub fn check_conditions(&self) -> Result<()> {
        match self.condition_failures().first() {
            Some(f) => Err(CodeError::ConditionViolation(f.to_string())),
            None => Ok(()),
        }
    }

    /// `T(f_1, ..., f_zeta) = sum_i h_{A \ A_i} M_i(f_i)`.
    pub fn transform(&self, polys: &[Polynomial]) -> Result<Polynomial> {
        let field = self.layout.field;
        let k = self.layout.k;
        if polys.len() != self.layout.zeta {
            return Err(CodeError::Dimension(format!(
                "{} polynomials for zeta = {}",
                polys.len(),
                self.layout.zeta
            )));
        }
        let mut acc = Polynomial::zero(field);
        for (i, f) in polys.iter().enumerate() {
            let v = f.padded_coeffs(k)?;
            let mf = Polynomial::new(field, self.m[i].vec_mul(&v)?);
            let others = EvaluationSet::new(field, self.layout.a_without(i))?;
            acc = &acc + &(&annihilator(&others) * &mf);
        }
        Ok(acc)
    }

    /// Final codeword computed directly from the messages, without conversion.
    pub fn encode_from_scratch(&self, messages: &[Vec<FieldElem>]) -> Result<Codeword> {
        let field = self.layout.field;
        let polys: Vec<Polynomial> = messages
            .iter()
            .map(|m| Polynomial::new(field, m.clone()))
            .collect();
        let t = self.transform(&polys)?;
        let symbols = self
            .final_code
            .points()
            .points()
            .iter()
            .zip(self.final_code.multipliers())
            .map(|(&a, &u)| u * t.eval(a))
            .collect();
        Codeword::new(symbols, self.final_code.coordinates())
    }

    /// Recovers each source message from the final codeword's `A_i` block.
    pub fn decode_sources(&self, word: &Codeword) -> Result<Vec<Vec<FieldElem>>> {
        self.final_code.check_membership(word)?;
        let field = self.layout.field;
        let k = self.layout.k;
        let a1 = self.layout.a_sets[0].points();
        (0..self.layout.zeta)
            .map(|i| {
                let pairs: Vec<(FieldElem, FieldElem)> =
                    (0..k).map(|j| (a1[j], word.get(i * k + j))).collect();
                interpolate(field, &pairs)?.padded_coeffs(k)
            })
            .collect()
    }

    /// Converts `zeta` initial codewords into one final codeword.
    pub fn convert(&self, initials: &[Codeword]) -> Result<(Codeword, ConversionTrace)> {
        let field = self.layout.field;
        let (zeta, k, l_f) = (self.layout.zeta, self.layout.k, self.layout.l_f);
        if initials.len() != zeta {
            return Err(CodeError::Dimension(format!(
                "{} initial codewords for zeta = {zeta}",
                initials.len()
            )));
        }
        self.check_conditions()?;
        for (i, w) in initials.iter().enumerate() {
            if self.initial.check_membership(w).is_err() {
                return Err(CodeError::NotACodeword(i + 1));
            }
        }
        let sources: Vec<Tracked<Codeword>> = initials.iter().map(Tracked::new).collect();
        let mut symbols = Vec::with_capacity(self.layout.final_length());
        for src in &sources {
            for j in 0..k {
                symbols.push(src.carry(j).expect("initial codeword has k symbols"));
            }
        }
        let c_vals: Vec<Vec<FieldElem>> = sources
            .iter()
            .map(|src| {
                (k..k + l_f)
                    .map(|c| src.symbol(c).expect("initial codeword has C symbols"))
                    .collect()
            })
            .collect();
        let mut new_symbols = BTreeMap::new();
        for (j, &cj) in self.layout.c.points().iter().enumerate() {
            let mut acc = field.zero();
            for (i, vals) in c_vals.iter().enumerate() {
                let weight = annihilator_eval(&self.layout.a_without(i), cj);
                let eta = self.eta[i][j].as_ref().expect("conditions were checked");
                for (&e, &v) in eta.iter().zip(vals) {
                    acc += weight * e * v;
                }
            }
            symbols.push(acc);
            new_symbols.insert(zeta * k + j, "linear combination of accessed symbols".to_string());
        }
        let trace = ConversionTrace {
            remaining: sources
                .iter()
                .enumerate()
                .map(|(i, s)| s.carried().into_iter().map(|c| (c, i * k + c)).collect())
                .collect(),
            accessed: sources.iter().map(Tracked::reads).collect(),
            new_symbols,
        };
        let word = Codeword::new(symbols, self.final_code.coordinates())?;
        Ok((word, trace))
    }
}

/// Builds the sets, matrices and codes; verifies both conditions.
pub fn build_mds_convertible(layout: MdsLayout) -> Result<MdsConvertibleCode> {
    let field = layout.field;
    let k = layout.k;
    let mut ms = vec![Matrix::identity(field, k)];
    let mut thetas = vec![vec![field.one(); k]];
    for i in 1..layout.zeta {
        let (t, m) = build_m_matrix(&layout.a_sets[0], &layout.a_sets[i], &layout.c)?;
        ms.push(m);
        thetas.push(t);
    }
    let code = MdsConvertibleCode::from_parts(layout, ms, thetas)?;
    code.check_conditions()?;
    Ok(code)
}

/// Conversion that reads `k` symbols of every initial codeword and re-encodes.
///
/// Used when `l_F > min(k, l_I)`. Initial and final codes are Reed-Solomon
/// on consecutive residues; the first `k` symbols of each initial codeword
/// stay in place as block `i` of the final codeword.
#[derive(Clone, Debug)]
pub struct DefaultReencode {
    pub zeta: usize,
    pub k: usize,
    pub l_i: usize,
    pub l_f: usize,
    initial: GrsCode,
    final_code: GrsCode,
}

impl DefaultReencode {
    pub fn new(zeta: usize, k: usize, l_i: usize, l_f: usize, field: PrimeField) -> Result<Self> {
        if zeta < 2 || k == 0 {
            return Err(CodeError::Parameter("need zeta >= 2 and k >= 1".into()));
        }
        let n_f = zeta * k + l_f;
        let n_i = k + l_i;
        if (n_f.max(n_i) as u64) >= field.modulus() {
            return Err(CodeError::Parameter(format!(
                "F_{} has too few nonzero points for length {}",
                field.modulus(),
                n_f.max(n_i)
            )));
        }
        let pts = |n: usize| EvaluationSet::new(field, (1..=n as u64).map(|x| field.elem(x)).collect());
        Ok(DefaultReencode {
            zeta,
            k,
            l_i,
            l_f,
            initial: GrsCode::rs(pts(n_i)?, k)?,
            final_code: GrsCode::rs(pts(n_f)?, zeta * k)?,
        })
    }

    pub fn initial(&self) -> &GrsCode {
        &self.initial
    }

    pub fn final_code(&self) -> &GrsCode {
        &self.final_code
    }

    pub fn convert(&self, initials: &[Codeword]) -> Result<(Codeword, ConversionTrace)> {
        let field = self.initial.field();
        let (zeta, k) = (self.zeta, self.k);
        if initials.len() != zeta {
            return Err(CodeError::Dimension(format!(
                "{} initial codewords for zeta = {zeta}",
                initials.len()
            )));
        }
        for (i, w) in initials.iter().enumerate() {
            if self.initial.check_membership(w).is_err() {
                return Err(CodeError::NotACodeword(i + 1));
            }
        }
        let sources: Vec<Tracked<Codeword>> = initials.iter().map(Tracked::new).collect();
        let fpts = self.final_code.points().points();
        let mut pairs = Vec::with_capacity(zeta * k);
        for (i, src) in sources.iter().enumerate() {
            for j in 0..k {
                let v = src.symbol(j).expect("initial codeword has k symbols");
                src.carry(j);
                pairs.push((fpts[i * k + j], v));
            }
        }
        let big = interpolate(field, &pairs)?;
        let mut symbols: Vec<FieldElem> = pairs.iter().map(|p| p.1).collect();
        let mut new_symbols = BTreeMap::new();
        for (j, &p) in fpts.iter().enumerate().skip(zeta * k) {
            symbols.push(big.eval(p));
            new_symbols.insert(j, "re-encoded".to_string());
        }
        let trace = ConversionTrace {
            remaining: sources
                .iter()
                .enumerate()
                .map(|(i, s)| s.carried().into_iter().map(|c| (c, i * k + c)).collect())
                .collect(),
            accessed: sources.iter().map(Tracked::reads).collect(),
            new_symbols,
        };
        Ok((Codeword::new(symbols, self.final_code.coordinates())?, trace))
    }

    /// Source messages from the final codeword.
    pub fn decode_sources(&self, word: &Codeword) -> Result<Vec<Vec<FieldElem>>> {
        self.final_code.check_membership(word)?;
        let k = self.k;
        (0..self.zeta)
            .map(|i| {
                let known: Vec<(usize, FieldElem)> = (0..k).map(|j| (j, word.get(i * k + j))).collect();
                self.initial.decode_erasures(&known)
            })
            .collect()
    }
}

/// Either the access-optimal construction or the re-encoding fallback.
#[derive(Clone, Debug)]
pub enum MdsPlan {
    Optimal(Box<MdsConvertibleCode>),
    DefaultReencode(DefaultReencode),
}

impl MdsPlan {
    pub fn initial(&self) -> &GrsCode {
        match self {
            MdsPlan::Optimal(c) => c.initial(),
            MdsPlan::DefaultReencode(d) => d.initial(),
        }
    }

    pub fn final_code(&self) -> &GrsCode {
        match self {
            MdsPlan::Optimal(c) => c.final_code(),
            MdsPlan::DefaultReencode(d) => d.final_code(),
        }
    }

    pub fn convert(&self, initials: &[Codeword]) -> Result<(Codeword, ConversionTrace)> {
        match self {
            MdsPlan::Optimal(c) => c.convert(initials),
            MdsPlan::DefaultReencode(d) => d.convert(initials),
        }
    }

    pub fn decode_sources(&self, word: &Codeword) -> Result<Vec<Vec<FieldElem>>> {
        match self {
            MdsPlan::Optimal(c) => c.decode_sources(word),
            MdsPlan::DefaultReencode(d) => d.decode_sources(word),
        }
    }
}

/// Picks the construction when `l_F <= min(k, l_I)` and re-encoding otherwise.
pub fn plan_mds(zeta: usize, k: usize, l_i: usize, l_f: usize, field: PrimeField) -> Result<MdsPlan> {
    if l_f > k.min(l_i) {
        return Ok(MdsPlan::DefaultReencode(DefaultReencode::new(zeta, k, l_i, l_f, field)?));
    }
    let layout = build_mds_sets(zeta, k, l_i, l_f, field)?;
    Ok(MdsPlan::Optimal(Box::new(build_mds_convertible(layout)?)))
}

/// Read coordinates allowed for an optimal conversion: every `C` coordinate.
pub fn declared_accessed(layout: &MdsLayout) -> BTreeSet<usize> {
    (layout.k..layout.k + layout.l_f).collect()
}
