//! Locally repairable convertible codes built with the good polynomial
//! `g(x) = x^{r+1}`.
//!
//! Initial coordinates are grouped `A_{1,1} .. A_{1,k} | C_1 .. C_lF | B_1 ..`;
//! final coordinates `A_{1,*} | A_{2,*} | ... | A_{zeta,*} | C_1 .. C_lF`.

use std::collections::{BTreeMap, BTreeSet};

use crate::access::{ConversionTrace, SymbolSource, Tracked};
use crate::codes::{check_good_polynomial, Codeword, LinearCode, LrcCode};
use crate::error::{CodeError, Result};
use crate::field::{find_modulus, FieldElem, PrimeField};
use crate::matrix::{in_span, Matrix};
use crate::mds_convert::ConditionFailure;
use crate::poly::{annihilator_eval, annihilator_eval_excluding, EvaluationSet, Polynomial, XGBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrcLayout {
    pub field: PrimeField,
    pub zeta: usize,
    pub k: usize,
    pub r: usize,
    pub l_i: usize,
    pub l_f: usize,
    /// Basis of `V_{k,r}` carrying the good polynomial.
    pub basis: XGBasis,
    /// `a_groups[s][i]` is `A_{s+1,i+1}`.
    pub a_groups: Vec<Vec<EvaluationSet>>,
    pub c_groups: Vec<EvaluationSet>,
    pub b_groups: Vec<EvaluationSet>,
    /// Generators and coset count, when built from the multiplicative group.
    pub beta: Option<FieldElem>,
    pub alpha: Option<FieldElem>,
    pub zeta0: Option<usize>,
    /// 1-based `(s, i)` of the coset each `B` group was taken from.
    pub b_origin: Vec<(usize, usize)>,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

impl LrcLayout {
    /// Layout from explicit groups; checks sizes, disjointness and the constants.
    pub fn from_groups(
        basis: XGBasis,
        a_groups: Vec<Vec<EvaluationSet>>,
        c_groups: Vec<EvaluationSet>,
        b_groups: Vec<EvaluationSet>,
    ) -> Result<Self> {
        let field = basis.field();
        let (k, r) = (basis.k(), basis.r());
        let zeta = a_groups.len();
        if zeta < 2 {
            return Err(CodeError::Parameter(format!("zeta = {zeta}, need at least 2")));
        }
        if a_groups.iter().any(|row| row.len() != k) {
            return Err(CodeError::Parameter(format!("every A-block needs {k} groups")));
        }
        let l_f = c_groups.len();
        let l_i = l_f + b_groups.len();
        if l_f > k.min(l_i) {
            return Err(CodeError::Parameter(format!(
                "l_F = {l_f} exceeds min(k, l_I) = {}",
                k.min(l_i)
            )));
        }
        let all_groups = a_groups.iter().flatten().chain(&c_groups).chain(&b_groups);
        if all_groups.clone().any(|g| g.len() != r + 1) {
            return Err(CodeError::Parameter(format!("groups must have r + 1 = {} points", r + 1)));
        }
        let report = check_good_polynomial(basis.g(), &all_groups.cloned().collect::<Vec<_>>());
        if !report.passed {
            return Err(CodeError::Layout(format!("g = {} is not constant on every group", basis.g())));
        }
        let final_groups: Vec<&EvaluationSet> = a_groups.iter().flatten().chain(&c_groups).collect();
        EvaluationSet::union_all(field, final_groups.iter().copied())
            .map_err(|e| CodeError::Layout(e.to_string()))?;
        let initial_groups = a_groups[0].iter().chain(&c_groups).chain(&b_groups);
        EvaluationSet::union_all(field, initial_groups).map_err(|e| CodeError::Layout(e.to_string()))?;
        let consts: Vec<FieldElem> = final_groups.iter().map(|g| basis.g().eval(g.points()[0])).collect();
        for i in 0..consts.len() {
            if consts[i + 1..].contains(&consts[i]) {
                return Err(CodeError::Layout(format!(
                    "group constant {} repeats among the final-code groups",
                    consts[i]
                )));
            }
        }
        Ok(LrcLayout {
            field,
            zeta,
            k,
            r,
            l_i,
            l_f,
            basis,
            a_groups,
            c_groups,
            b_groups,
            beta: None,
            alpha: None,
            zeta0: None,
            b_origin: Vec::new(),
        })
    }

    pub fn g(&self) -> &Polynomial {
        self.basis.g()
    }

    pub fn initial_length(&self) -> usize {
        (self.k + self.l_i) * (self.r + 1)
    }

    pub fn final_length(&self) -> usize {
        (self.zeta * self.k + self.l_f) * (self.r + 1)
    }

    fn constant(&self, group: &EvaluationSet) -> FieldElem {
        self.g().eval(group.points()[0])
    }

    /// `G_s`, 0-based `s`.
    pub fn g_set(&self, s: usize) -> Vec<FieldElem> {
        self.a_groups[s].iter().map(|g| self.constant(g)).collect()
    }

    /// `G_0`: constants of the `C` groups.
    pub fn g0(&self) -> Vec<FieldElem> {
        self.c_groups.iter().map(|g| self.constant(g)).collect()
    }

    /// `G \ G_s` with `G = G_1 u ... u G_zeta`.
    pub fn g_without(&self, s: usize) -> Vec<FieldElem> {
        (0..self.zeta).filter(|&t| t != s).flat_map(|t| self.g_set(t)).collect()
    }

    /// All group constants of the code layout: final groups, then `B` groups.
    pub fn group_constants(&self) -> Vec<FieldElem> {
        self.a_groups
            .iter()
            .flatten()
            .chain(&self.c_groups)
            .chain(&self.b_groups)
            .map(|g| self.constant(g))
            .collect()
    }

    /// Initial coordinates read by the conversion: each `C` group minus its last point.
    pub fn declared_accessed(&self) -> BTreeSet<usize> {
        let base = self.k * (self.r + 1);
        (0..self.l_f)
            .flat_map(|i| (0..self.r).map(move |j| (i, j)))
            .map(|(i, j)| base + i * (self.r + 1) + j)
            .collect()
    }
}

fn check_params(zeta: usize, k: usize, r: usize, l_i: usize, l_f: usize) -> Result<()> {
    if zeta < 2 || k == 0 || r == 0 || l_i == 0 {
        return Err(CodeError::Parameter("need zeta >= 2 and k, r, l_I >= 1".into()));
    }
    if l_f > k.min(l_i) {
        return Err(CodeError::Parameter(format!(
            "l_F = {l_f} exceeds min(k, l_I) = {}",
            k.min(l_i)
        )));
    }
    Ok(())
}

/// Smallest admissible field size for the given parameters.
pub fn lrc_min_field_size(zeta: usize, k: usize, r: usize, l_i: usize) -> u64 {
    let n = (k * (r + 1)) as u64;
    n * (zeta as u64 + 1).max(ceil_div(l_i, k) as u64 + 2) + 1
}

/// Smallest prime `q` with `k(r+1) | q - 1` that is large enough.
pub fn find_lrc_field(zeta: usize, k: usize, r: usize, l_i: usize) -> Result<PrimeField> {
    find_modulus((k * (r + 1)) as u64, lrc_min_field_size(zeta, k, r, l_i))
}

/// Points `beta^s alpha^{i-1+jk}` grouped by coset of `<alpha^k>`.
///
/// Group `A_{s,i}` uses `beta^{s-1}` and `j = 0..=r`. `B` groups are drawn first
/// from cosets the final code leaves unused, then from `A_{s,i}` with `s >= 2`.
pub fn build_lrc_sets(
    zeta: usize,
    k: usize,
    r: usize,
    l_i: usize,
    l_f: usize,
    field: PrimeField,
) -> Result<LrcLayout> {
    check_params(zeta, k, r, l_i, l_f)?;
    let q = field.modulus();
    let n = (k * (r + 1)) as u64;
    if (q - 1) % n != 0 {
        return Err(CodeError::Parameter(format!("k(r+1) = {n} does not divide q - 1 = {}", q - 1)));
    }
    let need = lrc_min_field_size(zeta, k, r, l_i);
    if q < need {
        return Err(CodeError::Parameter(format!("q = {q} is below the required {need}")));
    }
    let beta = field.primitive_root();
    let alpha = field.subgroup_generator(n)?;
    let zeta0 = zeta.max(ceil_div(l_i, k) + 1);
    let group = |s: usize, i: usize| -> Result<EvaluationSet> {
        let pts = (0..=r)
            .map(|j| beta.pow(s as u64) * alpha.pow((i - 1 + j * k) as u64))
            .collect();
        EvaluationSet::new(field, pts)
    };
    let a_groups = (1..=zeta)
        .map(|s| (1..=k).map(|i| group(s - 1, i)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let c_groups = (1..=l_f).map(|i| group(zeta0, i)).collect::<Result<Vec<_>>>()?;
    let b_origin: Vec<(usize, usize)> = (zeta + 1..=zeta0)
        .chain(2..=zeta)
        .flat_map(|s| (1..=k).map(move |i| (s, i)))
        .take(l_i - l_f)
        .collect();
    let b_groups = b_origin
        .iter()
        .map(|&(s, i)| group(s - 1, i))
        .collect::<Result<Vec<_>>>()?;
    let basis = XGBasis::power(field, r, k)?;
    let mut layout = LrcLayout::from_groups(basis, a_groups, c_groups, b_groups)?;
    let consts = layout.group_constants();
    for i in 0..consts.len() {
        for j in i + 1..consts.len() {
            if consts[i] == consts[j] && !(i < zeta * k && j >= zeta * k + l_f) {
                return Err(CodeError::Layout(format!("group constant {} collides", consts[i])));
            }
        }
    }
    layout.beta = Some(beta);
    layout.alpha = Some(alpha);
    layout.zeta0 = Some(zeta0);
    layout.b_origin = b_origin;
    Ok(layout)
}

/// `theta_{s,i}` for the block `s` (0-based) against block 0.
pub fn lrc_thetas(layout: &LrcLayout, s: usize) -> Result<Vec<FieldElem>> {
    let g0 = layout.g0();
    let with_g0 = |t: usize| -> Vec<FieldElem> {
        layout.g_set(t).into_iter().chain(g0.iter().copied()).collect()
    };
    let (gs, g1) = (with_g0(s), with_g0(0));
    (0..layout.k)
        .map(|i| {
            let num = annihilator_eval_excluding(&gs, gs[i]);
            let den = annihilator_eval_excluding(&g1, g1[i]);
            if num.is_zero() || den.is_zero() {
                return Err(CodeError::Layout(format!("constants collide at group {}", i + 1)));
            }
            Ok(num / den)
        })
        .collect()
}

/// Columns `xg(a_{i,j})` at index `i r + j` for the first `r` points of each group.
fn block_matrix(basis: &XGBasis, groups: &[EvaluationSet]) -> Result<Matrix> {
    let cols: Vec<Vec<FieldElem>> = groups
        .iter()
        .flat_map(|g| g.points()[..basis.r()].iter().map(|&p| basis.xg_vector(p)))
        .collect();
    Matrix::from_columns(basis.field(), &cols)
}

/// Checks both lines of the conversion condition for block `s` (0-based).
pub fn lrc_condition_failures(layout: &LrcLayout, m: &Matrix, thetas: &[FieldElem], s: usize) -> Vec<ConditionFailure> {
    let basis = &layout.basis;
    let field = layout.field;
    let mut out = Vec::new();
    for (i, (src, dst)) in layout.a_groups[s].iter().zip(&layout.a_groups[0]).enumerate() {
        for (j, (&p, &q)) in src.points().iter().zip(dst.points()).enumerate() {
            let lhs = m.mul_vec(&basis.xg_vector(p)).unwrap();
            let rhs: Vec<FieldElem> = basis.xg_vector(q).into_iter().map(|x| x * thetas[i]).collect();
            if lhs != rhs {
                out.push(ConditionFailure {
                    condition: 1,
                    witness: vec![s + 1, i + 1, j + 1],
                });
            }
        }
    }
    let cvecs: Vec<Vec<FieldElem>> = layout
        .c_groups
        .iter()
        .flat_map(|g| g.points()[..layout.r].iter().map(|&p| basis.xg_vector(p)))
        .collect();
    for (idx, cv) in cvecs.iter().enumerate() {
        let img = m.mul_vec(cv).unwrap();
        if !matches!(in_span(field, &img, &cvecs), Ok(Some(_))) {
            out.push(ConditionFailure {
                condition: 2,
                witness: vec![s + 1, idx / layout.r + 1, idx % layout.r + 1],
            });
        }
    }
    out
}

/// `M_s = A diag(theta) B^{-1}` from the first `r` points of each group;
/// verifies the conditions on all `r + 1` points.
pub fn build_m_matrix_lrc(layout: &LrcLayout, s: usize) -> Result<(Vec<FieldElem>, Matrix)> {
    if s == 0 || s >= layout.zeta {
        return Err(CodeError::Parameter(format!("block {} outside 2..={}", s + 1, layout.zeta)));
    }
    let field = layout.field;
    let thetas = lrc_thetas(layout, s)?;
    let a = block_matrix(&layout.basis, &layout.a_groups[0])?;
    let b = block_matrix(&layout.basis, &layout.a_groups[s])?;
    let diag: Vec<FieldElem> = thetas
        .iter()
        .flat_map(|&t| std::iter::repeat(t).take(layout.r))
        .collect();
    let m = a.mul(&Matrix::diag(field, &diag))?.mul(&b.inverse()?)?;
    if let Some(fail) = lrc_condition_failures(layout, &m, &thetas, s).first() {
        return Err(CodeError::ConditionViolation(fail.to_string()));
    }
    Ok((thetas, m))
}

#[derive(Clone, Debug)]
pub struct LrcConvertibleCode {
    layout: LrcLayout,
    initial: LrcCode,
    final_code: LrcCode,
    m: Vec<Matrix>,
    thetas: Vec<Vec<FieldElem>>,
    /// `eta[s][i r + j]`: coordinates of `M_s c_{i,j}` in the `c`-basis.
    eta: Vec<Vec<Option<Vec<FieldElem>>>>,
}

impl LrcConvertibleCode {
    /// Assembles a code from its parts without checking the conditions.
    pub fn from_parts(layout: LrcLayout, m: Vec<Matrix>, thetas: Vec<Vec<FieldElem>>) -> Result<Self> {
        let field = layout.field;
        let (zeta, k, r) = (layout.zeta, layout.k, layout.r);
        let dim = k * r;
        if m.len() != zeta || thetas.len() != zeta {
            return Err(CodeError::Dimension(format!(
                "{} matrices and {} theta rows for zeta = {zeta}",
                m.len(),
                thetas.len()
            )));
        }
        if m.iter().any(|x| x.rows() != dim || x.cols() != dim) || thetas.iter().any(|t| t.len() != k) {
            return Err(CodeError::Dimension(format!("matrices must be {dim}x{dim}, theta rows of length {k}")));
        }
        if let Some((s, i)) = thetas
            .iter()
            .enumerate()
            .find_map(|(s, row)| row.iter().position(|t| t.is_zero()).map(|i| (s, i)))
        {
            return Err(CodeError::ConditionViolation(format!("theta at ({},{}) is zero", s + 1, i + 1)));
        }
        let initial_groups: Vec<EvaluationSet> = layout.a_groups[0]
            .iter()
            .chain(&layout.c_groups)
            .chain(&layout.b_groups)
            .cloned()
            .collect();
        let initial = LrcCode::plain(initial_groups, layout.basis.clone())?;
        let mut u = Vec::with_capacity(layout.final_length());
        for s in 0..zeta {
            let others = layout.g_without(s);
            for (i, grp) in layout.a_groups[s].iter().enumerate() {
                let h = annihilator_eval(&others, layout.g().eval(grp.points()[0]));
                let inv = (thetas[s][i] * h)
                    .inverse()
                    .ok_or_else(|| CodeError::Layout(format!("group ({},{}) shares a constant", s + 1, i + 1)))?;
                u.extend(std::iter::repeat(inv).take(r + 1));
            }
        }
        u.extend(std::iter::repeat(field.one()).take(layout.l_f * (r + 1)));
        let final_groups: Vec<EvaluationSet> =
            layout.a_groups.iter().flatten().chain(&layout.c_groups).cloned().collect();
        let final_code = LrcCode::new(final_groups, layout.basis.with_k(zeta * k), u)?;
        let cvecs: Vec<Vec<FieldElem>> = layout
            .c_groups
            .iter()
            .flat_map(|g| g.points()[..r].iter().map(|&p| layout.basis.xg_vector(p)))
            .collect();
        let eta = m
            .iter()
            .map(|ms| {
                cvecs
                    .iter()
                    .map(|cv| in_span(field, &ms.mul_vec(cv).unwrap(), &cvecs).ok().flatten())
                    .collect()
            })
            .collect();
        Ok(LrcConvertibleCode {
            layout,
            initial,
            final_code,
            m,
            thetas,
            eta,
        })
    }

    pub fn layout(&self) -> &LrcLayout {
        &self.layout
    }

    pub fn initial(&self) -> &LrcCode {
        &self.initial
    }

    pub fn final_code(&self) -> &LrcCode {
        &self.final_code
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.m
    }

    pub fn thetas(&self) -> &[Vec<FieldElem>] {
        &self.thetas
    }

    /// Coefficients of `M_s c_{i,j}` (0-based) in the `c`-basis.
    pub fn eta(&self, s: usize, i: usize, j: usize) -> Option<&[FieldElem]> {
        self.eta[s][i * self.layout.r + j].as_deref()
    }

    pub fn condition_failures(&self) -> Vec<ConditionFailure> {
        let field = self.layout.field;
        let mut out = Vec::new();
        if self.m[0] != Matrix::identity(field, self.layout.k * self.layout.r) {
            out.push(ConditionFailure {
                condition: 1,
                witness: vec![1],
            });
        }
        for s in 1..self.layout.zeta {
            out.extend(lrc_condition_failures(&self.layout, &self.m[s], &self.thetas[s], s));
            if let Ok(expect) = lrc_thetas(&self.layout, s) {
                for (i, (&t, &e)) in self.thetas[s].iter().zip(&expect).enumerate() {
                    if t != e {
                        out.push(ConditionFailure {
                            condition: 1,
                            witness: vec![s + 1, i + 1],
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

    /// `T(f_1, ..., f_zeta) = sum_s (h_{G \ G_s} o g) M_s(f_s)`, on basis coordinates.
    pub fn transform(&self, messages: &[Vec<FieldElem>]) -> Result<Polynomial> {
        let field = self.layout.field;
        if messages.len() != self.layout.zeta {
            return Err(CodeError::Dimension(format!(
                "{} messages for zeta = {}",
                messages.len(),
                self.layout.zeta
            )));
        }
        let g = self.layout.g();
        let mut acc = Polynomial::zero(field);
        for (s, msg) in messages.iter().enumerate() {
            let ms = self.layout.basis.to_monomial(&self.m[s].vec_mul(msg)?)?;
            let others = self.layout.g_without(s);
            let h = crate::poly::annihilator_of(field, &others).compose(g);
            acc = &acc + &(&h * &ms);
        }
        Ok(acc)
    }

    pub fn encode_from_scratch(&self, messages: &[Vec<FieldElem>]) -> Result<Codeword> {
        self.final_code.encode_polynomial(&self.transform(messages)?)
    }

    /// Source messages recovered from the `A_s` blocks of a final codeword.
    pub fn decode_sources(&self, word: &Codeword) -> Result<Vec<Vec<FieldElem>>> {
        self.final_code.check_membership(word)?;
        let block = self.layout.k * (self.layout.r + 1);
        (0..self.layout.zeta)
            .map(|s| {
                let known: Vec<(usize, FieldElem)> =
                    (0..block).map(|c| (c, word.get(s * block + c))).collect();
                self.initial.decode(&known)
            })
            .collect()
    }

    pub fn convert(&self, initials: &[Codeword]) -> Result<(Codeword, ConversionTrace)> {
        let field = self.layout.field;
        let (zeta, k, r, l_f) = (self.layout.zeta, self.layout.k, self.layout.r, self.layout.l_f);
        let w = r + 1;
        if initials.len() != zeta {
            return Err(CodeError::Dimension(format!(
                "{} initial codewords for zeta = {zeta}",
                initials.len()
            )));
        }
        self.check_conditions()?;
        for (s, word) in initials.iter().enumerate() {
            if self.initial.check_membership(word).is_err() {
                return Err(CodeError::NotACodeword(s + 1));
            }
        }
        let sources: Vec<Tracked<Codeword>> = initials.iter().map(Tracked::new).collect();
        let block = k * w;
        let mut out: Vec<Option<FieldElem>> = vec![None; self.layout.final_length()];
        for (s, src) in sources.iter().enumerate() {
            for c in 0..block {
                out[s * block + c] = src.carry(c);
            }
        }
        let c_vals: Vec<Vec<FieldElem>> = sources
            .iter()
            .map(|src| {
                (0..l_f)
                    .flat_map(|i| (0..r).map(move |j| block + i * w + j))
                    .map(|c| src.symbol(c).expect("initial codeword has C symbols"))
                    .collect()
            })
            .collect();
        let weights: Vec<Vec<FieldElem>> = (0..zeta)
            .map(|s| {
                let others = self.layout.g_without(s);
                self.layout.g0().iter().map(|&g0| annihilator_eval(&others, g0)).collect()
            })
            .collect();
        let mut new_symbols = BTreeMap::new();
        let c_base = zeta * block;
        for i in 0..l_f {
            for j in 0..r {
                let mut acc = field.zero();
                for s in 0..zeta {
                    let eta = self.eta[s][i * r + j].as_ref().expect("conditions were checked");
                    let part = eta.iter().zip(&c_vals[s]).fold(field.zero(), |a, (&e, &v)| a + e * v);
                    acc += weights[s][i] * part;
                }
                out[c_base + i * w + j] = Some(acc);
                new_symbols.insert(c_base + i * w + j, "linear combination of accessed symbols".to_string());
            }
            let last = c_base + i * w + r;
            out[last] = Some(self.final_code.lrc_repair(&out, last)?);
            new_symbols.insert(
                last,
                format!("local repair from d[{}..{}]", c_base + i * w, last),
            );
        }
        let symbols: Vec<FieldElem> = out.into_iter().map(|x| x.expect("every coordinate filled")).collect();
        let trace = ConversionTrace {
            remaining: sources
                .iter()
                .enumerate()
                .map(|(s, src)| src.carried().into_iter().map(|c| (c, s * block + c)).collect())
                .collect(),
            accessed: sources.iter().map(Tracked::reads).collect(),
            new_symbols,
        };
        Ok((Codeword::new(symbols, self.final_code.coordinates())?, trace))
    }
}

/// Builds the matrices and codes for a layout and verifies the conditions.
pub fn build_lrc_convertible(layout: LrcLayout) -> Result<LrcConvertibleCode> {
    let field = layout.field;
    let dim = layout.k * layout.r;
    let mut ms = vec![Matrix::identity(field, dim)];
    let mut thetas = vec![vec![field.one(); layout.k]];
    for s in 1..layout.zeta {
        let (t, m) = build_m_matrix_lrc(&layout, s)?;
        ms.push(m);
        thetas.push(t);
    }
    let code = LrcConvertibleCode::from_parts(layout, ms, thetas)?;
    code.check_conditions()?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f19() -> PrimeField {
        PrimeField::new(19).unwrap()
    }

    #[test]
    fn example_groups_from_builder() {
        let l = build_lrc_sets(2, 2, 2, 1, 1, f19()).unwrap();
        let vals: Vec<Vec<u64>> = l.a_groups.iter().flatten().map(EvaluationSet::values).collect();
        assert_eq!(vals, vec![vec![1, 7, 11], vec![8, 18, 12], vec![2, 14, 3], vec![16, 17, 5]]);
        assert_eq!(l.c_groups[0].values(), vec![4, 9, 6]);
        assert!(l.b_groups.is_empty());
        let consts: Vec<u64> = l.group_constants().iter().map(|c| c.value()).collect();
        assert_eq!(consts, vec![1, 18, 8, 11, 7]);
    }

    #[test]
    fn example_matrix() {
        let l = build_lrc_sets(2, 2, 2, 1, 1, f19()).unwrap();
        let (t, m) = build_m_matrix_lrc(&l, 1).unwrap();
        assert_eq!(t, f19().elems(&[5, 15]));
        assert_eq!(
            m.to_u64_rows(),
            vec![vec![10, 0, 16, 0], vec![0, 5, 0, 8], vec![14, 0, 6, 0], vec![0, 7, 0, 3]]
        );
    }

    #[test]
    fn example_eta_and_multipliers() {
        let code = build_lrc_convertible(build_lrc_sets(2, 2, 2, 1, 1, f19()).unwrap()).unwrap();
        let f = f19();
        assert_eq!(code.eta(1, 0, 0).unwrap(), &f.elems(&[15, 12])[..]);
        assert_eq!(code.eta(1, 0, 1).unwrap(), &f.elems(&[11, 16])[..]);
        assert_eq!(code.eta(0, 0, 0).unwrap(), &f.elems(&[1, 0])[..]);
        assert!(code.final_code().check_locality().passed());
    }

    #[test]
    fn corrupted_matrix_names_a_witness() {
        let code = build_lrc_convertible(build_lrc_sets(2, 2, 2, 1, 1, f19()).unwrap()).unwrap();
        let mut ms = code.matrices().to_vec();
        ms[1].set(0, 0, f19().elem(11));
        let bad = LrcConvertibleCode::from_parts(code.layout().clone(), ms, code.thetas().to_vec()).unwrap();
        let fails = bad.condition_failures();
        assert_eq!(fails[0].condition, 1);
        assert_eq!(fails[0].witness.len(), 3);
        assert!(matches!(bad.check_conditions(), Err(CodeError::ConditionViolation(_))));
    }

    #[test]
    fn b_groups_prefer_unused_cosets() {
        let f = find_lrc_field(2, 2, 1, 4).unwrap();
        let l = build_lrc_sets(2, 2, 1, 4, 1, f).unwrap();
        assert_eq!(l.zeta0, Some(3));
        assert_eq!(l.b_origin, vec![(3, 1), (3, 2), (2, 1)]);
    }

    #[test]
    fn divisibility_enforced() {
        assert!(matches!(
            build_lrc_sets(2, 2, 2, 1, 1, PrimeField::new(23).unwrap()),
            Err(CodeError::Parameter(_))
        ));
        assert!(matches!(
            build_lrc_sets(2, 2, 2, 1, 1, PrimeField::new(13).unwrap()),
            Err(CodeError::Parameter(_))
        ));
    }

    #[test]
    fn example_conversion_costs() {
        let code = build_lrc_convertible(build_lrc_sets(2, 2, 2, 1, 1, f19()).unwrap()).unwrap();
        let f = f19();
        let msgs = vec![f.elems(&[1, 2, 3, 4]), f.elems(&[5, 6, 7, 8])];
        let words: Vec<Codeword> = msgs.iter().map(|m| code.initial().encode(m).unwrap()).collect();
        let (d, trace) = code.convert(&words).unwrap();
        assert_eq!(trace.cost_line(), "read=4 write=3 total=7");
        assert_eq!(d, code.encode_from_scratch(&msgs).unwrap());
        assert_eq!(code.decode_sources(&d).unwrap(), msgs);
    }
}
