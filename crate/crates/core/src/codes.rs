//! Generalized Reed-Solomon codes and Tamo-Barg locally repairable codes.

use crate::access::SymbolSource;
use crate::error::{CodeError, Result};
use crate::field::{FieldElem, PrimeField};
use crate::matrix::{in_span, Matrix};
use crate::poly::{interpolate, interpolate_at, EvaluationSet, Polynomial, XGBasis};

/// Default cap on the number of codewords brute force may enumerate.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Label of one codeword position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coordinate {
    pub point: FieldElem,
    /// Repair group, for codes that have them.
    pub group: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    symbols: Vec<FieldElem>,
    coords: Vec<Coordinate>,
}

impl Codeword {
    pub fn new(symbols: Vec<FieldElem>, coords: Vec<Coordinate>) -> Result<Self> {
        if symbols.len() != coords.len() {
            return Err(CodeError::Dimension(format!(
                "{} symbols for {} coordinates",
                symbols.len(),
                coords.len()
            )));
        }
        Ok(Codeword { symbols, coords })
    }

    pub fn symbols(&self) -> &[FieldElem] {
        &self.symbols
    }

    pub fn values(&self) -> Vec<u64> {
        self.symbols.iter().map(|s| s.value()).collect()
    }

    pub fn coords(&self) -> &[Coordinate] {
        &self.coords
    }

    pub fn points(&self) -> Vec<u64> {
        self.coords.iter().map(|c| c.point.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, i: usize) -> FieldElem {
        self.symbols[i]
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }

    /// Replaces the symbols, keeping the labels.
    pub fn with_symbols(&self, symbols: Vec<FieldElem>) -> Result<Codeword> {
        Codeword::new(symbols, self.coords.clone())
    }

    /// Known `(coordinate, symbol)` pairs for every position.
    pub fn pairs(&self) -> Vec<(usize, FieldElem)> {
        self.symbols.iter().copied().enumerate().collect()
    }
}

impl SymbolSource for Codeword {
    fn len(&self) -> usize {
        self.symbols.len()
    }

    fn symbol(&self, coord: usize) -> Option<FieldElem> {
        self.symbols.get(coord).copied()
    }
}

/// Common interface of the linear codes in this crate.
pub trait LinearCode {
    fn field(&self) -> PrimeField;
    fn length(&self) -> usize;
    fn dimension(&self) -> usize;
    fn coordinates(&self) -> Vec<Coordinate>;
    fn encode(&self, message: &[FieldElem]) -> Result<Codeword>;

    /// Rows are the encodings of the unit messages.
    fn generator_matrix(&self) -> Matrix {
        let f = self.field();
        let rows: Vec<Vec<FieldElem>> = (0..self.dimension())
            .map(|i| {
                let mut e = vec![f.zero(); self.dimension()];
                e[i] = f.one();
                self.encode(&e).expect("unit message has the right length").symbols
            })
            .collect();
        Matrix::from_rows(f, &rows).unwrap_or_else(|_| Matrix::zeros(f, 0, self.length()))
    }
}

fn check_multipliers(field: PrimeField, n: usize, u: &[FieldElem]) -> Result<()> {
    if u.len() != n {
        return Err(CodeError::Dimension(format!("{} multipliers for {n} points", u.len())));
    }
    if let Some(bad) = u.iter().find(|x| x.field() != field) {
        return Err(CodeError::FieldMismatch(field.modulus(), bad.field().modulus()));
    }
    if let Some(pos) = u.iter().position(|x| x.is_zero()) {
        return Err(CodeError::Parameter(format!("multiplier {pos} is zero")));
    }
    Ok(())
}

fn check_message(message: &[FieldElem], dim: usize) -> Result<()> {
    if message.len() != dim {
        return Err(CodeError::Dimension(format!(
            "message of length {} for dimension {dim}",
            message.len()
        )));
    }
    Ok(())
}

fn distinct_pairs(n: usize, known: &[(usize, FieldElem)]) -> Result<Vec<(usize, FieldElem)>> {
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(known.len());
    for &(c, v) in known {
        if c >= n {
            return Err(CodeError::Dimension(format!("coordinate {c} out of range 0..{n}")));
        }
        if !seen[c] {
            seen[c] = true;
            out.push((c, v));
        }
    }
    Ok(out)
}

/// `{(u_a f(a))_{a in A} : deg f < k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsCode {
    points: EvaluationSet,
    multipliers: Vec<FieldElem>,
    k: usize,
}

impl GrsCode {
    pub fn new(points: EvaluationSet, multipliers: Vec<FieldElem>, k: usize) -> Result<Self> {
        let n = points.len();
        if k == 0 || k > n {
            return Err(CodeError::Parameter(format!("dimension {k} outside 1..={n}")));
        }
        check_multipliers(points.field(), n, &multipliers)?;
        Ok(GrsCode {
            points,
            multipliers,
            k,
        })
    }

    /// Reed-Solomon: all multipliers one.
    pub fn rs(points: EvaluationSet, k: usize) -> Result<Self> {
        let u = vec![points.field().one(); points.len()];
        Self::new(points, u, k)
    }

    pub fn points(&self) -> &EvaluationSet {
        &self.points
    }

    pub fn multipliers(&self) -> &[FieldElem] {
        &self.multipliers
    }

    /// Codeword of the polynomial `f`, which must have degree `< k`.
    pub fn encode_polynomial(&self, f: &Polynomial) -> Result<Codeword> {
        if f.degree().is_some_and(|d| d >= self.k) {
            return Err(CodeError::Dimension(format!(
                "polynomial of degree {:?} for dimension {}",
                f.degree(),
                self.k
            )));
        }
        let symbols = self
            .points
            .points()
            .iter()
            .zip(&self.multipliers)
            .map(|(&a, &u)| u * f.eval(a))
            .collect();
        Codeword::new(symbols, self.coordinates())
    }

    /// Recovers the message polynomial from at least `k` known symbols.
    pub fn decode_polynomial(&self, known: &[(usize, FieldElem)]) -> Result<Polynomial> {
        let field = self.field();
        let known = distinct_pairs(self.length(), known)?;
        if known.len() < self.k {
            return Err(CodeError::Dimension(format!(
                "{} known symbols, need at least {}",
                known.len(),
                self.k
            )));
        }
        let normalized: Vec<(FieldElem, FieldElem)> = known
            .iter()
            .map(|&(c, v)| (self.points.points()[c], v / self.multipliers[c]))
            .collect();
        let f = interpolate(field, &normalized[..self.k])?;
        for (&(c, _), &(x, y)) in known.iter().zip(&normalized).skip(self.k) {
            if f.eval(x) != y {
                return Err(CodeError::InconsistentSymbols(c));
            }
        }
        Ok(f)
    }

    /// Message coefficients from at least `k` known symbols.
    pub fn decode_erasures(&self, known: &[(usize, FieldElem)]) -> Result<Vec<FieldElem>> {
        self.decode_polynomial(known)?.padded_coeffs(self.k)
    }

    /// Interpolation consistency over every coordinate.
    pub fn check_membership(&self, word: &Codeword) -> Result<()> {
        if word.len() != self.length() {
            return Err(CodeError::Dimension(format!(
                "word of length {} for code length {}",
                word.len(),
                self.length()
            )));
        }
        self.decode_polynomial(&word.pairs()).map(|_| ())
    }

    pub fn is_codeword(&self, word: &Codeword) -> bool {
        self.check_membership(word).is_ok()
    }
}

impl LinearCode for GrsCode {
    fn field(&self) -> PrimeField {
        self.points.field()
    }

    fn length(&self) -> usize {
        self.points.len()
    }

    fn dimension(&self) -> usize {
        self.k
    }

    fn coordinates(&self) -> Vec<Coordinate> {
        self.points
            .points()
            .iter()
            .map(|&point| Coordinate { point, group: None })
            .collect()
    }

    fn encode(&self, message: &[FieldElem]) -> Result<Codeword> {
        check_message(message, self.k)?;
        self.encode_polynomial(&Polynomial::new(self.field(), message.to_vec()))
    }
}

/// Outcome of checking that a polynomial is constant on each group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPolynomialReport {
    pub passed: bool,
    /// `g(A_i)` for each group on which `g` is constant, `None` otherwise.
    pub constants: Vec<Option<FieldElem>>,
}

pub fn check_good_polynomial(g: &Polynomial, groups: &[EvaluationSet]) -> GoodPolynomialReport {
    let constants: Vec<Option<FieldElem>> = groups
        .iter()
        .map(|grp| {
            let vals: Vec<FieldElem> = grp.points().iter().map(|&a| g.eval(a)).collect();
            match vals.first() {
                Some(&v) if vals.iter().all(|&w| w == v) => Some(v),
                _ => None,
            }
        })
        .collect();
    GoodPolynomialReport {
        passed: constants.iter().all(Option::is_some),
        constants,
    }
}

/// The LRC defined by a group partition, a good polynomial and multipliers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrcCode {
    groups: Vec<EvaluationSet>,
    basis: XGBasis,
    multipliers: Vec<FieldElem>,
    points: EvaluationSet,
    constants: Vec<FieldElem>,
}

impl LrcCode {
    pub fn new(
        groups: Vec<EvaluationSet>,
        basis: XGBasis,
        multipliers: Vec<FieldElem>,
    ) -> Result<Self> {
        let field = basis.field();
        let r = basis.r();
        if let Some((i, g)) = groups.iter().enumerate().find(|(_, g)| g.len() != r + 1) {
            return Err(CodeError::Parameter(format!(
                "group {i} has {} points, expected r + 1 = {}",
                g.len(),
                r + 1
            )));
        }
        if groups.len() < basis.k() {
            return Err(CodeError::Parameter(format!(
                "{} groups cannot carry {} message blocks",
                groups.len(),
                basis.k()
            )));
        }
        let points = EvaluationSet::union_all(field, &groups)?;
        check_multipliers(field, points.len(), &multipliers)?;
        let report = check_good_polynomial(basis.g(), &groups);
        if let Some(i) = report.constants.iter().position(Option::is_none) {
            return Err(CodeError::Parameter(format!(
                "g = {} is not constant on group {i}",
                basis.g()
            )));
        }
        let constants: Vec<FieldElem> = report.constants.into_iter().flatten().collect();
        for i in 0..constants.len() {
            if let Some(j) = (i + 1..constants.len()).find(|&j| constants[j] == constants[i]) {
                return Err(CodeError::Layout(format!(
                    "groups {i} and {j} share the constant g = {}",
                    constants[i]
                )));
            }
        }
        Ok(LrcCode {
            groups,
            basis,
            multipliers,
            points,
            constants,
        })
    }

    /// All multipliers one.
    pub fn plain(groups: Vec<EvaluationSet>, basis: XGBasis) -> Result<Self> {
        let n: usize = groups.iter().map(EvaluationSet::len).sum();
        let u = vec![basis.field().one(); n];
        Self::new(groups, basis, u)
    }

    pub fn groups(&self) -> &[EvaluationSet] {
        &self.groups
    }

    pub fn basis(&self) -> &XGBasis {
        &self.basis
    }

    pub fn g(&self) -> &Polynomial {
        self.basis.g()
    }

    pub fn r(&self) -> usize {
        self.basis.r()
    }

    pub fn blocks(&self) -> usize {
        self.basis.k()
    }

    pub fn multipliers(&self) -> &[FieldElem] {
        &self.multipliers
    }

    pub fn points(&self) -> &EvaluationSet {
        &self.points
    }

    pub fn group_constants(&self) -> &[FieldElem] {
        &self.constants
    }

    /// Group index of a coordinate.
    pub fn group_of(&self, coord: usize) -> usize {
        coord / (self.r() + 1)
    }

    /// Coordinates of group `g`.
    pub fn group_coords(&self, g: usize) -> std::ops::Range<usize> {
        let w = self.r() + 1;
        g * w..(g + 1) * w
    }

    /// Codeword of `f` given by its coordinates in the `x^t1 g^t2` basis.
    fn encode_coeffs(&self, coeffs: &[FieldElem]) -> Result<Codeword> {
        let symbols = self
            .points
            .points()
            .iter()
            .zip(&self.multipliers)
            .map(|(&a, &u)| u * self.basis.eval(coeffs, a))
            .collect();
        Codeword::new(symbols, self.coordinates())
    }

    /// Codeword of a polynomial in `V_{k,r}`.
    pub fn encode_polynomial(&self, f: &Polynomial) -> Result<Codeword> {
        let coeffs = self.basis.from_monomial(f)?;
        self.encode_coeffs(&coeffs)
    }

    /// Recovers the message from known symbols by solving in the basis.
    pub fn decode(&self, known: &[(usize, FieldElem)]) -> Result<Vec<FieldElem>> {
        let field = self.field();
        let known = distinct_pairs(self.length(), known)?;
        let dim = self.dimension();
        let mut chosen: Vec<Vec<FieldElem>> = Vec::new();
        let mut rhs = Vec::new();
        for &(c, v) in &known {
            if chosen.len() == dim {
                break;
            }
            let row: Vec<FieldElem> = self
                .basis
                .xg_vector(self.points.points()[c])
                .into_iter()
                .map(|x| x * self.multipliers[c])
                .collect();
            let mut trial = chosen.clone();
            trial.push(row.clone());
            if Matrix::from_rows(field, &trial)?.rank() == trial.len() {
                chosen = trial;
                rhs.push(v);
            }
        }
        if chosen.len() < dim {
            return Err(CodeError::Dimension(format!(
                "known symbols determine only {} of {dim} message coordinates",
                chosen.len()
            )));
        }
        let m = Matrix::from_rows(field, &chosen)?;
        let message = m.solve(&rhs)?.ok_or(CodeError::SingularMatrix)?;
        for &(c, v) in &known {
            let a = self.points.points()[c];
            if self.multipliers[c] * self.basis.eval(&message, a) != v {
                return Err(CodeError::InconsistentSymbols(c));
            }
        }
        Ok(message)
    }

    pub fn check_membership(&self, word: &Codeword) -> Result<()> {
        if word.len() != self.length() {
            return Err(CodeError::Dimension(format!(
                "word of length {} for code length {}",
                word.len(),
                self.length()
            )));
        }
        self.decode(&word.pairs()).map(|_| ())
    }

    pub fn is_codeword(&self, word: &Codeword) -> bool {
        self.check_membership(word).is_ok()
    }

    /// Recomputes `erased` from the other `r` symbols of its group only.
    pub fn lrc_repair<S: SymbolSource + ?Sized>(&self, word: &S, erased: usize) -> Result<FieldElem> {
        if erased >= self.length() {
            return Err(CodeError::Dimension(format!(
                "coordinate {erased} out of range 0..{}",
                self.length()
            )));
        }
        let mut pairs = Vec::with_capacity(self.r());
        for c in self.group_coords(self.group_of(erased)) {
            if c == erased {
                continue;
            }
            let v = word
                .symbol(c)
                .ok_or(CodeError::InsufficientGroup { coord: erased, other: c })?;
            pairs.push((self.points.points()[c], v / self.multipliers[c]));
        }
        let target = self.points.points()[erased];
        Ok(self.multipliers[erased] * interpolate_at(&pairs, target))
    }

    /// Coordinates whose group-mates fail to span them in the generator matrix.
    pub fn check_locality(&self) -> LocalityReport {
        let field = self.field();
        let gen = self.generator_matrix();
        let mut failures = Vec::new();
        for c in 0..self.length() {
            let others: Vec<Vec<FieldElem>> = self
                .group_coords(self.group_of(c))
                .filter(|&o| o != c)
                .map(|o| gen.column(o))
                .collect();
            let ok = others.len() <= self.r()
                && matches!(in_span(field, &gen.column(c), &others), Ok(Some(_)));
            if !ok {
                failures.push(c);
            }
        }
        LocalityReport {
            checked: self.length(),
            failures,
        }
    }
}

impl LinearCode for LrcCode {
    fn field(&self) -> PrimeField {
        self.basis.field()
    }

    fn length(&self) -> usize {
        self.points.len()
    }

    fn dimension(&self) -> usize {
        self.basis.dim()
    }

    fn coordinates(&self) -> Vec<Coordinate> {
        let w = self.r() + 1;
        self.points
            .points()
            .iter()
            .enumerate()
            .map(|(i, &point)| Coordinate {
                point,
                group: Some(i / w),
            })
            .collect()
    }

    fn encode(&self, message: &[FieldElem]) -> Result<Codeword> {
        check_message(message, self.dimension())?;
        self.encode_coeffs(message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityReport {
    pub checked: usize,
    pub failures: Vec<usize>,
}

impl LocalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Minimum Hamming weight over all nonzero codewords by enumeration.
pub fn min_distance_bruteforce<C: LinearCode + ?Sized>(code: &C, budget: u128) -> Result<usize> {
    let q = code.field().modulus();
    let dim = code.dimension();
    let total = (q as u128)
        .checked_pow(dim as u32)
        .unwrap_or(u128::MAX);
    if total > budget {
        return Err(CodeError::BudgetExceeded(total, budget));
    }
    let gen = code.generator_matrix();
    let n = code.length();
    let rows: Vec<Vec<u64>> = gen.to_u64_rows();
    let mut word = vec![0u64; n];
    let mut digits = vec![0u64; dim];
    let mut best = n;
    // Odometer: bumping digit i adds row i; a wrap adds it a q-th time, which is zero.
    loop {
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(best);
            }
            for (w, &g) in word.iter_mut().zip(&rows[i]) {
                *w = (*w + g) % q;
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let wt = word.iter().filter(|&&w| w != 0).count();
        if wt > 0 && wt < best {
            best = wt;
        }
    }
}

/// Every `k`-subset of columns of the generator matrix is invertible.
/// Returns the first failing subset.
pub fn exhaustive_mds_check<C: LinearCode + ?Sized>(code: &C) -> Option<Vec<usize>> {
    let gen = code.generator_matrix();
    let k = code.dimension();
    let n = code.length();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if gen.select_columns(&subset).rank() < k {
            return Some(subset);
        }
        let Some(pos) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            return None;
        };
        subset[pos] += 1;
        for j in pos + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f19() -> PrimeField {
        PrimeField::new(19).unwrap()
    }

    fn example1_initial() -> GrsCode {
        let f = f19();
        GrsCode::rs(EvaluationSet::from_u64(f, &[1, 8, 7, 18, 4, 9]).unwrap(), 4).unwrap()
    }

    fn example2_initial() -> LrcCode {
        let f = f19();
        let groups = [[1, 7, 11], [8, 18, 12], [4, 9, 6]]
            .iter()
            .map(|g| EvaluationSet::from_u64(f, g).unwrap())
            .collect();
        LrcCode::plain(groups, XGBasis::power(f, 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn grs_identity_polynomial() {
        let f = f19();
        let code = example1_initial();
        let w = code.encode(&f.elems(&[0, 1, 0, 0])).unwrap();
        assert_eq!(w.values(), vec![1, 8, 7, 18, 4, 9]);
        assert_eq!(code.encode(&f.elems(&[0, 0, 0, 0])).unwrap().weight(), 0);
    }

    #[test]
    fn grs_decode_under_erasures() {
        let f = f19();
        let code = example1_initial();
        let msg = f.elems(&[3, 1, 4, 1]);
        let w = code.encode(&msg).unwrap();
        assert_eq!(code.decode_erasures(&w.pairs()).unwrap(), msg);
        assert_eq!(code.decode_erasures(&w.pairs()[2..]).unwrap(), msg);
        assert!(matches!(
            code.decode_erasures(&w.pairs()[3..]),
            Err(CodeError::Dimension(_))
        ));
        let mut bad = w.symbols().to_vec();
        bad[5] += f.one();
        let bad = w.with_symbols(bad).unwrap();
        assert_eq!(code.check_membership(&bad), Err(CodeError::InconsistentSymbols(5)));
    }

    #[test]
    fn lrc_encodes_g() {
        let f = f19();
        let code = example2_initial();
        let w = code.encode(&f.elems(&[0, 0, 1, 0])).unwrap();
        assert_eq!(w.values(), vec![1, 1, 1, 18, 18, 18, 7, 7, 7]);
        let ones = code.encode(&f.elems(&[1, 0, 0, 0])).unwrap();
        assert!(ones.symbols().iter().all(|&s| s == f.one()));
    }

    #[test]
    fn good_polynomial_reports() {
        let f = f19();
        let groups: Vec<EvaluationSet> = [[1, 7, 11], [8, 18, 12], [2, 14, 3], [16, 17, 5], [4, 9, 6]]
            .iter()
            .map(|g| EvaluationSet::from_u64(f, g).unwrap())
            .collect();
        let rep = check_good_polynomial(&Polynomial::from_u64(f, &[0, 0, 0, 1]), &groups);
        assert!(rep.passed);
        let consts: Vec<u64> = rep.constants.iter().map(|c| c.unwrap().value()).collect();
        assert_eq!(consts, vec![1, 18, 8, 11, 7]);
        let rep = check_good_polynomial(&Polynomial::from_u64(f, &[0, 1]), &groups);
        assert!(!rep.passed);
        let bad = LrcCode::plain(
            groups[..3].to_vec(),
            XGBasis::new(Polynomial::from_u64(f, &[0, 1, 1, 1]), 2, 2).unwrap(),
        );
        assert!(matches!(bad, Err(CodeError::Parameter(_))));
    }

    #[test]
    fn lrc_repair_sweep() {
        let f = f19();
        let code = example2_initial();
        let w = code.encode(&f.elems(&[5, 17, 2, 9])).unwrap();
        for c in 0..w.len() {
            let mut erased: Vec<Option<FieldElem>> = w.symbols().iter().copied().map(Some).collect();
            erased[c] = None;
            let tracked = crate::access::Tracked::new(&erased);
            assert_eq!(code.lrc_repair(&tracked, c).unwrap(), w.get(c));
            assert!(tracked.reads().iter().all(|&x| code.group_of(x) == code.group_of(c)));
            assert_eq!(tracked.reads().len(), 2);
        }
        let mut two: Vec<Option<FieldElem>> = w.symbols().iter().copied().map(Some).collect();
        two[6] = None;
        two[7] = None;
        assert_eq!(
            code.lrc_repair(&two, 8),
            Err(CodeError::InsufficientGroup { coord: 8, other: 6 })
        );
    }

    #[test]
    fn lrc_locality_and_decode() {
        let f = f19();
        let code = example2_initial();
        assert!(code.check_locality().passed());
        let msg = f.elems(&[1, 2, 3, 4]);
        let w = code.encode(&msg).unwrap();
        assert_eq!(code.decode(&w.pairs()).unwrap(), msg);
    }

    #[test]
    fn brute_force_distances() {
        assert_eq!(min_distance_bruteforce(&example1_initial(), DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(min_distance_bruteforce(&example2_initial(), DEFAULT_BUDGET).unwrap(), 5);
        let f = f19();
        let big = GrsCode::rs(EvaluationSet::from_u64(f, &(1..=10).collect::<Vec<_>>()).unwrap(), 8).unwrap();
        assert!(matches!(
            min_distance_bruteforce(&big, DEFAULT_BUDGET),
            Err(CodeError::BudgetExceeded(..))
        ));
    }

    #[test]
    fn mds_subsets() {
        assert_eq!(exhaustive_mds_check(&example1_initial()), None);
        // The LRC is not MDS: a full group plus one point is dependent.
        assert!(exhaustive_mds_check(&example2_initial()).is_some());
    }

    proptest! {
        #[test]
        fn grs_round_trip(msg in proptest::collection::vec(0u64..19, 4), drop in proptest::collection::btree_set(0usize..6, 0..=2)) {
            let f = f19();
            let code = GrsCode::new(
                EvaluationSet::from_u64(f, &[1, 8, 7, 18, 4, 9]).unwrap(),
                f.elems(&[3, 5, 7, 11, 13, 17]),
                4,
            ).unwrap();
            let m = f.elems(&msg);
            let w = code.encode(&m).unwrap();
            let known: Vec<_> = w.pairs().into_iter().filter(|(c, _)| !drop.contains(c)).collect();
            prop_assert_eq!(code.decode_erasures(&known).unwrap(), m);
        }

        #[test]
        fn lrc_round_trip(msg in proptest::collection::vec(0u64..19, 4)) {
            let f = f19();
            let code = example2_initial();
            let m = f.elems(&msg);
            let w = code.encode(&m).unwrap();
            prop_assert_eq!(code.decode(&w.pairs()).unwrap(), m);
            prop_assert!(code.is_codeword(&w));
        }
    }
}
