//! Univariate polynomials over `F_p`, evaluation sets, interpolation and the
//! `x^t1 * g^t2` basis used by locally repairable codes.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CodeError, Result};
use crate::field::{FieldElem, PrimeField};
use crate::matrix::Matrix;

/// Coefficients in ascending degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<FieldElem>,
}

impl Polynomial {
    pub fn new(field: PrimeField, mut coeffs: Vec<FieldElem>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.field() == field),
            "arithmetic across fields"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_u64(field: PrimeField, coeffs: &[u64]) -> Self {
        Self::new(field, field.elems(coeffs))
    }

    pub fn zero(field: PrimeField) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The monomial `c * x^d`.
    pub fn monomial(c: FieldElem, d: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); d + 1];
        coeffs[d] = c;
        Self::new(c.field(), coeffs)
    }

    /// `x - a`.
    pub fn linear_root(a: FieldElem) -> Self {
        Self::new(a.field(), vec![-a, a.field().one()])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded_coeffs(&self, len: usize) -> Result<Vec<FieldElem>> {
        if self.coeffs.len() > len {
            return Err(CodeError::Dimension(format!(
                "polynomial of degree {} does not fit in {len} coefficients",
                self.coeffs.len() - 1
            )));
        }
        let mut out = self.coeffs.clone();
        out.resize(len, self.field.zero());
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn leading(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(self.field.zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElem) -> FieldElem {
        assert_eq!(x.field(), self.field, "arithmetic across fields");
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: FieldElem) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(self.field.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(self.field), |acc, &c| {
                &(&acc * inner) + &Polynomial::constant(c)
            })
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().inverse().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * lead_inv;
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
        (
            Polynomial::new(self.field, quot),
            Polynomial::new(self.field, rem),
        )
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, v) => write!(f, "{v}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "arithmetic across fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            self.field,
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "arithmetic across fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            self.field,
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        )
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "arithmetic across fields");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(self.field, out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// An ordered list of pairwise distinct field elements.
#[derive(Clone, PartialEq, Eq)]
pub struct EvaluationSet {
    field: PrimeField,
    points: Vec<FieldElem>,
}

impl EvaluationSet {
    pub fn new(field: PrimeField, points: Vec<FieldElem>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if p.field() != field {
                return Err(CodeError::FieldMismatch(field.modulus(), p.field().modulus()));
            }
            if !seen.insert(p.value()) {
                return Err(CodeError::DuplicatePoint(p.value()));
            }
        }
        Ok(EvaluationSet { field, points })
    }

    pub fn from_u64(field: PrimeField, points: &[u64]) -> Result<Self> {
        Self::new(field, field.elems(points))
    }

    pub fn empty(field: PrimeField) -> Self {
        EvaluationSet {
            field,
            points: Vec::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[FieldElem] {
        &self.points
    }

    pub fn values(&self) -> Vec<u64> {
        self.points.iter().map(|p| p.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        self.points.contains(&x)
    }

    pub fn is_disjoint(&self, other: &EvaluationSet) -> bool {
        self.points.iter().all(|p| !other.contains(*p))
    }

    /// Concatenation; fails if the sets overlap.
    pub fn union(&self, other: &EvaluationSet) -> Result<EvaluationSet> {
        let mut pts = self.points.clone();
        pts.extend_from_slice(&other.points);
        EvaluationSet::new(self.field, pts)
    }

    pub fn union_all<'a, I>(field: PrimeField, sets: I) -> Result<EvaluationSet>
    where
        I: IntoIterator<Item = &'a EvaluationSet>,
    {
        let pts = sets.into_iter().flat_map(|s| s.points.iter().copied()).collect();
        EvaluationSet::new(field, pts)
    }

    /// The set with `x` removed, order preserved.
    pub fn without(&self, x: FieldElem) -> EvaluationSet {
        EvaluationSet {
            field: self.field,
            points: self.points.iter().copied().filter(|&p| p != x).collect(),
        }
    }

    /// Every point multiplied by `c`.
    pub fn scaled(&self, c: FieldElem) -> Result<EvaluationSet> {
        EvaluationSet::new(self.field, self.points.iter().map(|&p| p * c).collect())
    }
}

impl fmt::Debug for EvaluationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.points)
    }
}

/// `h_S(x) = prod_{s in S} (x - s)`.
pub fn annihilator(set: &EvaluationSet) -> Polynomial {
    annihilator_of(set.field(), set.points())
}

pub fn annihilator_of(field: PrimeField, points: &[FieldElem]) -> Polynomial {
    points.iter().fold(Polynomial::constant(field.one()), |acc, &a| {
        &acc * &Polynomial::linear_root(a)
    })
}

/// Evaluates `h_S(x)` without expanding the product.
pub fn annihilator_eval(points: &[FieldElem], x: FieldElem) -> FieldElem {
    points.iter().fold(x.field().one(), |acc, &a| acc * (x - a))
}

/// `h_{S \ {x}}(x)` for a point `x` of `S`; nonzero since points are distinct.
pub fn annihilator_eval_excluding(points: &[FieldElem], x: FieldElem) -> FieldElem {
    points
        .iter()
        .filter(|&&a| a != x)
        .fold(x.field().one(), |acc, &a| acc * (x - a))
}

/// Lagrange interpolation through `(x, y)` pairs.
pub fn interpolate(field: PrimeField, pairs: &[(FieldElem, FieldElem)]) -> Result<Polynomial> {
    if pairs.is_empty() {
        return Err(CodeError::Dimension("interpolation needs at least one point".into()));
    }
    let mut seen = HashSet::with_capacity(pairs.len());
    for (x, _) in pairs {
        if !seen.insert(x.value()) {
            return Err(CodeError::DuplicateAbscissa(x.value()));
        }
    }
    let xs: Vec<FieldElem> = pairs.iter().map(|p| p.0).collect();
    let full = annihilator_of(field, &xs);
    let mut acc = Polynomial::zero(field);
    for &(x, y) in pairs {
        if y.is_zero() {
            continue;
        }
        let (basis, _) = full.div_rem(&Polynomial::linear_root(x));
        let denom = annihilator_eval_excluding(&xs, x);
        acc = &acc + &basis.scale(y / denom);
    }
    Ok(acc)
}

/// Value at `target` of the degree `< len` interpolant, computed with the
/// Lagrange weights directly.
pub fn interpolate_at(pairs: &[(FieldElem, FieldElem)], target: FieldElem) -> FieldElem {
    let xs: Vec<FieldElem> = pairs.iter().map(|p| p.0).collect();
    pairs.iter().fold(target.field().zero(), |acc, &(x, y)| {
        let others: Vec<FieldElem> = xs.iter().copied().filter(|&a| a != x).collect();
        acc + y * annihilator_eval(&others, target) / annihilator_eval(&others, x)
    })
}

/// The `t x |S|` matrix with entry `(i, j) = s_j^i` (0-based).
pub fn vandermonde(set: &EvaluationSet, t: usize) -> Matrix {
    vandermonde_of(set.field(), set.points(), t)
}

pub fn vandermonde_of(field: PrimeField, points: &[FieldElem], t: usize) -> Matrix {
    let mut m = Matrix::zeros(field, t, points.len());
    for (j, &p) in points.iter().enumerate() {
        let mut v = field.one();
        for i in 0..t {
            m.set(i, j, v);
            v *= p;
        }
    }
    m
}

/// `(1, x, ..., x^{t-1})`.
pub fn power_vector(x: FieldElem, t: usize) -> Vec<FieldElem> {
    let mut out = Vec::with_capacity(t);
    let mut v = x.field().one();
    for _ in 0..t {
        out.push(v);
        v *= x;
    }
    out
}

/// The basis `{x^t1 g^t2 : t1 < r, t2 < k}` of `V_{k,r}`, stored at index
/// `t2 * r + t1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XGBasis {
    g: Polynomial,
    r: usize,
    k: usize,
}

impl XGBasis {
    pub fn new(g: Polynomial, r: usize, k: usize) -> Result<Self> {
        if r == 0 {
            return Err(CodeError::Parameter("locality r must be positive".into()));
        }
        if g.degree() != Some(r + 1) {
            return Err(CodeError::Parameter(format!(
                "good polynomial must have degree r + 1 = {}, got {:?}",
                r + 1,
                g.degree()
            )));
        }
        Ok(XGBasis { g, r, k })
    }

    /// Basis for `g = x^{r+1}`.
    pub fn power(field: PrimeField, r: usize, k: usize) -> Result<Self> {
        Self::new(Polynomial::monomial(field.one(), r + 1), r, k)
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.k * self.r
    }

    pub fn field(&self) -> PrimeField {
        self.g.field()
    }

    /// Same `g` and `r`, different block count.
    pub fn with_k(&self, k: usize) -> XGBasis {
        XGBasis {
            g: self.g.clone(),
            r: self.r,
            k,
        }
    }

    /// Entry `t2 * r + t1` is `x^t1 * g(x)^t2`.
    pub fn xg_vector(&self, point: FieldElem) -> Vec<FieldElem> {
        let xs = power_vector(point, self.r);
        let gs = power_vector(self.g.eval(point), self.k);
        gs.iter()
            .flat_map(|&gv| xs.iter().map(move |&xv| xv * gv))
            .collect()
    }

    pub fn to_monomial(&self, coeffs: &[FieldElem]) -> Result<Polynomial> {
        if coeffs.len() != self.dim() {
            return Err(CodeError::Dimension(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        let field = self.field();
        let mut acc = Polynomial::zero(field);
        let mut gpow = Polynomial::constant(field.one());
        for t2 in 0..self.k {
            let block = Polynomial::new(field, coeffs[t2 * self.r..(t2 + 1) * self.r].to_vec());
            acc = &acc + &(&block * &gpow);
            gpow = &gpow * &self.g;
        }
        Ok(acc)
    }

    /// Expansion of `f` in the `g`-adic basis; fails if `f` is outside `V_{k,r}`.
    pub fn from_monomial(&self, f: &Polynomial) -> Result<Vec<FieldElem>> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        let mut rest = f.clone();
        for t2 in 0..self.k {
            let (q, rem) = rest.div_rem(&self.g);
            if rem.degree().is_some_and(|d| d >= self.r) {
                return Err(CodeError::Dimension(format!(
                    "g-adic digit of degree {} exceeds r - 1",
                    rem.degree().unwrap()
                )));
            }
            for (t1, &c) in rem.coeffs().iter().enumerate() {
                out[t2 * self.r + t1] = c;
            }
            rest = q;
        }
        if !rest.is_zero() {
            return Err(CodeError::Dimension(format!(
                "polynomial of degree {:?} is outside V_{{{},{}}}",
                f.degree(),
                self.k,
                self.r
            )));
        }
        Ok(out)
    }

    /// Evaluates the element with coordinates `coeffs` at `x`.
    pub fn eval(&self, coeffs: &[FieldElem], x: FieldElem) -> FieldElem {
        crate::matrix::dot(self.field(), coeffs, &self.xg_vector(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f19() -> PrimeField {
        PrimeField::new(19).unwrap()
    }

    fn cube(f: PrimeField) -> Polynomial {
        Polynomial::from_u64(f, &[0, 0, 0, 1])
    }

    #[test]
    fn evaluation_examples() {
        let f = f19();
        assert_eq!(cube(f).eval(f.elem(7)).value(), 1);
        assert_eq!(cube(f).eval(f.elem(2)).value(), 8);
        assert_eq!(Polynomial::zero(f).eval(f.elem(5)).value(), 0);
    }

    #[test]
    fn annihilator_examples() {
        let f = f19();
        let h = annihilator(&EvaluationSet::from_u64(f, &[4, 9]).unwrap());
        assert_eq!(h, Polynomial::from_u64(f, &[17, 6, 1]));
        let s = EvaluationSet::from_u64(f, &[1, 8, 7, 18]).unwrap();
        let h = annihilator(&s);
        assert_eq!(h.degree(), Some(4));
        assert_eq!(h.leading(), f.one());
        for x in f.elements() {
            assert_eq!(h.eval(x).is_zero(), s.contains(x));
        }
        let single = annihilator(&EvaluationSet::from_u64(f, &[3]).unwrap());
        assert_eq!(single, Polynomial::from_u64(f, &[16, 1]));
    }

    #[test]
    fn compose_examples() {
        let f = f19();
        let xm1 = Polynomial::from_u64(f, &[18, 1]);
        assert_eq!(xm1.compose(&cube(f)), Polynomial::from_u64(f, &[18, 0, 0, 1]));
        let h = annihilator(&EvaluationSet::from_u64(f, &[1, 18]).unwrap());
        let expect = &Polynomial::from_u64(f, &[18, 0, 0, 1]) * &Polynomial::from_u64(f, &[1, 0, 0, 1]);
        assert_eq!(h.compose(&cube(f)), expect);
        let c = Polynomial::from_u64(f, &[5]);
        assert_eq!(c.compose(&xm1), c);
    }

    #[test]
    fn duplicate_rejected() {
        let f = f19();
        let pairs = vec![(f.elem(1), f.elem(2)), (f.elem(1), f.elem(3))];
        assert_eq!(interpolate(f, &pairs), Err(CodeError::DuplicateAbscissa(1)));
        assert_eq!(
            EvaluationSet::from_u64(f, &[2, 3, 2]),
            Err(CodeError::DuplicatePoint(2))
        );
    }

    #[test]
    fn single_point_interpolation_is_constant() {
        let f = f19();
        let p = interpolate(f, &[(f.elem(4), f.elem(11))]).unwrap();
        assert_eq!(p, Polynomial::from_u64(f, &[11]));
    }

    #[test]
    fn vandermonde_examples() {
        let f = f19();
        let one = vandermonde(&EvaluationSet::from_u64(f, &[6]).unwrap(), 1);
        assert_eq!(one.to_u64_rows(), vec![vec![1]]);
        let s = EvaluationSet::from_u64(f, &[1, 8, 7, 18]).unwrap();
        let v = vandermonde(&s, 4);
        for (j, &p) in s.points().iter().enumerate() {
            assert_eq!(v.column(j), power_vector(p, 4));
        }
        assert_eq!(v.rank(), 4);
    }

    #[test]
    fn xg_vector_examples() {
        let f = f19();
        let b = XGBasis::power(f, 2, 2).unwrap();
        assert_eq!(b.xg_vector(f.elem(2)), f.elems(&[1, 2, 8, 16]));
        let b1 = XGBasis::power(f, 3, 1).unwrap();
        assert_eq!(b1.xg_vector(f.elem(5)), f.elems(&[1, 5, 6]));
        let one = b.to_monomial(&f.elems(&[1, 0, 0, 0])).unwrap();
        assert_eq!(one, Polynomial::from_u64(f, &[1]));
        let xg = b.to_monomial(&f.elems(&[0, 0, 0, 1])).unwrap();
        assert_eq!(xg, Polynomial::from_u64(f, &[0, 0, 0, 0, 1]));
        assert!(b.to_monomial(&f.elems(&[1, 0, 0])).is_err());
        assert!(XGBasis::new(Polynomial::from_u64(f, &[0, 1]), 2, 2).is_err());
    }

    #[test]
    fn basis_monomials_independent() {
        let f = PrimeField::new(31).unwrap();
        for r in 1..4 {
            for k in 1..4 {
                let mut g = vec![0u64; r + 2];
                g[0] = 3;
                g[1] = 5;
                g[r + 1] = 1;
                let b = XGBasis::new(Polynomial::from_u64(f, &g), r, k).unwrap();
                let rows: Vec<Vec<FieldElem>> = (0..b.dim())
                    .map(|i| {
                        let mut e = vec![f.zero(); b.dim()];
                        e[i] = f.one();
                        b.to_monomial(&e).unwrap().padded_coeffs(b.dim() + k + 1).unwrap()
                    })
                    .collect();
                assert_eq!(Matrix::from_rows(f, &rows).unwrap().rank(), b.dim());
            }
        }
    }

    #[test]
    fn annihilator_vanishes_exactly() {
        let f = PrimeField::new(97).unwrap();
        let s = EvaluationSet::from_u64(f, &[3, 14, 15, 92, 65]).unwrap();
        let h = annihilator(&s);
        for x in f.elements() {
            assert_eq!(h.eval(x).is_zero(), s.contains(x));
        }
    }

    proptest! {
        #[test]
        fn interpolation_round_trip(coeffs in proptest::collection::vec(0u64..101, 4), extra in 0usize..3) {
            let f = PrimeField::new(101).unwrap();
            let p = Polynomial::from_u64(f, &coeffs);
            let pairs: Vec<_> = (0..4 + extra as u64)
                .map(|x| (f.elem(x * 7 + 1), p.eval(f.elem(x * 7 + 1))))
                .collect();
            let back = interpolate(f, &pairs).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(interpolate_at(&pairs, f.elem(55)), p.eval(f.elem(55)));
        }

        #[test]
        fn div_rem_reconstructs(a in proptest::collection::vec(0u64..31, 0..8), b in proptest::collection::vec(0u64..31, 1..5)) {
            let f = PrimeField::new(31).unwrap();
            let a = Polynomial::from_u64(f, &a);
            let b = Polynomial::from_u64(f, &b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&(&q * &b) + &r), &a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn xg_dot_matches_evaluation(v in proptest::collection::vec(0u64..31, 6), pts in proptest::collection::vec(0u64..31, 10)) {
            let f = PrimeField::new(31).unwrap();
            let b = XGBasis::power(f, 2, 3).unwrap();
            let coeffs = f.elems(&v);
            let p = b.to_monomial(&coeffs).unwrap();
            for x in pts {
                let x = f.elem(x);
                prop_assert_eq!(b.eval(&coeffs, x), p.eval(x));
            }
            prop_assert_eq!(b.from_monomial(&p).unwrap(), coeffs);
        }
    }
}
