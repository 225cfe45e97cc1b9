//! Prime field arithmetic and multiplicative subgroup discovery.
//!
//! Every element carries its modulus, so mixing elements of two different
//! fields is caught at the first arithmetic operation. Moduli are kept below
//! 2^31, which lets every product fit in a `u64` before reduction.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{CodeError, Result};

/// Upper bound (exclusive) on supported moduli.
pub const MODULUS_CEILING: u64 = 1 << 31;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

/// A residue in `[0, p)` together with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    value: u32,
    modulus: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..MODULUS_CEILING).contains(&p) {
            return Err(CodeError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(CodeError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(self) -> u64 {
        self.p as u64
    }

    /// Reduces `v` modulo `p`.
    pub fn elem(self, v: u64) -> FieldElem {
        FieldElem {
            value: (v % self.p as u64) as u32,
            modulus: self.p,
        }
    }

    pub fn from_i64(self, v: i64) -> FieldElem {
        let p = self.p as i64;
        self.elem(v.rem_euclid(p) as u64)
    }

    pub fn zero(self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(self) -> FieldElem {
        self.elem(1)
    }

    pub fn elems(self, values: &[u64]) -> Vec<FieldElem> {
        values.iter().map(|&v| self.elem(v)).collect()
    }

    /// All `p` elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = FieldElem> {
        (0..self.p as u64).map(move |v| self.elem(v))
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> FieldElem {
        let p = self.modulus();
        if p == 2 {
            return self.one();
        }
        let factors = prime_factors(p - 1);
        (2..p)
            .map(|g| self.elem(g))
            .find(|g| factors.iter().all(|&l| g.pow((p - 1) / l) != self.one()))
            .expect("a prime field always has a primitive root")
    }

    /// Generator of the unique multiplicative subgroup of the given order.
    pub fn subgroup_generator(self, order: u64) -> Result<FieldElem> {
        let group_order = self.modulus() - 1;
        if order == 0 || group_order % order != 0 {
            return Err(CodeError::Divisibility { order, group_order });
        }
        Ok(self.primitive_root().pow(group_order / order))
    }

    /// Smallest divisor of `p - 1` that is at least `min_order`.
    pub fn smallest_subgroup_order_at_least(self, min_order: u64) -> Option<u64> {
        let group_order = self.modulus() - 1;
        (min_order.max(1)..=group_order).find(|d| group_order % d == 0)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// Smallest prime `p >= min_size` with `p = 1 (mod subgroup_order)`.
pub fn find_modulus(subgroup_order: u64, min_size: u64) -> Result<PrimeField> {
    find_modulus_below(subgroup_order, min_size, MODULUS_CEILING)
}

pub fn find_modulus_below(subgroup_order: u64, min_size: u64, ceiling: u64) -> Result<PrimeField> {
    if subgroup_order == 0 {
        return Err(CodeError::Parameter("subgroup order must be positive".into()));
    }
    let ceiling = ceiling.min(MODULUS_CEILING);
    let start = min_size.max(2);
    // first candidate >= start that is 1 mod m
    let rem = (start + subgroup_order - 1) % subgroup_order;
    let mut candidate = if rem == 0 { start } else { start + subgroup_order - rem };
    while candidate < ceiling {
        if is_prime(candidate) {
            return PrimeField::new(candidate);
        }
        candidate += subgroup_order;
    }
    Err(CodeError::SearchLimit {
        modulus: subgroup_order,
        min_size,
        ceiling,
    })
}

impl FieldElem {
    pub fn value(self) -> u64 {
        self.value as u64
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    #[inline]
    fn check(self, other: FieldElem) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic across fields F_{} and F_{}",
            self.modulus, other.modulus
        );
    }

    /// Square-and-multiply; `x^0 = 1` for every `x`, including zero.
    pub fn pow(self, mut exponent: u64) -> FieldElem {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exponent >>= 1;
        }
        FieldElem {
            value: acc as u32,
            modulus: self.modulus,
        }
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inverse(self) -> Option<FieldElem> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.field().from_i64(t0))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.modulus as u64 - 1;
        let mut order = n;
        for l in prime_factors(n) {
            while order % l == 0 && self.pow(order / l).value == 1 {
                order /= l;
            }
        }
        Some(order)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        self.check(rhs);
        let s = self.value as u64 + rhs.value as u64;
        let p = self.modulus as u64;
        FieldElem {
            value: if s >= p { s - p } else { s } as u32,
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        self.check(rhs);
        let p = self.modulus as u64;
        FieldElem {
            value: ((self.value as u64 + p - rhs.value as u64) % p) as u32,
            modulus: self.modulus,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        self.check(rhs);
        FieldElem {
            value: (self.value as u64 * rhs.value as u64 % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero.
    fn div(self, rhs: FieldElem) -> FieldElem {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.field().zero() - self
    }
}

impl AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElem {
    fn sub_assign(&mut self, rhs: FieldElem) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElem {
    fn mul_assign(&mut self, rhs: FieldElem) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f19() -> PrimeField {
        PrimeField::new(19).unwrap()
    }

    #[test]
    fn rejects_composites_and_range() {
        assert_eq!(PrimeField::new(21), Err(CodeError::NotPrime(21)));
        assert_eq!(PrimeField::new(1), Err(CodeError::ModulusOutOfRange(1)));
        assert!(PrimeField::new(MODULUS_CEILING).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn powers_of_two_in_f19() {
        let f = f19();
        let table = [1, 2, 4, 8, 16, 13, 7, 14, 9, 18, 17, 15, 11, 3, 6, 12, 5, 10];
        for (x, &v) in table.iter().enumerate() {
            assert_eq!(f.elem(2).pow(x as u64).value(), v, "2^{x}");
        }
        assert_eq!(f.elem(2).pow(5).value(), 13);
        assert_eq!(f.elem(2).pow(13).value(), 3);
        assert_eq!(f.zero().pow(0), f.one());
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(f19().primitive_root().value(), 2);
        assert_eq!(PrimeField::new(3).unwrap().primitive_root().value(), 2);
        assert_eq!(PrimeField::new(7).unwrap().primitive_root().value(), 3);
    }

    #[test]
    fn subgroup_generators() {
        let f = f19();
        assert_eq!(f.subgroup_generator(6).unwrap().value(), 8);
        assert_eq!(f.subgroup_generator(18).unwrap().value(), 2);
        let g9 = f.subgroup_generator(9).unwrap();
        assert_eq!(g9.value(), 4);
        assert_eq!(g9.multiplicative_order(), Some(9));
        assert!(matches!(f.subgroup_generator(4), Err(CodeError::Divisibility { .. })));
    }

    #[test]
    fn modulus_search() {
        assert_eq!(find_modulus(6, 19).unwrap().modulus(), 19);
        assert_eq!(find_modulus(6, 20).unwrap().modulus(), 31);
        assert_eq!(find_modulus(12, 2).unwrap().modulus(), 13);
        assert!(matches!(
            find_modulus_below(6, 20, 30),
            Err(CodeError::SearchLimit { .. })
        ));
    }

    #[test]
    #[should_panic(expected = "arithmetic across fields")]
    fn mixing_fields_panics() {
        let a = f19().elem(3);
        let b = PrimeField::new(7).unwrap().elem(3);
        let _ = a + b;
    }

    proptest! {
        #[test]
        fn inverse_and_fermat(v in 1u64..1_000_003) {
            let f = PrimeField::new(1_000_003).unwrap();
            let x = f.elem(v);
            prop_assert_eq!(x * x.inverse().unwrap(), f.one());
            prop_assert_eq!(x.pow(f.modulus() - 1), f.one());
        }

        #[test]
        fn subgroup_order_is_exact(idx in 0usize..8) {
            let f = PrimeField::new(7681).unwrap(); // 7680 = 2^9 * 3 * 5
            let orders = [2u64, 3, 5, 6, 10, 15, 256, 7680];
            let m = orders[idx];
            let g = f.subgroup_generator(m).unwrap();
            prop_assert_eq!(g.pow(m), f.one());
            for d in 1..m {
                if m % d == 0 {
                    prop_assert_ne!(g.pow(d), f.one());
                }
            }
        }
    }
}
