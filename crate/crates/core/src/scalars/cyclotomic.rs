//! Elements of the cyclotomic fields ℚ(ζ_L), stored as reduced residues
//! modulo the cyclotomic polynomial Φ_L.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::{inverse_mod, reduce_monic, QPoly};
use crate::error::{Error, Result};

static CYCLOTOMIC_POLYS: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Coefficients of Φ_L in ascending degree order.
///
/// Computed by dividing x^L − 1 by Φ_k for every proper divisor k of L.
pub fn cyclotomic_polynomial(order: u32) -> Arc<Vec<BigInt>> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let cache = CYCLOTOMIC_POLYS.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&order) {
        return p.clone();
    }
    let mut num: Vec<BigInt> = vec![BigInt::zero(); order as usize + 1];
    num[0] = -BigInt::one();
    num[order as usize] = BigInt::one();
    for k in 1..order {
        if order.is_multiple_of(k) {
            let div = cyclotomic_polynomial(k);
            num = exact_div_monic(&num, &div);
        }
    }
    let poly = Arc::new(num);
    cache.write().unwrap().insert(order, poly.clone());
    poly
}

fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for top in (db..a.len()).rev() {
        let c = r[top].clone();
        if c.is_zero() {
            continue;
        }
        let shift = top - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Euler's totient, the degree of Φ_L.
pub fn euler_phi(order: u32) -> usize {
    cyclotomic_polynomial(order).len() - 1
}

/// An element of ℚ(ζ_L) with ζ_L = exp(2πi/L).
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        CyclotomicNumber { order, coeffs: vec![BigRational::zero(); euler_phi(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational_in(BigRational::one(), order)
    }

    pub fn from_rational(r: BigRational) -> Self {
        CyclotomicNumber { order: 1, coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational_in(r: BigRational, order: u32) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = r;
        c
    }

    /// Build from an arbitrary coefficient vector in powers of ζ_L; reduces mod Φ_L.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        let mut p = coeffs;
        reduce_monic(&mut p, &cyclotomic_polynomial(order));
        CyclotomicNumber { order, coeffs: p }
    }

    /// ζ_L^k reduced mod Φ_L (k taken mod L).
    pub fn root(order: u32, k: i64) -> Self {
        assert!(order >= 1);
        let e = k.rem_euclid(order as i64) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        Self::from_coeffs(order, p)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the number lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-express in ℚ(ζ_M) for a multiple M of the current order.
    pub fn embed(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(target.is_multiple_of(self.order), "cannot embed order {} into {}", self.order, target);
        let step = (target / self.order) as usize;
        if self.as_rational().is_some() {
            return Self::from_rational_in(self.coeffs[0].clone(), target);
        }
        let mut p = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Self::from_coeffs(target, p)
    }

    pub(crate) fn unify(a: &Self, b: &Self) -> (Self, Self) {
        let l = a.order.lcm(&b.order);
        (a.embed(l), b.embed(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = Self::unify(self, other);
            return a.add(&b);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicNumber { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|x| x * r).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        if self.order != other.order {
            let (a, b) = Self::unify(self, other);
            return a.mul(&b);
        }
        let n = self.coeffs.len();
        let mut p: QPoly = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        Self::from_coeffs(self.order, p)
    }

    pub fn inv(&self) -> Result<Self> {
        if let Some(r) = self.as_rational() {
            if r.is_zero() {
                return Err(Error::DivideByZero);
            }
            return Ok(Self::from_rational_in(r.recip(), self.order));
        }
        let m = cyclotomic_polynomial(self.order);
        let inv = inverse_mod(&self.coeffs, &m).ok_or(Error::DivideByZero)?;
        Ok(CyclotomicNumber { order: self.order, coeffs: inv })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CyclotomicNumber {
    /// Sum of `c*E(L)^i` terms, GAP style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", fmt_rational(r));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("E({})", self.order),
                _ => format!("E({})^{}", self.order, i),
            };
            if i == 0 {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", root)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), root)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(n)
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        let as_i64 = |l| cyclotomic_polynomial(l).iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn root_examples() {
        assert!(CyclotomicNumber::root(1, 0).is_one());
        assert_eq!(CyclotomicNumber::root(2, 1), int(-1));
        let s = CyclotomicNumber::root(3, 1).add(&CyclotomicNumber::root(3, 2));
        assert_eq!(s, int(-1));
    }

    #[test]
    fn roots_are_roots_and_sum_to_zero() {
        for l in 1..=12u32 {
            let mut sum = CyclotomicNumber::zero(l);
            for k in 0..l as i64 {
                let z = CyclotomicNumber::root(l, k);
                assert!(z.pow(l as u64).is_one(), "ζ_{l}^{k} to the {l}");
                sum = sum.add(&z);
            }
            if l > 1 {
                assert!(sum.is_zero(), "sum of {l}-th roots");
            }
        }
    }

    #[test]
    fn inverse_and_embedding() {
        let z = CyclotomicNumber::root(5, 2);
        let x = z.add(&int(3));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
        // ζ_4^2 = -1 = ζ_2 across orders
        assert_eq!(CyclotomicNumber::root(4, 2), CyclotomicNumber::root(2, 1));
        assert_eq!(CyclotomicNumber::root(3, 1).embed(6), CyclotomicNumber::root(6, 2));
        assert_eq!(CyclotomicNumber::root(4, 1).mul(&CyclotomicNumber::root(3, 1)), CyclotomicNumber::root(12, 7));
        assert_eq!(int(0).inv(), Err(Error::DivideByZero));
    }

    #[test]
    fn product_of_one_minus_roots_is_d() {
        for d in 2..=7u32 {
            let mut p = int(1);
            for k in 1..d as i64 {
                p = p.mul(&int(1).sub(&CyclotomicNumber::root(d, k)));
            }
            assert_eq!(p, int(d as i64));
        }
    }
}
