use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::cyclotomic::{fmt_rational, CyclotomicNumber};
use crate::error::{Error, Result};

/// A Laurent polynomial in q with coefficients in ℚ(ζ_L).
///
/// Stored densely from the lowest exponent; both ends are trimmed so the
/// lowest and highest stored coefficients are nonzero. All coefficients
/// live in the same cyclotomic field.
#[derive(Clone, Debug)]
pub struct LaurentPolynomial {
    order: u32,
    low: i64,
    coeffs: Vec<CyclotomicNumber>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { order: 1, low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::from_integer(1))
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(CyclotomicNumber::from_integer(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::constant(CyclotomicNumber::from_rational(r))
    }

    /// c·q^e
    pub fn monomial(c: CyclotomicNumber, e: i64) -> Self {
        let order = c.order();
        Self::normalize(order, e, vec![c])
    }

    /// q^e
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(CyclotomicNumber::from_integer(1), e)
    }

    /// Integer-coefficient Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(e, c)| acc.add(&Self::monomial(CyclotomicNumber::from_integer(c), e)))
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, CyclotomicNumber)>) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, (e, c)| acc.add(&Self::monomial(c, e)))
    }

    fn normalize(order: u32, mut low: i64, mut coeffs: Vec<CyclotomicNumber>) -> Self {
        while coeffs.last().is_some_and(CyclotomicNumber::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return LaurentPolynomial { order, low: 0, coeffs: Vec::new() };
        }
        coeffs.drain(..lead_zeros);
        low += lead_zeros as i64;
        for c in coeffs.iter_mut() {
            if c.order() != order {
                *c = c.embed(order);
            }
        }
        LaurentPolynomial { order, low, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> CyclotomicNumber {
        let idx = e - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            CyclotomicNumber::zero(self.order)
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &CyclotomicNumber)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&CyclotomicNumber> {
        self.coeffs.last()
    }

    /// True if all coefficients are rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }

    /// Re-express the coefficients in ℚ(ζ_M), M a multiple of the current order.
    pub fn embed(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        LaurentPolynomial { order: target, low: self.low, coeffs: self.coeffs.iter().map(|c| c.embed(target)).collect() }
    }

    fn common_order(&self, other: &Self) -> u32 {
        if self.is_zero() {
            other.order
        } else if other.is_zero() {
            self.order
        } else {
            self.order.lcm(&other.order)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let order = self.common_order(other);
        let low = self.low.min(other.low);
        let high = self.max_exp().max(other.max_exp());
        let mut coeffs = vec![CyclotomicNumber::zero(order); (high - low + 1) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = slot.add(c);
        }
        Self::normalize(order, low, coeffs)
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        if self.order == other.order && other.low >= self.low && other.max_exp() <= self.max_exp() {
            for (e, c) in other.terms() {
                let slot = &mut self.coeffs[(e - self.low) as usize];
                *slot = slot.add(c);
            }
            let coeffs = std::mem::take(&mut self.coeffs);
            *self = Self::normalize(self.order, self.low, coeffs);
        } else {
            *self = self.add(other);
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial { order: self.order, low: self.low, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let order = self.common_order(other);
        let mut coeffs = vec![CyclotomicNumber::zero(order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&x.mul(y));
                }
            }
        }
        Self::normalize(order, self.low + other.low, coeffs)
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let order = if self.is_zero() { c.order() } else { self.order.lcm(&c.order()) };
        Self::normalize(order, self.low, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&CyclotomicNumber::from_rational(r.clone()))
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { order: self.order, low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Substitute q ↦ q^k (k ≥ 1).
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// ϑ(f) for ϑ(q) = qbar, in the compositum of the two cyclotomic fields.
    pub fn evaluate(&self, qbar: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        if qbar.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        if self.is_zero() {
            return Ok(CyclotomicNumber::zero(qbar.order()));
        }
        // Horner on the ordinary part, then multiply by qbar^low
        let mut acc = CyclotomicNumber::zero(self.order.lcm(&qbar.order()));
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(qbar).add(c);
        }
        Ok(acc.mul(&qbar.powi(self.low)?))
    }

    /// Exponent-shifted view as an ordinary polynomial with nonzero constant term.
    pub(crate) fn dense_coeffs(&self) -> &[CyclotomicNumber] {
        &self.coeffs
    }

    pub(crate) fn from_dense(order: u32, low: i64, coeffs: Vec<CyclotomicNumber>) -> Self {
        Self::normalize(order, low, coeffs)
    }
}

impl PartialEq for LaurentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.low == other.low && self.coeffs == other.coeffs
    }
}

impl Eq for LaurentPolynomial {}

fn fmt_monomial(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{}", e),
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Descending exponents, e.g. `q^2+1`, `-q^-1`, `(1/2+1/2*E(4))*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (idx, (e, c)) in terms.iter().rev().enumerate() {
            let mono = fmt_monomial(*e);
            match c.as_rational() {
                Some(r) => {
                    let neg = r.is_negative();
                    if neg {
                        write!(f, "-")?;
                    } else if idx > 0 {
                        write!(f, "+")?;
                    }
                    let abs = r.abs();
                    if mono.is_empty() {
                        write!(f, "{}", fmt_rational(&abs))?;
                    } else if abs.is_one() {
                        write!(f, "{}", mono)?;
                    } else {
                        write!(f, "{}*{}", fmt_rational(&abs), mono)?;
                    }
                }
                None => {
                    if idx > 0 {
                        write!(f, "+")?;
                    }
                    if mono.is_empty() {
                        write!(f, "({})", c)?;
                    } else {
                        write!(f, "({})*{}", c, mono)?;
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Ordinary polynomial helpers (index = degree) over a common cyclotomic field.

pub(crate) type CPoly = Vec<CyclotomicNumber>;

fn ctrim(p: &mut CPoly) {
    while p.last().is_some_and(CyclotomicNumber::is_zero) {
        p.pop();
    }
}

pub(crate) fn poly_divrem(a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> Result<(CPoly, CPoly)> {
    let mut b = b.to_vec();
    ctrim(&mut b);
    if b.is_empty() {
        return Err(Error::DivideByZero);
    }
    let mut r = a.to_vec();
    ctrim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv()?;
    let order = b[db].order();
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![CyclotomicNumber::zero(order); r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = r[dr].mul(&lead_inv);
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                r[shift + i] = r[shift + i].sub(&c.mul(bi));
            }
        }
        q[shift] = c;
        ctrim(&mut r);
    }
    Ok((q, r))
}

pub(crate) fn poly_monic(p: &CPoly) -> CPoly {
    match p.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = lc.inv().expect("nonzero leading coefficient");
            p.iter().map(|c| c.mul(&inv)).collect()
        }
    }
}

/// Monic gcd by the Euclidean algorithm with monic remainders.
pub(crate) fn poly_gcd(a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> CPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ctrim(&mut x);
    ctrim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![CyclotomicNumber::one(y[0].order())];
        }
        let (_, r) = poly_divrem(&x, &y).expect("nonzero divisor");
        x = y;
        y = poly_monic(&r);
    }
    poly_monic(&x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(terms)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let b = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b), lp(&[(2, 1), (-2, -1)]));
        assert_eq!(lp(&[(2, 1), (0, 1)]).to_string(), "q^2+1");
        assert_eq!(lp(&[(-1, -1)]).to_string(), "-q^-1");
        assert_eq!(lp(&[(0, 1), (-2, 1)]).to_string(), "1+q^-2");
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.shift(1), lp(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn evaluation() {
        let f = lp(&[(2, 1), (0, 1)]);
        assert_eq!(f.evaluate(&CyclotomicNumber::from_integer(1)).unwrap(), CyclotomicNumber::from_integer(2));
        assert!(f.evaluate(&CyclotomicNumber::root(4, 1)).unwrap().is_zero());
        let g = lp(&[(-3, 2), (1, 1)]);
        let z = CyclotomicNumber::root(5, 1);
        let expected = CyclotomicNumber::from_integer(2).mul(&z.powi(-3).unwrap()).add(&z);
        assert_eq!(g.evaluate(&z).unwrap(), expected);
    }

    #[test]
    fn gcd_of_ordinary_polys() {
        // (q^2 - 1) and (q^3 - 1) share (q - 1)
        let to_c = |v: &[i64]| v.iter().map(|&x| CyclotomicNumber::from_integer(x)).collect::<CPoly>();
        let g = poly_gcd(&to_c(&[-1, 0, 1]), &to_c(&[-1, 0, 0, 1]));
        assert_eq!(g, to_c(&[-1, 1]));
    }
}
