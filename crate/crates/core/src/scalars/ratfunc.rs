use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;

use super::cyclotomic::CyclotomicNumber;
use super::laurent::{poly_divrem, poly_gcd, LaurentPolynomial};
use crate::error::{Error, Result};

/// An element of ℚ(ζ)(q) in canonical form.
///
/// The denominator is an ordinary monic polynomial with nonzero constant
/// term and no common factor with the numerator, so two values are equal as
/// field elements exactly when their parts are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: LaurentPolynomial::zero(), den: LaurentPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPolynomial::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::from_integer(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_laurent(LaurentPolynomial::from_rational(r))
    }

    pub fn from_cyclotomic(c: CyclotomicNumber) -> Self {
        Self::from_laurent(LaurentPolynomial::constant(c))
    }

    /// q^e
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::q_pow(e))
    }

    /// q − q⁻¹
    pub fn q_minus_q_inv() -> Self {
        Self::from_laurent(LaurentPolynomial::from_int_terms(&[(1, 1), (-1, -1)]))
    }

    pub fn from_laurent(num: LaurentPolynomial) -> Self {
        RationalFunction { num, den: LaurentPolynomial::one() }
    }

    /// num/den reduced to canonical form.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivideByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let order = num.order().lcm(&den.order());
        let num = num.embed(order);
        let den = den.embed(order);
        let shift = num.min_exp() - den.min_exp();
        let mut n = num.dense_coeffs().to_vec();
        let mut d = den.dense_coeffs().to_vec();
        if d.len() > 1 {
            let g = poly_gcd(&n, &d);
            if g.len() > 1 {
                n = poly_divrem(&n, &g)?.0;
                d = poly_divrem(&d, &g)?.0;
            }
        }
        let lc_inv = d.last().expect("nonzero denominator").inv()?;
        if !lc_inv.is_one() {
            n = n.iter().map(|c| c.mul(&lc_inv)).collect();
            d = d.iter().map(|c| c.mul(&lc_inv)).collect();
        }
        Ok(RationalFunction {
            num: LaurentPolynomial::from_dense(order, shift, n),
            den: LaurentPolynomial::from_dense(order, 0, d),
        })
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.add(&other.num));
        }
        let res = if self.den == other.den {
            Self::new(self.num.add(&other.num), self.den.clone())
        } else {
            Self::new(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
        };
        res.expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// ϑ(f) with ϑ(q) = qbar.
    pub fn evaluate(&self, qbar: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let d = self.den.evaluate(qbar)?;
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        self.num.evaluate(qbar)?.div(&d)
    }
}

/// Least common multiple of two canonical denominators.
pub(crate) fn denominator_lcm(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    if a.is_one() || a == b {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let order = a.order().lcm(&b.order());
    let (a, b) = (a.embed(order), b.embed(order));
    let g = poly_gcd(a.dense_coeffs(), b.dense_coeffs());
    let cofactor = poly_divrem(b.dense_coeffs(), &g).expect("nonzero gcd").0;
    a.mul(&LaurentPolynomial::from_dense(order, 0, cofactor))
}

/// a / b for an ordinary polynomial b known to divide a.
pub(crate) fn exact_quotient(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    if b.is_one() {
        return a.clone();
    }
    let order = a.order().lcm(&b.order());
    let (a, b) = (a.embed(order), b.embed(order));
    let (q, r) = poly_divrem(a.dense_coeffs(), b.dense_coeffs()).expect("nonzero divisor");
    debug_assert!(r.iter().all(CyclotomicNumber::is_zero));
    LaurentPolynomial::from_dense(order, a.min_exp() - b.min_exp(), q)
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                RationalFunction::$m(self, rhs)
            }
        }
        impl std::ops::$tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                RationalFunction::$m(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(terms)
    }

    fn rf(terms: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::from_laurent(lp(terms))
    }

    #[test]
    fn polynomial_identity() {
        let a = rf(&[(1, 1), (-1, -1)]);
        let b = rf(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, rf(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn cancellation_to_one() {
        let x = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert!(x.is_one());
    }

    #[test]
    fn seminormal_diagonal_entry_simplifies_to_q() {
        // q^2 (q - q^-1) / (q^2 - 1) = q
        let x = RationalFunction::new(lp(&[(3, 1), (1, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(x, RationalFunction::q_pow(1));
    }

    #[test]
    fn canonical_denominator_is_monic_with_constant_term() {
        let x = RationalFunction::new(lp(&[(0, 3)]), lp(&[(3, 2), (1, -2)])).unwrap();
        // 3 / (2q^3 - 2q) = (3/2) q^-1 / (q^2 - 1)
        assert_eq!(x.denom(), &lp(&[(2, 1), (0, -1)]));
        assert_eq!(x.numer().min_exp(), -1);
        assert_eq!(x.to_string(), "(3/2*q^-1)/(q^2-1)");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(rf(&[(0, 1)]).div(&RationalFunction::zero()), Err(Error::DivideByZero));
        assert_eq!(RationalFunction::new(lp(&[(0, 1)]), LaurentPolynomial::zero()), Err(Error::DivideByZero));
    }

    #[test]
    fn evaluation_examples() {
        let one = CyclotomicNumber::from_integer(1);
        assert_eq!(rf(&[(2, 1), (0, 1)]).evaluate(&one).unwrap(), CyclotomicNumber::from_integer(2));
        assert!(rf(&[(2, 1), (0, 1)]).evaluate(&CyclotomicNumber::root(4, 1)).unwrap().is_zero());
        let pole = RationalFunction::new(lp(&[(0, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(pole.evaluate(&one), Err(Error::PoleAtSpecialization));
    }

    #[test]
    fn cyclotomic_coefficients_cancel() {
        // (q - ζ3)(q + 1) / (q - ζ3) = q + 1
        let z = CyclotomicNumber::root(3, 1);
        let lin = LaurentPolynomial::q_pow(1).sub(&LaurentPolynomial::constant(z));
        let num = lin.mul(&lp(&[(1, 1), (0, 1)]));
        let x = RationalFunction::new(num, lin).unwrap();
        assert_eq!(x, rf(&[(1, 1), (0, 1)]));
    }
}
