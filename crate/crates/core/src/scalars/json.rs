//! JSON encodings of the scalar types.
//!
//! A Laurent polynomial is a list of `[exponent, [c_0, c_1, ...]]` pairs in
//! ascending exponent order, where `c_i` is the rational coefficient of ζ_L^i
//! written as `"p/q"` (or `"p"`). A rational function carries the order L
//! that both parts are expressed in.

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyclotomic::{fmt_rational, CyclotomicNumber};
use super::laurent::LaurentPolynomial;
use super::ratfunc::RationalFunction;

type RawLaurent = Vec<(i64, Vec<String>)>;

fn raw_laurent(p: &LaurentPolynomial, order: u32) -> RawLaurent {
    p.embed(order).terms().map(|(e, c)| (e, c.coeffs().iter().map(fmt_rational).collect())).collect()
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d = d.trim().parse().ok()?;
            if d == num_bigint::BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

fn from_raw(raw: &RawLaurent, order: u32) -> Option<LaurentPolynomial> {
    let mut terms = Vec::with_capacity(raw.len());
    for (e, coeffs) in raw {
        let cs = coeffs.iter().map(|s| parse_rational(s)).collect::<Option<Vec<_>>>()?;
        terms.push((*e, CyclotomicNumber::from_coeffs(order, cs)));
    }
    Some(LaurentPolynomial::from_terms(terms))
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        raw_laurent(self, self.order()).serialize(s)
    }
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    num: RawLaurent,
    den: RawLaurent,
    order: u32,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let order = num_integer::lcm(self.numer().order(), self.denom().order());
        RawRational { num: raw_laurent(self.numer(), order), den: raw_laurent(self.denom(), order), order }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawRational::deserialize(d)?;
        if raw.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let num = from_raw(&raw.num, raw.order).ok_or_else(|| D::Error::custom("bad coefficient"))?;
        let den = from_raw(&raw.den, raw.order).ok_or_else(|| D::Error::custom("bad coefficient"))?;
        RationalFunction::new(num, den).map_err(D::Error::custom)
    }
}
