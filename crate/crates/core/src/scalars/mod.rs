//! Exact scalars: ℚ(ζ_L), Laurent polynomials in q over it, and the
//! rational function field ℚ(ζ_L)(q).

pub mod cyclotomic;
mod json;
pub mod laurent;
mod qpoly;
pub mod ratfunc;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicNumber};
pub use laurent::LaurentPolynomial;
pub use ratfunc::RationalFunction;

/// [m]_{q²} = 1 + q² + … + q^{2(m−1)}
pub fn q2_integer(m: u32) -> LaurentPolynomial {
    LaurentPolynomial::from_terms((0..m as i64).map(|i| (2 * i, CyclotomicNumber::from_integer(1))))
}

/// {m}_q = q^m − q^{−m} divided by q − q⁻¹, i.e. q^{m−1} + q^{m−3} + … + q^{1−m}
pub fn q_balanced_integer(m: u32) -> LaurentPolynomial {
    let m = m as i64;
    LaurentPolynomial::from_terms((0..m).map(|i| (m - 1 - 2 * i, CyclotomicNumber::from_integer(1))))
}

/// The content scalar q^{2m}.
pub fn content_scalar(m: i64) -> RationalFunction {
    RationalFunction::q_pow(2 * m)
}
