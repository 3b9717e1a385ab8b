//! Dense univariate polynomials over `BigRational`, index = degree.
//!
//! Only what the cyclotomic layer needs: reduction modulo a monic integer
//! polynomial and modular inversion by the extended Euclidean algorithm.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Reduce `p` modulo the monic polynomial `m` (integer coefficients), in place.
/// The result has exactly `deg(m)` slots (zero padded).
pub(crate) fn reduce_monic(p: &mut QPoly, m: &[BigInt]) {
    let deg = m.len() - 1;
    let mut top = p.len();
    while top > deg {
        top -= 1;
        let lead = std::mem::replace(&mut p[top], BigRational::zero());
        if lead.is_zero() {
            continue;
        }
        let shift = top - deg;
        for (i, mi) in m.iter().enumerate().take(deg) {
            if !mi.is_zero() {
                p[shift + i] -= &lead * BigRational::from_integer(mi.clone());
            }
        }
    }
    p.resize(deg, BigRational::zero());
}

fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                r[shift + i] -= &c * bi;
            }
        }
        q[shift] = c;
        trim(&mut r);
    }
    (q, r)
}

fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, y) in out.iter_mut().zip(b) {
        *o -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible monic `m`; `None` when `a ≡ 0`.
pub(crate) fn inverse_mod(a: &QPoly, m: &[BigInt]) -> Option<QPoly> {
    let mut r0: QPoly = m.iter().cloned().map(BigRational::from_integer).collect();
    let mut r1 = a.clone();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (quot, rem) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&quot, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant because m is irreducible
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut inv: QPoly = s0.into_iter().map(|x| x * &c).collect();
    reduce_monic(&mut inv, m);
    Some(inv)
}
