//! Irreducible representations of the affine algebra Ŷ_{d,2}(q) with
//! t_1, t_2, X_1, X_2 diagonalisable.

use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::report::VerificationReport;
use crate::scalars::{CyclotomicNumber, RationalFunction};

/// Parameters of the three families.
#[derive(Clone, Debug)]
pub enum AffineFamily {
    /// t_1 = t_2 = a, X_1 = c, X_2 = c q^{2ε}, g = ε q^ε.
    OneDimensional { a: CyclotomicNumber, c: RationalFunction, epsilon: i8 },
    /// e acts as 1; the basis diagonalising X_1 and X_2.
    IdempotentOne { a: CyclotomicNumber, c: RationalFunction, d_eig: RationalFunction },
    /// e acts as 0; t_1 = diag(a, b), t_2 = diag(b, a), g swaps.
    IdempotentZero { a: CyclotomicNumber, b: CyclotomicNumber, c: RationalFunction, d_eig: RationalFunction },
}

#[derive(Clone, Debug)]
pub struct AffineY2Rep {
    pub d: usize,
    pub family: u8,
    pub t1: RepMatrix,
    pub t2: RepMatrix,
    pub x1: RepMatrix,
    pub x2: RepMatrix,
    pub g: RepMatrix,
}

fn rf(c: &CyclotomicNumber) -> RationalFunction {
    RationalFunction::from_cyclotomic(c.clone())
}

fn is_dth_root(d: usize, a: &CyclotomicNumber) -> bool {
    a.pow(d as u64).is_one()
}

fn bad(msg: &str) -> Error {
    Error::BadParameters(msg.to_string())
}

impl AffineY2Rep {
    pub fn new(d: usize, family: &AffineFamily) -> Result<Self> {
        let qq = RationalFunction::q_minus_q_inv();
        let q = RationalFunction::q_pow(1);
        let qinv = RationalFunction::q_pow(-1);
        let z = RationalFunction::zero;
        match family {
            AffineFamily::OneDimensional { a, c, epsilon } => {
                if !is_dth_root(d, a) {
                    return Err(bad("a^d != 1"));
                }
                if c.is_zero() {
                    return Err(bad("c = 0"));
                }
                let eps = match epsilon {
                    1 => 1,
                    -1 => -1,
                    _ => return Err(bad("epsilon must be +1 or -1")),
                };
                let r = RationalFunction::q_pow(eps).scale(&CyclotomicNumber::from_integer(eps));
                let one = |x: RationalFunction| RepMatrix::diagonal(vec![x]);
                Ok(AffineY2Rep {
                    d,
                    family: 1,
                    t1: one(rf(a)),
                    t2: one(rf(a)),
                    x1: one(c.clone()),
                    x2: one(c.mul(&RationalFunction::q_pow(2 * eps))),
                    g: one(r),
                })
            }
            AffineFamily::IdempotentOne { a, c, d_eig } => {
                if !is_dth_root(d, a) {
                    return Err(bad("a^d != 1"));
                }
                if c.is_zero() || d_eig.is_zero() {
                    return Err(bad("c and d must be nonzero"));
                }
                let q2 = RationalFunction::q_pow(2);
                if d_eig == c || *d_eig == c.mul(&q2) || *d_eig == c.div(&q2)? {
                    return Err(bad("d must avoid c, c q^2 and c q^-2"));
                }
                let inv = d_eig.sub(c).inv()?;
                let g = RepMatrix::from_rows(vec![
                    vec![d_eig.mul(&qq).mul(&inv), q.mul(c).sub(&qinv.mul(d_eig)).neg().mul(&inv)],
                    vec![q.mul(d_eig).sub(&qinv.mul(c)).mul(&inv), c.mul(&qq).neg().mul(&inv)],
                ]);
                Ok(AffineY2Rep {
                    d,
                    family: 2,
                    t1: RepMatrix::scalar(2, &rf(a)),
                    t2: RepMatrix::scalar(2, &rf(a)),
                    x1: RepMatrix::diagonal(vec![c.clone(), d_eig.clone()]),
                    x2: RepMatrix::diagonal(vec![d_eig.clone(), c.clone()]),
                    g,
                })
            }
            AffineFamily::IdempotentZero { a, b, c, d_eig } => {
                if !is_dth_root(d, a) || !is_dth_root(d, b) {
                    return Err(bad("a^d and b^d must be 1"));
                }
                if a == b {
                    return Err(bad("a = b"));
                }
                if c.is_zero() || d_eig.is_zero() {
                    return Err(bad("c and d must be nonzero"));
                }
                Ok(AffineY2Rep {
                    d,
                    family: 3,
                    t1: RepMatrix::diagonal(vec![rf(a), rf(b)]),
                    t2: RepMatrix::diagonal(vec![rf(b), rf(a)]),
                    x1: RepMatrix::diagonal(vec![c.clone(), d_eig.clone()]),
                    x2: RepMatrix::diagonal(vec![d_eig.clone(), c.clone()]),
                    g: RepMatrix::from_rows(vec![vec![z(), RationalFunction::one()], vec![RationalFunction::one(), z()]]),
                })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// e = (1/d) Σ_s t_1^s t_2^{−s}
    pub fn e(&self) -> RepMatrix {
        let t2inv = self.t2.pow(self.d as u32 - 1);
        let mut acc = RepMatrix::zero(self.dim());
        let mut term = RepMatrix::identity(self.dim());
        for _ in 0..self.d {
            acc = acc.add(&term);
            term = term.mul(&self.t1).mul(&t2inv);
        }
        acc.scale(&RationalFunction::from_rational(num_rational::BigRational::new(1.into(), (self.d as i64).into())))
    }

    /// The defining relations of Ŷ_{d,2} and the derived facts about X_2.
    pub fn verify(&self) -> VerificationReport {
        let mut r = VerificationReport::new(format!("affine family {}", self.family));
        let id = RepMatrix::identity(self.dim());
        let (t1, t2, x1, x2, g) = (&self.t1, &self.t2, &self.x1, &self.x2, &self.g);
        let e = self.e();
        let comm = |a: &RepMatrix, b: &RepMatrix| a.mul(b) == b.mul(a);
        r.check("t1 t2 commute", comm(t1, t2), String::new);
        r.check("t1^d = t2^d = 1", t1.pow(self.d as u32) == id && t2.pow(self.d as u32) == id, String::new);
        r.check("t1 g = g t2", t1.mul(g) == g.mul(t2), String::new);
        r.check("t2 g = g t1", t2.mul(g) == g.mul(t1), String::new);
        r.check("e idempotent", e.mul(&e) == e, String::new);
        r.check("e central", comm(&e, g) && comm(&e, x1), String::new);
        let quad = id.add(&e.mul(g).scale(&RationalFunction::q_minus_q_inv()));
        r.check("g^2 = 1 + (q-q^-1) e g", g.mul(g) == quad, || format!("g^2 = {}", g.mul(g)));
        let det = if self.dim() == 1 {
            x1.get(0, 0).clone()
        } else {
            x1.get(0, 0).mul(x1.get(1, 1)).sub(&x1.get(0, 1).mul(x1.get(1, 0)))
        };
        r.check("X1 invertible", !det.is_zero(), String::new);
        r.check("X1 commutes with t1, t2", comm(x1, t1) && comm(x1, t2), String::new);
        let gx = g.mul(x1);
        r.check("g X1 g X1 = X1 g X1 g", gx.mul(&gx) == x1.mul(g).mul(x1).mul(g), String::new);
        r.check("X2 = g X1 g", *x2 == g.mul(x1).mul(g), || format!("g X1 g = {}", g.mul(x1).mul(g)));
        r.check("X1 X2 = X2 X1", comm(x1, x2), String::new);
        r.check("X2 commutes with t1, t2", comm(x2, t1) && comm(x2, t2), String::new);
        r.finish()
    }
}
