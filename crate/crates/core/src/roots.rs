use crate::error::{Error, Result};
use crate::scalars::CyclotomicNumber;

/// An ordering ξ_1, …, ξ_d of the d-th roots of unity.
///
/// ξ_k = ζ_d^{perm[k−1]−1}; the identity permutation gives ξ_k = ζ_d^{k−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiOrder {
    perm: Vec<usize>,
}

impl XiOrder {
    pub fn standard(d: usize) -> Self {
        XiOrder { perm: (1..=d).collect() }
    }

    /// From a permutation of {1..d} in one-line notation.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let d = perm.len();
        let mut seen = vec![false; d + 1];
        for &p in &perm {
            if p == 0 || p > d || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid(format!("{:?} is not a permutation of 1..{}", perm, d)));
            }
        }
        if d == 0 {
            return Err(Error::Invalid("empty root ordering".into()));
        }
        Ok(XiOrder { perm })
    }

    pub fn d(&self) -> usize {
        self.perm.len()
    }

    /// The exponent e with ξ_k = ζ_d^e.
    pub fn exponent(&self, k: usize) -> usize {
        self.perm[k - 1] - 1
    }

    pub fn xi(&self, k: usize) -> CyclotomicNumber {
        CyclotomicNumber::root(self.d() as u32, self.exponent(k) as i64)
    }

    /// The position k with ξ_k = ζ_d^e.
    pub fn position_of_exponent(&self, e: usize) -> usize {
        self.perm.iter().position(|&p| p == e % self.d() + 1).expect("permutation") + 1
    }
}
