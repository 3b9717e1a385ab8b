use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::permutation::Permutation;
use super::products::word_product;
use crate::error::{Error, Result};
use crate::scalars::ratfunc::{denominator_lcm, exact_quotient};
use crate::scalars::{CyclotomicNumber, LaurentPolynomial, RationalFunction};

/// t_1^{k_1} … t_n^{k_n} g_w
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisWord {
    pub framing: Vec<u32>,
    pub perm: Permutation,
}

impl BasisWord {
    pub fn identity(n: usize) -> Self {
        BasisWord { framing: vec![0; n], perm: Permutation::identity(n) }
    }

    pub fn new(framing: Vec<u32>, perm: Permutation) -> Self {
        assert_eq!(framing.len(), perm.n());
        BasisWord { framing, perm }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn is_identity(&self) -> bool {
        self.framing.iter().all(|&k| k == 0) && self.perm.is_identity()
    }

    /// The word of Y_{d,n+1} with the same letters.
    pub fn extend(&self) -> Self {
        let mut framing = self.framing.clone();
        framing.push(0);
        BasisWord { framing, perm: self.perm.extend() }
    }

    /// (t^k g_w)^∨ = g_{w⁻¹} t^{d−k}, rewritten as a single basis word.
    pub fn dual(&self, d: usize) -> Self {
        let winv = self.perm.inverse();
        let mut framing = vec![0; self.n()];
        for (j, &k) in self.framing.iter().enumerate() {
            framing[winv.apply0(j)] = (d as u32 - k) % d as u32;
        }
        BasisWord { framing, perm: winv }
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, &k) in self.framing.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(format!("t{}", j + 1)),
                _ => parts.push(format!("t{}^{}", j + 1, k)),
            }
        }
        if !self.perm.is_identity() {
            parts.push(format!("g{}", self.perm));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Every basis word of Y_{d,n}: framings in lexicographic order, then permutations.
pub fn all_basis_words(d: usize, n: usize) -> Vec<BasisWord> {
    let perms = Permutation::all(n);
    let mut framings: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..n {
        framings = framings
            .into_iter()
            .flat_map(|f| {
                (0..d as u32).map(move |k| {
                    let mut g = f.clone();
                    g.push(k);
                    g
                })
            })
            .collect();
    }
    framings.into_iter().flat_map(|f| perms.iter().map(move |w| BasisWord::new(f.clone(), w.clone()))).collect()
}

/// An element of Y_{d,n}(q) over ℚ(ζ)(q), expanded in the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    d: usize,
    n: usize,
    terms: BTreeMap<BasisWord, RationalFunction>,
}

impl AlgebraElement {
    pub fn zero(d: usize, n: usize) -> Self {
        AlgebraElement { d, n, terms: BTreeMap::new() }
    }

    pub fn one(d: usize, n: usize) -> Self {
        Self::scalar(d, n, RationalFunction::one())
    }

    pub fn scalar(d: usize, n: usize, c: RationalFunction) -> Self {
        Self::from_word(d, BasisWord::identity(n), c)
    }

    pub fn from_word(d: usize, word: BasisWord, c: RationalFunction) -> Self {
        let n = word.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        AlgebraElement { d, n, terms }
    }

    pub fn basis(d: usize, word: BasisWord) -> Self {
        Self::from_word(d, word, RationalFunction::one())
    }

    /// Σ c_b·b; repeated words are summed.
    pub fn from_terms(d: usize, n: usize, terms: impl IntoIterator<Item = (BasisWord, RationalFunction)>) -> Self {
        let mut out = Self::zero(d, n);
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.d, self.n)
    }

    #[allow(clippy::len_without_is_empty)]
    /// Number of basis words with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &BasisWord) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(RationalFunction::zero)
    }

    fn add_term(&mut self, w: BasisWord, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.d, self.n, other.d, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement { d: self.d, n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.d, self.n);
        }
        AlgebraElement { d: self.d, n: self.n, terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect() }
    }

    /// self + c·1
    pub fn add_scalar(&self, c: &RationalFunction) -> Self {
        let mut out = self.clone();
        out.add_term(BasisWord::identity(self.n), c);
        out
    }

    /// Coefficients over a common denominator D: self = (Σ N_b·b)/D.
    fn over_common_denominator(&self) -> (LaurentPolynomial, Vec<(&BasisWord, LaurentPolynomial)>) {
        let den = self.terms.values().fold(LaurentPolynomial::one(), |acc, c| denominator_lcm(&acc, c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(w, c)| {
                let num = if c.denom() == &den { c.numer().clone() } else { c.numer().mul(&exact_quotient(&den, c.denom())) };
                (w, num)
            })
            .collect();
        (den, nums)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.d, self.n));
        }
        let d = self.d;
        let (da, na) = self.over_common_denominator();
        let (db, nb) = other.over_common_denominator();
        let accumulate = |mut acc: HashMap<BasisWord, LaurentPolynomial>, (wa, ca): &(&BasisWord, LaurentPolynomial)| {
            for (wb, cb) in &nb {
                let c = ca.mul(cb);
                // t^k g_w t^l = t^{k + w·l} g_w
                let mut m0 = wa.framing.clone();
                for (j, &l) in wb.framing.iter().enumerate() {
                    let t = wa.perm.apply0(j);
                    m0[t] = (m0[t] + l) % d as u32;
                }
                for (f, v, x) in word_product(d, &wa.perm, &wb.perm).iter() {
                    let framing = m0.iter().zip(f).map(|(a, b)| (a + b) % d as u32).collect();
                    let word = BasisWord { framing, perm: v.clone() };
                    acc.entry(word).or_insert_with(LaurentPolynomial::zero).add_assign(&c.mul(x));
                }
            }
            acc
        };
        let merge = |a: HashMap<BasisWord, LaurentPolynomial>, b: HashMap<BasisWord, LaurentPolynomial>| {
            if a.len() < b.len() {
                merge_into(b, a)
            } else {
                merge_into(a, b)
            }
        };
        let sums = if na.len() * nb.len() >= 64 {
            na.par_iter().fold(HashMap::new, accumulate).reduce(HashMap::new, merge)
        } else {
            na.iter().fold(HashMap::new(), accumulate)
        };
        let den = da.mul(&db);
        let terms: Vec<(BasisWord, RationalFunction)> = sums
            .into_par_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| {
                let rf = if den.is_one() { RationalFunction::from_laurent(c) } else { RationalFunction::new(c, den.clone()).expect("nonzero denominator") };
                (w, rf)
            })
            .collect();
        Ok(AlgebraElement { d: self.d, n: self.n, terms: terms.into_iter().collect() })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.d, self.n), |acc, _| acc.mul(self).expect("same ambient"))
    }

    /// τ: the coefficient of the identity word.
    pub fn tau(&self) -> RationalFunction {
        self.coeff(&BasisWord::identity(self.n))
    }

    /// The image under Y_{d,n} ⊂ Y_{d,n+1}.
    pub fn extend(&self) -> Self {
        AlgebraElement { d: self.d, n: self.n + 1, terms: self.terms.iter().map(|(w, c)| (w.extend(), c.clone())).collect() }
    }

    /// True when every coefficient is a Laurent polynomial with rational coefficients.
    pub fn has_rational_laurent_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.as_laurent().is_some_and(LaurentPolynomial::is_rational))
    }
}

fn merge_into(
    mut a: HashMap<BasisWord, LaurentPolynomial>,
    b: HashMap<BasisWord, LaurentPolynomial>,
) -> HashMap<BasisWord, LaurentPolynomial> {
    for (w, c) in b {
        a.entry(w).or_insert_with(LaurentPolynomial::zero).add_assign(&c);
    }
    a
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if w.is_identity() { format!("({})", c) } else { format!("({})*{}", c, w) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    word: BasisWord,
    coeff: RationalFunction,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<RawTerm> = self.terms.iter().map(|(w, c)| RawTerm { word: w.clone(), coeff: c.clone() }).collect();
        raw.serialize(s)
    }
}

impl AlgebraElement {
    /// Parse the JSON list-of-terms encoding into Y_{d,n}.
    pub fn from_json(d: usize, n: usize, text: &str) -> Result<Self> {
        let raw: Vec<RawTerm> = serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        if raw.iter().any(|t| t.word.n() != n || t.word.framing.iter().any(|&k| k as usize >= d)) {
            return Err(Error::Invalid("inconsistent basis words".into()));
        }
        Ok(Self::from_terms(d, n, raw.into_iter().map(|t| (t.word, t.coeff))))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        /// Panics on ambient mismatch; use the method form for a `Result`.
        impl std::ops::$tr<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: &AlgebraElement) -> AlgebraElement {
                AlgebraElement::$m(self, rhs).expect("ambient mismatch")
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// 1/d as a scalar.
pub(crate) fn inverse_d(d: usize) -> RationalFunction {
    RationalFunction::from_rational(BigRational::new(1.into(), (d as i64).into()))
}

pub(crate) fn cyclo(c: CyclotomicNumber) -> RationalFunction {
    RationalFunction::from_cyclotomic(c)
}
