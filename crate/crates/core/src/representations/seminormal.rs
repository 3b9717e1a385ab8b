use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraElement, BasisWord, Permutation};
use crate::combinatorics::{enumerate_dpartitions, enumerate_standard_dtableaux, DPartition, DTableau};
use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::report::VerificationReport;
use crate::roots::XiOrder;
use crate::scalars::{content_scalar, CyclotomicNumber, RationalFunction};

/// The irreducible representation V_λ on the basis of standard tableaux of
/// shape λ, taken in canonical tableau order.
#[derive(Clone, Debug, Serialize)]
pub struct Representation {
    #[serde(skip)]
    d: usize,
    #[serde(skip)]
    n: usize,
    shape: DPartition,
    #[serde(skip)]
    xi: XiOrder,
    tableaux: Vec<DTableau>,
    #[serde(skip)]
    index: HashMap<DTableau, usize>,
    t: Vec<RepMatrix>,
    g: Vec<RepMatrix>,
    #[serde(skip)]
    perm_matrices: OnceLock<HashMap<Permutation, RepMatrix>>,
}

fn seminormal_g(tableaux: &[DTableau], index: &HashMap<DTableau, usize>, i: usize) -> RepMatrix {
    let mut m = RepMatrix::zero(tableaux.len());
    let qq = RationalFunction::q_minus_q_inv();
    let q = RationalFunction::q_pow(1);
    let qinv = RationalFunction::q_pow(-1);
    for (col, t) in tableaux.iter().enumerate() {
        let swapped = t.apply_transposition(i).expect("index in range");
        let target = index.get(&swapped).copied();
        if t.position(i) != t.position(i + 1) {
            m.set(target.expect("swapping different components keeps standardness"), col, RationalFunction::one());
            continue;
        }
        let ci = content_scalar(t.content_exp(i));
        let cj = content_scalar(t.content_exp(i + 1));
        let denom = cj.sub(&ci);
        m.set(col, col, cj.mul(&qq).div(&denom).expect("distinct contents"));
        if let Some(row) = target {
            let off = q.mul(&cj).sub(&qinv.mul(&ci)).div(&denom).expect("distinct contents");
            m.set(row, col, off);
        }
    }
    m
}

impl Representation {
    pub fn new(shape: &DPartition, xi: &XiOrder) -> Result<Self> {
        let n = shape.size();
        let d = shape.d();
        if n == 0 {
            return Err(Error::EmptyShape);
        }
        if xi.d() != d {
            return Err(Error::Invalid(format!("root ordering for d={} used with a {}-partition", xi.d(), d)));
        }
        let tableaux = enumerate_standard_dtableaux(shape);
        let index: HashMap<DTableau, usize> = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let t = (1..=n)
            .map(|j| RepMatrix::diagonal(tableaux.iter().map(|tab| RationalFunction::from_cyclotomic(xi.xi(tab.position(j)))).collect()))
            .collect();
        let g = (1..n).map(|i| seminormal_g(&tableaux, &index, i)).collect();
        Ok(Representation { d, n, shape: shape.clone(), xi: xi.clone(), tableaux, index, t, g, perm_matrices: OnceLock::new() })
    }

    /// V_λ with the standard root ordering.
    pub fn build(shape: &DPartition) -> Result<Self> {
        Self::new(shape, &XiOrder::standard(shape.d()))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn shape(&self) -> &DPartition {
        &self.shape
    }

    pub fn xi(&self) -> &XiOrder {
        &self.xi
    }

    pub fn tableaux(&self) -> &[DTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &DTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// The matrix of t_j (1-based).
    pub fn t_matrix(&self, j: usize) -> &RepMatrix {
        &self.t[j - 1]
    }

    /// The matrix of g_i (1-based).
    pub fn g_matrix(&self, i: usize) -> &RepMatrix {
        &self.g[i - 1]
    }

    /// Overwrite one entry of a g-matrix. Meant for exercising the relation checker.
    pub fn set_g_entry(&mut self, i: usize, row: usize, col: usize, value: RationalFunction) {
        self.g[i - 1].set(row, col, value);
        self.perm_matrices = OnceLock::new();
    }

    fn perm_matrices(&self) -> &HashMap<Permutation, RepMatrix> {
        self.perm_matrices.get_or_init(|| {
            let mut perms = Permutation::all(self.n);
            perms.sort_by_key(Permutation::length);
            let mut out: HashMap<Permutation, RepMatrix> = HashMap::with_capacity(perms.len());
            for w in perms {
                let m = match w.reduced_word().last() {
                    None => RepMatrix::identity(self.dim()),
                    Some(&i) => out[&w.mul_simple(i)].mul(&self.g[i - 1]),
                };
                out.insert(w, m);
            }
            out
        })
    }

    /// ζ_d-exponents of the diagonal of t^k.
    fn framing_exponents(&self, framing: &[u32]) -> Vec<usize> {
        self.tableaux
            .iter()
            .map(|tab| framing.iter().enumerate().map(|(j, &k)| k as usize * self.xi.exponent(tab.position(j + 1))).sum::<usize>() % self.d)
            .collect()
    }

    /// The matrix of a basis word.
    pub fn word_matrix(&self, b: &BasisWord) -> RepMatrix {
        let gw = &self.perm_matrices()[&b.perm];
        let exps = self.framing_exponents(&b.framing);
        let rows = gw
            .rows()
            .iter()
            .zip(exps)
            .map(|(row, e)| {
                if e == 0 {
                    return row.clone();
                }
                let z = CyclotomicNumber::root(self.d as u32, e as i64);
                row.iter().map(|x| x.scale(&z)).collect()
            })
            .collect();
        RepMatrix::from_rows(rows)
    }

    /// The linear extension of the action to an algebra element.
    pub fn represent(&self, a: &AlgebraElement) -> Result<RepMatrix> {
        if a.ambient() != (self.d, self.n) {
            return Err(Error::AmbientMismatch(a.d(), a.n(), self.d, self.n));
        }
        Ok(a.terms().fold(RepMatrix::zero(self.dim()), |acc, (w, c)| acc.add(&self.word_matrix(w).scale(c))))
    }

    /// χ_λ(b) = trace of the action of b.
    pub fn character(&self, b: &BasisWord) -> RationalFunction {
        let gw = &self.perm_matrices()[&b.perm];
        let exps = self.framing_exponents(&b.framing);
        exps.iter().enumerate().fold(RationalFunction::zero(), |acc, (r, &e)| {
            let x = gw.get(r, r);
            if x.is_zero() {
                acc
            } else if e == 0 {
                acc.add(x)
            } else {
                acc.add(&x.scale(&CyclotomicNumber::root(self.d as u32, e as i64)))
            }
        })
    }

    /// The matrices of J_1, …, J_n: diagonal with q^{2·cc(T|i)} at T.
    pub fn jm_matrices(&self) -> Vec<RepMatrix> {
        (1..=self.n).map(|i| RepMatrix::diagonal(self.tableaux.iter().map(|t| content_scalar(t.content_exp(i))).collect())).collect()
    }

    /// e_i = (1/d) Σ_s t_i^s t_{i+1}^{−s} on V_λ.
    pub fn e_matrix(&self, i: usize) -> RepMatrix {
        let diag = self
            .tableaux
            .iter()
            .map(|t| if t.position(i) == t.position(i + 1) { RationalFunction::one() } else { RationalFunction::zero() })
            .collect();
        RepMatrix::diagonal(diag)
    }

    /// Check every defining relation as an exact matrix identity.
    pub fn verify_relations(&self) -> VerificationReport {
        let mut rep = VerificationReport::new(format!("relations {}", self.shape));
        let n = self.n;
        let id = RepMatrix::identity(self.dim());
        let qq = RationalFunction::q_minus_q_inv();
        let e_avg = |i: usize| -> RepMatrix {
            let ti = &self.t[i - 1];
            let tj_inv = self.t[i].pow(self.d as u32 - 1);
            let mut acc = RepMatrix::zero(self.dim());
            let mut term = id.clone();
            for _ in 0..self.d {
                acc = acc.add(&term);
                term = term.mul(ti).mul(&tj_inv);
            }
            acc.scale(&RationalFunction::from_rational(num_rational::BigRational::new(1.into(), (self.d as i64).into())))
        };
        for i in 1..n {
            let gi = &self.g[i - 1];
            let lhs = gi.mul(gi);
            let rhs = id.add(&e_avg(i).mul(gi).scale(&qq));
            rep.check(format!("quadratic g{}", i), lhs == rhs, || format!("g{}^2 - 1 - (q-q^-1) e{} g{} != 0", i, i, i));
            if i + 1 < n {
                let gj = &self.g[i];
                rep.check(format!("braid g{} g{}", i, i + 1), gi.mul(gj).mul(gi) == gj.mul(gi).mul(gj), || format!("braid fails at i={}", i));
            }
            for j in i + 2..n {
                let gj = &self.g[j - 1];
                rep.check(format!("far commute g{} g{}", i, j), gi.mul(gj) == gj.mul(gi), || format!("g{} g{} differ", i, j));
            }
            for j in 1..=n {
                let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
                let ok = self.t[j - 1].mul(gi) == gi.mul(&self.t[sj - 1]);
                rep.check(format!("slide t{} g{}", j, i), ok, || format!("t{} g{} != g{} t{}", j, i, i, sj));
            }
        }
        for j in 1..=n {
            let tj = &self.t[j - 1];
            rep.check(format!("order t{}^d", j), tj.pow(self.d as u32) == id, || format!("t{}^{} != 1", j, self.d));
            for k in j + 1..=n {
                let tk = &self.t[k - 1];
                rep.check(format!("commute t{} t{}", j, k), tj.mul(tk) == tk.mul(tj), || format!("t{} t{} differ", j, k));
            }
        }
        rep.finish()
    }
}

/// V_λ for every λ ∈ P(d, n), in enumeration order.
pub fn all_representations(d: usize, n: usize, xi: &XiOrder) -> Result<Vec<Representation>> {
    enumerate_dpartitions(d, n).par_iter().map(|shape| Representation::new(shape, xi)).collect()
}
