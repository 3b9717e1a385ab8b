use super::element::{cyclo, inverse_d, AlgebraElement, BasisWord};
use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::scalars::{CyclotomicNumber, RationalFunction};

/// The named generators and framing idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    T(usize),
    G(usize),
    GInverse(usize),
    E(usize),
    Eik(usize, usize),
}

fn check(cond: bool, what: &str, d: usize, n: usize) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadIndex(format!("{} in Y_{{{},{}}}", what, d, n)))
    }
}

pub fn generator(kind: Generator, d: usize, n: usize) -> Result<AlgebraElement> {
    match kind {
        Generator::T(j) => {
            check(j >= 1 && j <= n, &format!("t_{}", j), d, n)?;
            Ok(t_power(d, n, j, 1))
        }
        Generator::G(i) => {
            check(i >= 1 && i < n, &format!("g_{}", i), d, n)?;
            Ok(g_word(d, &Permutation::transposition(n, i, i + 1)))
        }
        Generator::GInverse(i) => {
            // g_i⁻¹ = g_i − (q − q⁻¹) e_i
            let g = generator(Generator::G(i), d, n)?;
            let e = generator(Generator::E(i), d, n)?;
            g.sub(&e.scale(&RationalFunction::q_minus_q_inv()))
        }
        Generator::E(i) => {
            check(i >= 1 && i < n, &format!("e_{}", i), d, n)?;
            Ok(e_ik(d, n, i, i + 1))
        }
        Generator::Eik(i, k) => {
            check(i >= 1 && i <= n && k >= 1 && k <= n, &format!("e_{{{},{}}}", i, k), d, n)?;
            Ok(e_ik(d, n, i, k))
        }
    }
}

/// t_j^k
pub fn t_power(d: usize, n: usize, j: usize, k: u32) -> AlgebraElement {
    let mut framing = vec![0; n];
    framing[j - 1] = k % d as u32;
    AlgebraElement::basis(d, BasisWord::new(framing, Permutation::identity(n)))
}

/// g_w
pub fn g_word(d: usize, w: &Permutation) -> AlgebraElement {
    AlgebraElement::basis(d, BasisWord::new(vec![0; w.n()], w.clone()))
}

/// e_{i,k} = (1/d) Σ_s t_i^s t_k^{−s}
pub fn e_ik(d: usize, n: usize, i: usize, k: usize) -> AlgebraElement {
    if i == k {
        return AlgebraElement::one(d, n);
    }
    let c = inverse_d(d);
    AlgebraElement::from_terms(
        d,
        n,
        (0..d as u32).map(|s| {
            let mut framing = vec![0; n];
            framing[i - 1] = s;
            framing[k - 1] = (d as u32 - s) % d as u32;
            (BasisWord::new(framing, Permutation::identity(n)), c.clone())
        }),
    )
}

/// t_j − c, for a scalar c.
pub fn t_minus(d: usize, n: usize, j: usize, c: &CyclotomicNumber) -> AlgebraElement {
    t_power(d, n, j, 1).add_scalar(&cyclo(c.neg()))
}

/// The product g_{i_1} ⋯ g_{i_r} of generators, multiplied out.
pub fn g_product(d: usize, n: usize, word: &[usize]) -> Result<AlgebraElement> {
    word.iter().try_fold(AlgebraElement::one(d, n), |acc, &i| acc.mul(&generator(Generator::G(i), d, n)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JmMode {
    Recursive,
    Explicit,
}

/// J_i: J_1 = 1, J_{i+1} = g_i J_i g_i, or the closed form
/// 1 + (q − q⁻¹) Σ_{k<i} e_{k,i} g_{(k i)}.
pub fn jm_element(i: usize, d: usize, n: usize, mode: JmMode) -> Result<AlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::BadIndex(format!("J_{} in Y_{{{},{}}}", i, d, n)));
    }
    match mode {
        JmMode::Recursive => {
            let mut j = AlgebraElement::one(d, n);
            for k in 1..i {
                let g = generator(Generator::G(k), d, n)?;
                j = g.mul(&j)?.mul(&g)?;
            }
            Ok(j)
        }
        JmMode::Explicit => {
            let c = RationalFunction::q_minus_q_inv().mul(&inverse_d(d));
            let mut terms = vec![(BasisWord::identity(n), RationalFunction::one())];
            for k in 1..i {
                let w = Permutation::transposition(n, k, i);
                for s in 0..d as u32 {
                    let mut framing = vec![0; n];
                    framing[k - 1] = s;
                    framing[i - 1] = (d as u32 - s) % d as u32;
                    terms.push((BasisWord::new(framing, w.clone()), c.clone()));
                }
            }
            Ok(AlgebraElement::from_terms(d, n, terms))
        }
    }
}

/// J_1, …, J_n in closed form.
pub fn jm_elements(d: usize, n: usize) -> Vec<AlgebraElement> {
    (1..=n).map(|i| jm_element(i, d, n, JmMode::Explicit).expect("index in range")).collect()
}
