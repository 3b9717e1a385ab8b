//! Expansion of g_w·g_{w'} in the basis, memoized per (d, w, w').

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::permutation::Permutation;
use crate::scalars::{CyclotomicNumber, LaurentPolynomial};

/// One term t^f·g_v of an expansion, with a coefficient in ℚ[q, q⁻¹].
pub(crate) type Term = (Vec<u32>, Permutation, LaurentPolynomial);

type Key = (usize, Permutation, Permutation);

fn cache() -> &'static RwLock<HashMap<Key, Arc<Vec<Term>>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Vec<Term>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// g_w·g_{w'} = Σ c·t^f g_v, right-multiplying g_w letter by letter along a
/// reduced word of w'.
pub(crate) fn word_product(d: usize, w: &Permutation, w2: &Permutation) -> Arc<Vec<Term>> {
    let key = (d, w.clone(), w2.clone());
    if let Some(hit) = cache().read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let value = Arc::new(expand(d, w, w2));
    cache().write().expect("cache lock").entry(key).or_insert(value).clone()
}

fn expand(d: usize, w: &Permutation, w2: &Permutation) -> Vec<Term> {
    let n = w.n();
    // (q − q⁻¹)/d
    let step = LaurentPolynomial::from_terms([
        (1, CyclotomicNumber::from_rational(num_rational::BigRational::new(1.into(), (d as i64).into()))),
        (-1, CyclotomicNumber::from_rational(num_rational::BigRational::new((-1).into(), (d as i64).into()))),
    ]);
    let mut state: HashMap<(Vec<u32>, Permutation), LaurentPolynomial> = HashMap::new();
    state.insert((vec![0; n], w.clone()), LaurentPolynomial::one());
    for i in w2.reduced_word() {
        let mut next: HashMap<(Vec<u32>, Permutation), LaurentPolynomial> = HashMap::with_capacity(state.len() * 2);
        for ((f, v), c) in state {
            let vs = v.mul_simple(i);
            if !v.is_right_ascent(i) {
                // g_v g_i = g_{v s_i} + (q − q⁻¹) e_{v(i), v(i+1)} g_v
                let (a, b) = (v.apply0(i - 1), v.apply0(i));
                let cc = c.mul(&step);
                for s in 0..d as u32 {
                    let mut f2 = f.clone();
                    f2[a] = (f2[a] + s) % d as u32;
                    f2[b] = (f2[b] + d as u32 - s) % d as u32;
                    next.entry((f2, v.clone())).or_insert_with(LaurentPolynomial::zero).add_assign(&cc);
                }
            }
            next.entry((f, vs)).or_insert_with(LaurentPolynomial::zero).add_assign(&c);
        }
        state = next;
    }
    let mut out: Vec<Term> = state.into_iter().filter(|(_, c)| !c.is_zero()).map(|((f, v), c)| (f, v, c)).collect();
    out.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    out
}

/// Left-multiplication variant: g_w·g_{w'} by multiplying g_{w'} on the left
/// by the letters of a reduced word of w, read from the right.
#[cfg(test)]
pub(crate) fn word_product_left(d: usize, w: &Permutation, w2: &Permutation) -> Vec<Term> {
    let n = w.n();
    let step = LaurentPolynomial::from_terms([
        (1, CyclotomicNumber::from_rational(num_rational::BigRational::new(1.into(), (d as i64).into()))),
        (-1, CyclotomicNumber::from_rational(num_rational::BigRational::new((-1).into(), (d as i64).into()))),
    ]);
    let mut state: HashMap<(Vec<u32>, Permutation), LaurentPolynomial> = HashMap::new();
    state.insert((vec![0; n], w2.clone()), LaurentPolynomial::one());
    for &i in w.reduced_word().iter().rev() {
        let mut next: HashMap<(Vec<u32>, Permutation), LaurentPolynomial> = HashMap::new();
        for ((f, v), c) in state {
            // g_i·t^f g_v = t^{s_i·f} g_i g_v
            let mut fs = f.clone();
            fs.swap(i - 1, i);
            let siv = Permutation::transposition(n, i, i + 1).compose(&v);
            if v.inverse().is_right_ascent(i) {
                next.entry((fs, siv)).or_insert_with(LaurentPolynomial::zero).add_assign(&c);
            } else {
                // g_i g_v = g_{s_i v} + (q − q⁻¹) e_i g_v
                let cc = c.mul(&step);
                for s in 0..d as u32 {
                    let mut f2 = fs.clone();
                    f2[i - 1] = (f2[i - 1] + s) % d as u32;
                    f2[i] = (f2[i] + d as u32 - s) % d as u32;
                    next.entry((f2, v.clone())).or_insert_with(LaurentPolynomial::zero).add_assign(&cc);
                }
                next.entry((fs, siv)).or_insert_with(LaurentPolynomial::zero).add_assign(&c);
            }
        }
        state = next;
    }
    let mut out: Vec<Term> = state.into_iter().filter(|(_, c)| !c.is_zero()).map(|((f, v), c)| (f, v, c)).collect();
    out.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    out
}
