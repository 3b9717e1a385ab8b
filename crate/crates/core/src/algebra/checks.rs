use rayon::prelude::*;

use super::element::{all_basis_words, AlgebraElement};
use super::generators::{generator, jm_elements, t_power, Generator};
use crate::report::VerificationReport;

/// τ(b^∨ b′) = δ_{b,b′} and τ(b b′) = τ(b′ b) over every pair of basis words.
pub fn trace_form_check(d: usize, n: usize) -> VerificationReport {
    let mut report = VerificationReport::new(format!("trace-form d={} n={}", d, n));
    let words = all_basis_words(d, n);
    let rows: Vec<_> = words
        .par_iter()
        .map(|b| {
            let x = AlgebraElement::basis(d, b.clone());
            let dual = AlgebraElement::basis(d, b.dual(d));
            let mut dual_bad = None;
            let mut trace_bad = None;
            for b2 in &words {
                let y = AlgebraElement::basis(d, b2.clone());
                let tau = (&dual * &y).tau();
                let ok = if b == b2 { tau.is_one() } else { tau.is_zero() };
                if !ok && dual_bad.is_none() {
                    dual_bad = Some(format!("tau({}^v * {}) = {}", b, b2, tau));
                }
                let (l, r) = ((&x * &y).tau(), (&y * &x).tau());
                if l != r && trace_bad.is_none() {
                    trace_bad = Some(format!("tau({0}*{1}) = {2} but tau({1}*{0}) = {3}", b, b2, l, r));
                }
            }
            (b.clone(), dual_bad, trace_bad)
        })
        .collect();
    for (b, dual_bad, trace_bad) in rows {
        let ok = dual_bad.is_none();
        report.check(format!("dual row {}", b), ok, || dual_bad.unwrap_or_default());
        let ok = trace_bad.is_none();
        report.check(format!("trace at {}", b), ok, || trace_bad.unwrap_or_default());
    }
    report.finish()
}

/// The family t_1..t_n, J_1..J_n is commutative, and g_j commutes with J_i
/// for j ∉ {i−1, i}.
pub fn jm_commute_check(d: usize, n: usize) -> VerificationReport {
    let mut report = VerificationReport::new(format!("jm-commute d={} n={}", d, n));
    let js = jm_elements(d, n);
    let mut family: Vec<(String, AlgebraElement)> = (1..=n).map(|j| (format!("t{}", j), t_power(d, n, j, 1))).collect();
    family.extend(js.iter().enumerate().map(|(i, x)| (format!("J{}", i + 1), x.clone())));
    let mut pairs = Vec::new();
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            pairs.push((family[a].clone(), family[b].clone()));
        }
    }
    for i in 1..=n {
        for j in 1..n {
            if j + 1 != i && j != i {
                let g = generator(Generator::G(j), d, n).expect("index in range");
                pairs.push(((format!("g{}", j), g), (format!("J{}", i), js[i - 1].clone())));
            }
        }
    }
    let results: Vec<_> = pairs.par_iter().map(|((na, a), (nb, b))| (format!("{} {} = {} {}", na, nb, nb, na), a * b == b * a)).collect();
    for (name, ok) in results {
        report.check(name, ok, || "commutator is nonzero".into());
    }
    report.finish()
}
