//! Schur elements, the semisimplicity polynomial and specializations.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::algebra::all_basis_words;
use crate::combinatorics::{enumerate_dpartitions, enumerate_standard_dtableaux, DPartition, DTableau};
use crate::error::{Error, Result};
use crate::idempotents::{primitive_idempotent_with, JmCache};
use crate::report::VerificationReport;
use crate::representations::Representation;
use crate::roots::XiOrder;
use crate::scalars::{q2_integer, q_balanced_integer, CyclotomicNumber, LaurentPolynomial, RationalFunction};

/// Closed forms for s_λ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurForm {
    /// d^n q^{−2η(λ)} Π [hl(θ)]_{q²}
    Hook,
    /// d^n Π q^{cc(θ)} {hl(θ)}_q
    Content,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurElement {
    pub shape: DPartition,
    pub value: LaurentPolynomial,
}

impl SchurElement {
    /// s_λ at q = 1, which is d^n times the product of hook lengths.
    pub fn at_one(&self) -> i64 {
        let v = self.value.terms().fold(num_rational::BigRational::from_integer(0.into()), |acc, (_, c)| {
            acc + c.as_rational().expect("rational coefficients")
        });
        i64::try_from(v.to_integer()).expect("fits in i64")
    }
}

impl Serialize for SchurElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SchurElement", 3)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("schur", &self.value.to_string())?;
        st.serialize_field("schur_at_q1", &self.at_one())?;
        st.end()
    }
}

pub fn schur_element(shape: &DPartition, form: SchurForm) -> SchurElement {
    let n = shape.size() as u32;
    let dn = LaurentPolynomial::from_integer((shape.d() as i64).pow(n));
    let hooks = shape.nodes().into_iter().map(|node| (node.content(), shape.hook_length(&node).expect("node of shape") as u32));
    let value = match form {
        SchurForm::Hook => hooks.fold(dn.shift(-2 * shape.eta() as i64), |acc, (_, h)| acc.mul(&q2_integer(h))),
        SchurForm::Content => hooks.fold(dn, |acc, (cc, h)| acc.mul(&q_balanced_integer(h).shift(cc))),
    };
    SchurElement { shape: shape.clone(), value }
}

/// 1/τ(E_T) for every standard T of shape λ, in canonical order.
pub fn trace_inverses(shape: &DPartition) -> Result<Vec<(DTableau, RationalFunction)>> {
    let xi = XiOrder::standard(shape.d());
    let cache = JmCache::new(shape.d(), shape.size());
    enumerate_standard_dtableaux(shape)
        .par_iter()
        .map(|t| {
            let tau = primitive_idempotent_with(t, &xi, &cache)?.element.tau();
            if tau.is_zero() {
                return Err(Error::InternalInconsistency(format!("tau(E_T) = 0 at {}", t)));
            }
            Ok((t.clone(), tau.inv()?))
        })
        .collect()
}

/// s_λ as 1/τ(E_T) for the first standard tableau T of shape λ.
pub fn schur_via_trace(shape: &DPartition) -> Result<SchurElement> {
    if shape.size() == 0 {
        return Err(Error::EmptyShape);
    }
    let t = enumerate_standard_dtableaux(shape).remove(0);
    let cache = JmCache::new(shape.d(), shape.size());
    let tau = primitive_idempotent_with(&t, &XiOrder::standard(shape.d()), &cache)?.element.tau();
    if tau.is_zero() {
        return Err(Error::InternalInconsistency(format!("tau(E_T) = 0 at {}", t)));
    }
    let inv = tau.inv()?;
    let value = inv
        .as_laurent()
        .cloned()
        .ok_or_else(|| Error::InternalInconsistency(format!("1/tau(E_T) = {} is not a Laurent polynomial", inv)))?;
    Ok(SchurElement { shape: shape.clone(), value })
}

/// P(q) = Π_{m=1}^n [m]_{q²}
pub fn semisimplicity_poly(n: usize) -> LaurentPolynomial {
    (1..=n as u32).fold(LaurentPolynomial::one(), |acc, m| acc.mul(&q2_integer(m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Specialization {
    pub semisimple: bool,
    pub vanishing: Vec<DPartition>,
}

/// Evaluate P(q̄) and every s_λ(q̄); both criteria are required to agree.
pub fn semisimple_at(d: usize, n: usize, qbar: &CyclotomicNumber) -> Result<Specialization> {
    if qbar.is_zero() {
        return Err(Error::ZeroSpecialization);
    }
    let semisimple = !semisimplicity_poly(n).evaluate(qbar)?.is_zero();
    let mut vanishing = Vec::new();
    for shape in enumerate_dpartitions(d, n) {
        if schur_element(&shape, SchurForm::Hook).value.evaluate(qbar)?.is_zero() {
            vanishing.push(shape);
        }
    }
    if semisimple != vanishing.is_empty() {
        return Err(Error::InternalInconsistency(format!(
            "P(qbar) {} zero but {} Schur elements vanish",
            if semisimple { "is not" } else { "is" },
            vanishing.len()
        )));
    }
    Ok(Specialization { semisimple, vanishing })
}

/// τ(b) = Σ_λ χ_λ(b)/s_λ for every basis word b.
pub fn tau_decomposition_check(d: usize, n: usize) -> Result<VerificationReport> {
    let reps: Vec<(Representation, RationalFunction)> = enumerate_dpartitions(d, n)
        .iter()
        .map(|shape| {
            let s = RationalFunction::from_laurent(schur_element(shape, SchurForm::Hook).value);
            Ok((Representation::build(shape)?, s.inv()?))
        })
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new(format!("tau-decomposition d={} n={}", d, n));
    let results: Vec<_> = all_basis_words(d, n)
        .into_par_iter()
        .map(|b| {
            let rhs = reps.iter().fold(RationalFunction::zero(), |acc, (rep, inv)| acc.add(&rep.character(&b).mul(inv)));
            let lhs = if b.is_identity() { RationalFunction::one() } else { RationalFunction::zero() };
            (b, lhs, rhs)
        })
        .collect();
    for (b, lhs, rhs) in results {
        report.check(format!("tau({})", b), lhs == rhs, || format!("sum of chi/s = {}", rhs));
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;

    fn dp(parts: &[&[usize]]) -> DPartition {
        DPartition::from_parts(parts).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(terms)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(schur_element(&dp(&[&[1]]), SchurForm::Hook).value, LaurentPolynomial::one());
        assert_eq!(schur_element(&dp(&[&[2]]), SchurForm::Hook).value, lp(&[(2, 1), (0, 1)]));
        assert_eq!(schur_element(&dp(&[&[1, 1]]), SchurForm::Hook).value, lp(&[(0, 1), (-2, 1)]));
        assert_eq!(schur_element(&dp(&[&[1], &[]]), SchurForm::Hook).value, LaurentPolynomial::from_integer(2));
        assert_eq!(schur_element(&dp(&[&[1], &[1]]), SchurForm::Content).value, LaurentPolynomial::from_integer(4));
    }

    #[test]
    fn forms_agree() {
        for d in 1..=3 {
            for n in 0..=6 {
                for shape in enumerate_dpartitions(d, n) {
                    let h = schur_element(&shape, SchurForm::Hook);
                    assert_eq!(h, schur_element(&shape, SchurForm::Content), "{}", shape);
                    let hooks: i64 = shape.nodes().iter().map(|x| shape.hook_length(x).unwrap() as i64).product();
                    assert_eq!(h.at_one(), (d as i64).pow(n as u32) * hooks);
                }
            }
        }
    }

    #[test]
    fn multiplicative_over_components() {
        for shape in enumerate_dpartitions(3, 4) {
            let expected = shape.components().iter().fold(LaurentPolynomial::from_integer(81), |acc, p| {
                let single = DPartition::new(vec![p.clone()]).unwrap();
                acc.mul(&schur_element(&single, SchurForm::Hook).value)
            });
            assert_eq!(schur_element(&shape, SchurForm::Hook).value, expected);
        }
        let empty = DPartition::new(vec![Partition::empty()]).unwrap();
        assert!(schur_element(&empty, SchurForm::Content).value.is_one());
    }

    #[test]
    fn trace_oracle() {
        for (d, n) in [(1, 2), (1, 3), (2, 2), (3, 2)] {
            for shape in enumerate_dpartitions(d, n) {
                let closed = schur_element(&shape, SchurForm::Hook);
                assert_eq!(schur_via_trace(&shape).unwrap(), closed);
                for (_, v) in trace_inverses(&shape).unwrap() {
                    assert_eq!(v, RationalFunction::from_laurent(closed.value.clone()));
                }
            }
        }
        assert_eq!(schur_via_trace(&dp(&[&[1], &[1]])).unwrap().value, LaurentPolynomial::from_integer(4));
    }

    #[test]
    fn p_of_q() {
        assert!(semisimplicity_poly(1).is_one());
        assert_eq!(semisimplicity_poly(2), lp(&[(2, 1), (0, 1)]));
        assert_eq!(semisimplicity_poly(3), lp(&[(2, 1), (0, 1)]).mul(&lp(&[(4, 1), (2, 1), (0, 1)])));
    }

    #[test]
    fn specializations() {
        let one = CyclotomicNumber::from_integer(1);
        assert!(semisimple_at(3, 3, &one).unwrap().semisimple);
        assert!(semisimple_at(2, 3, &CyclotomicNumber::from_integer(-1)).unwrap().semisimple);
        let s = semisimple_at(1, 2, &CyclotomicNumber::root(4, 1)).unwrap();
        assert!(!s.semisimple);
        assert_eq!(s.vanishing, vec![dp(&[&[2]]), dp(&[&[1, 1]])]);
        let s = semisimple_at(2, 3, &CyclotomicNumber::root(3, 1)).unwrap();
        assert!(!s.semisimple);
        assert!(s.vanishing.contains(&dp(&[&[3], &[]])));
        assert!(!s.vanishing.contains(&dp(&[&[2], &[1]])));
        assert_eq!(semisimple_at(1, 2, &CyclotomicNumber::zero(1)), Err(Error::ZeroSpecialization));
    }

    #[test]
    fn decomposition_of_tau() {
        for (d, n) in [(1, 3), (2, 2), (3, 1)] {
            let r = tau_decomposition_check(d, n).unwrap();
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(schur_element(&dp(&[&[2]]), SchurForm::Hook)).unwrap();
        assert_eq!(v["schur_at_q1"], 2);
        assert_eq!(v["schur"], "q^2+1");
        assert_eq!(v["shape"], serde_json::json!([[2]]));
    }
}
