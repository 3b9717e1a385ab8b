//! Primitive idempotents E_T built from the Jucys–Murphy elements, their
//! position/content factorization E_T = E_T^p E_T^c, and block idempotents.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{jm_elements, t_minus, t_power, AlgebraElement};
use crate::combinatorics::{all_standard_dtableaux, enumerate_standard_dtableaux, DPartition, DTableau};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::roots::XiOrder;
use crate::scalars::{content_scalar, RationalFunction};

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentRecord {
    pub tableau: DTableau,
    pub element: AlgebraElement,
    #[serde(rename = "pPart")]
    pub p_part: AlgebraElement,
    #[serde(rename = "cPart")]
    pub c_part: AlgebraElement,
}

/// Which family a factor of E_T belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Position,
    Content,
}

/// One factor of E_T, attached to entry `entry`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub entry: usize,
    pub kind: FactorKind,
    pub element: AlgebraElement,
}

/// The JM elements J_1..J_n in Y_{d,n}, shared between idempotent builds.
pub struct JmCache {
    d: usize,
    n: usize,
    jm: Vec<AlgebraElement>,
}

impl JmCache {
    pub fn new(d: usize, n: usize) -> Self {
        JmCache { d, n, jm: jm_elements(d, n) }
    }

    pub fn get(&self, i: usize) -> &AlgebraElement {
        &self.jm[i - 1]
    }
}

/// All factors of E_T in entry order: for each i, the position factor
/// Π_{ξ≠ξ_{p_i}} (t_i − ξ)/(ξ_{p_i} − ξ) and then one content factor
/// (J_i − c(θ'))/(c(θ_i) − c(θ')) per addable θ' of the same component.
pub fn idempotent_factors(t: &DTableau, xi: &XiOrder, cache: &JmCache) -> Result<Vec<Factor>> {
    let d = t.shape().d();
    let n = t.size();
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    if xi.d() != d || cache.d != d || cache.n != n {
        return Err(Error::AmbientMismatch(d, n, cache.d, cache.n));
    }
    let mut factors = Vec::new();
    let mut prefix = DTableau::empty(d);
    for i in 1..=n {
        let node = *t.node(i);
        let target = xi.xi(node.pos);
        let mut p = AlgebraElement::one(d, n);
        for k in 1..=d {
            if k == node.pos {
                continue;
            }
            let other = xi.xi(k);
            let denom = target.sub(&other).inv()?;
            p = p.mul(&t_minus(d, n, i, &other).scale(&RationalFunction::from_cyclotomic(denom)))?;
        }
        if d > 1 {
            factors.push(Factor { entry: i, kind: FactorKind::Position, element: p });
        }
        let ci = content_scalar(node.content());
        for other in prefix.shape().addable() {
            if other.pos != node.pos || other.content() == node.content() {
                continue;
            }
            let co = content_scalar(other.content());
            let num = cache.get(i).add_scalar(&co.neg());
            factors.push(Factor { entry: i, kind: FactorKind::Content, element: num.scale(&ci.sub(&co).inv()?) });
        }
        prefix = prefix.extend(&node)?;
    }
    Ok(factors)
}

/// E_T, multiplied out in entry order, together with E_T^p and E_T^c.
pub fn primitive_idempotent(t: &DTableau, xi: &XiOrder) -> Result<IdempotentRecord> {
    primitive_idempotent_with(t, xi, &JmCache::new(t.shape().d(), t.size()))
}

pub fn primitive_idempotent_with(t: &DTableau, xi: &XiOrder, cache: &JmCache) -> Result<IdempotentRecord> {
    let d = t.shape().d();
    let n = t.size();
    let factors = idempotent_factors(t, xi, cache)?;
    let mut element = AlgebraElement::one(d, n);
    let mut p_part = AlgebraElement::one(d, n);
    let mut c_part = AlgebraElement::one(d, n);
    for f in &factors {
        element = element.mul(&f.element)?;
        match f.kind {
            FactorKind::Position => p_part = p_part.mul(&f.element)?,
            FactorKind::Content => c_part = c_part.mul(&f.element)?,
        }
    }
    Ok(IdempotentRecord { tableau: t.clone(), element, p_part, c_part })
}

/// E_λ = Σ_{shape(T)=λ} E_T.
pub fn block_idempotent(shape: &DPartition, xi: &XiOrder) -> Result<AlgebraElement> {
    let (d, n) = (shape.d(), shape.size());
    let cache = JmCache::new(d, n);
    let parts: Vec<AlgebraElement> = enumerate_standard_dtableaux(shape)
        .par_iter()
        .map(|t| primitive_idempotent_with(t, xi, &cache).map(|r| r.element))
        .collect::<Result<_>>()?;
    parts.iter().try_fold(AlgebraElement::zero(d, n), |acc, e| acc.add(e))
}

/// Idempotence, orthogonality, completeness, eigenvalues, τ(E^p) = 1/d^n,
/// the factorization, and E_U = Σ_ψ E_{U∪ψ} over every standard T of size n.
pub fn verify_idempotent_system(d: usize, n: usize) -> Result<VerificationReport> {
    verify_idempotent_system_with(d, n, &XiOrder::standard(d))
}

pub fn verify_idempotent_system_with(d: usize, n: usize, xi: &XiOrder) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("idempotents d={} n={}", d, n));
    let cache = JmCache::new(d, n);
    let tableaux = all_standard_dtableaux(d, n);
    let records: Vec<IdempotentRecord> =
        tableaux.par_iter().map(|t| primitive_idempotent_with(t, xi, &cache)).collect::<Result<_>>()?;
    let one = AlgebraElement::one(d, n);

    let squares: Vec<bool> = records.par_iter().map(|r| r.element.mul(&r.element).map(|s| s == r.element)).collect::<Result<_>>()?;
    for (r, ok) in records.iter().zip(squares) {
        report.check(format!("(a) E^2 = E at {}", r.tableau), ok, || "E_T^2 - E_T is nonzero".into());
    }

    let pairs: Vec<(usize, usize)> = (0..records.len()).flat_map(|a| (0..records.len()).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let products: Vec<bool> =
        pairs.par_iter().map(|&(a, b)| records[a].element.mul(&records[b].element).map(|p| p.is_zero())).collect::<Result<_>>()?;
    for (&(a, b), ok) in pairs.iter().zip(products) {
        report.check(format!("(b) E E' = 0 at {} {}", records[a].tableau, records[b].tableau), ok, || "product is nonzero".into());
    }

    let sum = records.iter().try_fold(AlgebraElement::zero(d, n), |acc, r| acc.add(&r.element))?;
    report.check("(c) sum of E_T = 1", sum == one, || format!("sum - 1 = {}", sum.sub(&one).expect("same ambient")));

    let eigen: Vec<Vec<(String, bool)>> = records
        .par_iter()
        .map(|r| {
            let mut out = Vec::new();
            for i in 1..=n {
                let (pos, cc) = r.tableau.data(i)?;
                let lhs = cache.get(i).mul(&r.element)?;
                out.push((format!("(d) J_{} E = q^{} E at {}", i, 2 * cc, r.tableau), lhs == r.element.scale(&content_scalar(cc))));
                let ti = t_power(d, n, i, 1);
                let lhs = ti.mul(&r.element)?;
                let rhs = r.element.scale(&RationalFunction::from_cyclotomic(xi.xi(pos)));
                out.push((format!("(d) t_{} E = xi_{} E at {}", i, pos, r.tableau), lhs == rhs));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    for (name, ok) in eigen.into_iter().flatten() {
        report.check(name, ok, || "eigenvalue mismatch".into());
    }

    let expected = RationalFunction::from_integer(d.pow(n as u32) as i64).inv()?;
    for r in &records {
        let tau = r.p_part.tau();
        report.check(format!("(e) tau(E^p) = 1/d^n at {}", r.tableau), tau == expected, || format!("tau = {}", tau));
    }

    let factored: Vec<bool> = records.par_iter().map(|r| r.p_part.mul(&r.c_part).map(|p| p == r.element)).collect::<Result<_>>()?;
    for (r, ok) in records.iter().zip(factored) {
        report.check(format!("(f) E = E^p E^c at {}", r.tableau), ok, || "factorization differs".into());
    }

    if n >= 1 {
        let by_tableau: HashMap<&DTableau, &AlgebraElement> = records.iter().map(|r| (&r.tableau, &r.element)).collect();
        let small_cache = JmCache::new(d, n - 1);
        for u in all_standard_dtableaux(d, n - 1) {
            let eu = primitive_idempotent_with(&u, xi, &small_cache)?.element.extend();
            let mut sum = AlgebraElement::zero(d, n);
            for psi in u.shape().addable() {
                let big = u.extend(&psi)?;
                let e = by_tableau.get(&big).ok_or_else(|| Error::InternalInconsistency(format!("missing tableau {}", big)))?;
                sum = sum.add(e)?;
            }
            report.check(format!("(g) E_U = sum over addable at {}", u), sum == eu, || "restriction sum differs".into());
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{generator, BasisWord, Generator, Permutation};
    use crate::combinatorics::enumerate_dpartitions;
    use crate::linalg::RepMatrix;
    use crate::representations::Representation;
    use crate::scalars::CyclotomicNumber;

    fn dp(parts: &[&[usize]]) -> DPartition {
        DPartition::from_parts(parts).unwrap()
    }

    fn rf(e: i64) -> RationalFunction {
        RationalFunction::q_pow(e)
    }

    #[test]
    fn trivial_case() {
        let t = enumerate_standard_dtableaux(&dp(&[&[1]])).pop().unwrap();
        let r = primitive_idempotent(&t, &XiOrder::standard(1)).unwrap();
        assert_eq!(r.element, AlgebraElement::one(1, 1));
    }

    #[test]
    fn single_position_factor() {
        let t = enumerate_standard_dtableaux(&dp(&[&[1], &[]])).pop().unwrap();
        let r = primitive_idempotent(&t, &XiOrder::standard(2)).unwrap();
        let half = RationalFunction::from_rational(num_rational::BigRational::new(1.into(), 2.into()));
        let t1 = generator(Generator::T(1), 2, 1).unwrap();
        assert_eq!(r.element, t1.add_scalar(&RationalFunction::one()).scale(&half));
        assert_eq!(block_idempotent(&dp(&[&[1], &[]]), &XiOrder::standard(2)).unwrap(), r.element);
    }

    #[test]
    fn row_tableau_of_size_two() {
        let t = enumerate_standard_dtableaux(&dp(&[&[2]])).pop().unwrap();
        let r = primitive_idempotent(&t, &XiOrder::standard(1)).unwrap();
        let g1 = generator(Generator::G(1), 1, 2).unwrap();
        let expected = g1.mul(&g1).unwrap().add_scalar(&rf(-2).neg()).scale(&rf(2).sub(&rf(-2)).inv().unwrap());
        assert_eq!(r.element, expected);
    }

    #[test]
    fn blocks_are_complete_central_and_orthogonal() {
        let xi1 = XiOrder::standard(1);
        let sum = block_idempotent(&dp(&[&[2]]), &xi1).unwrap().add(&block_idempotent(&dp(&[&[1, 1]]), &xi1).unwrap()).unwrap();
        assert_eq!(sum, AlgebraElement::one(1, 2));
        let xi = XiOrder::standard(2);
        let blocks: Vec<_> = enumerate_dpartitions(2, 2).iter().map(|s| block_idempotent(s, &xi).unwrap()).collect();
        let gens = [generator(Generator::T(1), 2, 2).unwrap(), generator(Generator::T(2), 2, 2).unwrap(), generator(Generator::G(1), 2, 2).unwrap()];
        for (i, a) in blocks.iter().enumerate() {
            for g in &gens {
                assert_eq!(a.mul(g).unwrap(), g.mul(a).unwrap());
            }
            for (j, b) in blocks.iter().enumerate() {
                let p = a.mul(b).unwrap();
                if i == j {
                    assert_eq!(&p, a);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn systems_pass() {
        for (d, n, count) in [(1, 2, 2), (1, 3, 4), (2, 2, 6), (3, 2, 12), (2, 3, 20)] {
            let report = verify_idempotent_system(d, n).unwrap();
            assert!(report.passed(), "{}", report);
            assert_eq!(all_standard_dtableaux(d, n).len(), count);
        }
    }

    #[test]
    fn tau_of_position_part() {
        let xi = XiOrder::standard(3);
        let t = all_standard_dtableaux(3, 2).remove(4);
        let r = primitive_idempotent(&t, &xi).unwrap();
        assert_eq!(r.p_part.tau(), RationalFunction::from_integer(9).inv().unwrap());
    }

    #[test]
    fn represented_as_matrix_units() {
        for (d, n) in [(1, 3), (2, 2)] {
            let xi = XiOrder::standard(d);
            let reps: Vec<_> = enumerate_dpartitions(d, n).iter().map(|s| Representation::build(s).unwrap()).collect();
            for t in all_standard_dtableaux(d, n) {
                let e = primitive_idempotent(&t, &xi).unwrap().element;
                for rep in &reps {
                    let m = rep.represent(&e).unwrap();
                    match rep.index_of(&t) {
                        Some(k) => {
                            let mut unit = RepMatrix::zero(rep.dim());
                            unit.set(k, k, RationalFunction::one());
                            assert_eq!(m, unit);
                        }
                        None => assert!(m.is_zero()),
                    }
                }
            }
        }
    }

    #[test]
    fn factor_order_is_irrelevant() {
        let xi = XiOrder::standard(2);
        let cache = JmCache::new(2, 3);
        for t in all_standard_dtableaux(2, 3).iter().step_by(3) {
            let factors = idempotent_factors(t, &xi, &cache).unwrap();
            let forward = factors.iter().fold(AlgebraElement::one(2, 3), |acc, f| acc.mul(&f.element).unwrap());
            let backward = factors.iter().rev().fold(AlgebraElement::one(2, 3), |acc, f| acc.mul(&f.element).unwrap());
            assert_eq!(forward, backward);
            assert_eq!(forward, primitive_idempotent_with(t, &xi, &cache).unwrap().element);
        }
    }

    #[test]
    fn rejects_non_standard() {
        let t = DTableau::from_rows(&[&[&[2, 1]]]);
        assert!(t.is_err() || primitive_idempotent(&t.unwrap(), &XiOrder::standard(1)).is_err());
        let swapped = enumerate_standard_dtableaux(&dp(&[&[2]])).pop().unwrap().apply_transposition(1).unwrap();
        assert_eq!(primitive_idempotent(&swapped, &XiOrder::standard(1)).unwrap_err(), Error::NotStandard);
    }

    #[test]
    fn other_root_order() {
        let xi = XiOrder::new(vec![2, 1]).unwrap();
        assert!(verify_idempotent_system_with(2, 2, &xi).unwrap().passed());
        let t = all_standard_dtableaux(2, 1).remove(0);
        let e = primitive_idempotent(&t, &xi).unwrap().element;
        // position 1 now carries ξ_1 = −1
        let w = BasisWord::new(vec![1], Permutation::identity(1));
        assert_eq!(e.coeff(&w), RationalFunction::from_integer(-1).scale(&CyclotomicNumber::from_rational(num_rational::BigRational::new(1.into(), 2.into()))));
    }
}
