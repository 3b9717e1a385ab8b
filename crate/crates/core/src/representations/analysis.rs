use rayon::prelude::*;

use super::seminormal::Representation;
use crate::algebra::all_basis_words;
use crate::combinatorics::{enumerate_dpartitions, DPartition};
use crate::error::{Error, Result};
use crate::linalg::{rank, RepMatrix};
use crate::report::VerificationReport;
use crate::roots::XiOrder;
use crate::scalars::RationalFunction;

/// Compare the restriction of V_λ to Y_{d,n−1} with ⊕_{θ removable} V_{λ∖θ}
/// through characters on every basis word of Y_{d,n−1}.
pub fn branching_check(shape: &DPartition, xi: &XiOrder) -> Result<VerificationReport> {
    let n = shape.size();
    if n < 2 {
        return Err(Error::Invalid(format!("branching needs n >= 2, got shape {}", shape)));
    }
    let d = shape.d();
    let big = Representation::new(shape, xi)?;
    let smaller: Vec<Representation> = shape
        .removable()
        .iter()
        .map(|node| Representation::new(&shape.without_node(node)?, xi))
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new(format!("branching {}", shape));
    let results: Vec<_> = all_basis_words(d, n - 1)
        .into_par_iter()
        .map(|b| {
            let lhs = big.character(&b.extend());
            let rhs = smaller.iter().fold(RationalFunction::zero(), |acc, r| acc.add(&r.character(&b)));
            (b, lhs, rhs)
        })
        .collect();
    for (b, lhs, rhs) in results {
        report.check(format!("restriction at {}", b), lhs == rhs, || format!("{} != {}", lhs, rhs));
    }
    Ok(report.finish())
}

/// dim of {X : X·M = M·X for every generator matrix M}.
pub fn commutant_dimension(rep: &Representation) -> usize {
    let dim = rep.dim();
    let gens: Vec<&RepMatrix> = (1..=rep.n()).map(|j| rep.t_matrix(j)).chain((1..rep.n()).map(|i| rep.g_matrix(i))).collect();
    // unknown x_{r,c} at index r*dim + c; equation (XM − MX)_{r,c} = 0
    let mut rows = Vec::new();
    for m in gens {
        for r in 0..dim {
            for c in 0..dim {
                let mut eq = vec![RationalFunction::zero(); dim * dim];
                for k in 0..dim {
                    let mkc = m.get(k, c);
                    if !mkc.is_zero() {
                        eq[r * dim + k] = eq[r * dim + k].add(mkc);
                    }
                    let mrk = m.get(r, k);
                    if !mrk.is_zero() {
                        eq[k * dim + c] = eq[k * dim + c].sub(mrk);
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    dim * dim - rank(&rows, dim * dim)
}

/// Character values of V_λ on every basis word of Y_{d,n}, in `all_basis_words` order.
pub fn character_table_row(rep: &Representation) -> Vec<RationalFunction> {
    all_basis_words(rep.d(), rep.n()).par_iter().map(|b| rep.character(b)).collect()
}

/// True iff the joint eigenvalue tuples (ξ_{p(T|i)}, q^{2cc(T|i)})_i are
/// pairwise distinct over all standard tableaux of size n.
pub fn jm_separation_check(d: usize, n: usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    enumerate_dpartitions(d, n)
        .iter()
        .flat_map(crate::combinatorics::enumerate_standard_dtableaux)
        .all(|t| seen.insert(t.order_key()))
}
