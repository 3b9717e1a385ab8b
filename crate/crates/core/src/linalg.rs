//! Dense square matrices over ℚ(ζ)(q) and exact Gaussian elimination.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::scalars::{CyclotomicNumber, RationalFunction};

/// A dense square matrix; `entries[row][col]`. Column j is the image of the
/// j-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    dim: usize,
    entries: Vec<Vec<RationalFunction>>,
}

impl RepMatrix {
    pub fn zero(dim: usize) -> Self {
        RepMatrix { dim, entries: vec![vec![RationalFunction::zero(); dim]; dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &RationalFunction::one())
    }

    pub fn scalar(dim: usize, c: &RationalFunction) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i][i] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: Vec<RationalFunction>) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, c) in diag.into_iter().enumerate() {
            m.entries[i][i] = c;
        }
        m
    }

    pub fn from_rows(entries: Vec<Vec<RationalFunction>>) -> Self {
        let dim = entries.len();
        assert!(entries.iter().all(|r| r.len() == dim), "matrix must be square");
        RepMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &RationalFunction {
        &self.entries[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RationalFunction) {
        self.entries[row][col] = value;
    }

    pub fn rows(&self) -> &[Vec<RationalFunction>] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, RationalFunction::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, RationalFunction::sub)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction) -> Self {
        assert_eq!(self.dim, other.dim);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect();
        RepMatrix { dim: self.dim, entries }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        RepMatrix { dim: self.dim, entries: self.entries.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = out.entries[i][j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn trace(&self) -> RationalFunction {
        (0..self.dim).fold(RationalFunction::zero(), |acc, i| acc.add(&self.entries[i][i]))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(RationalFunction::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<RationalFunction> {
        (0..self.dim).map(|i| self.entries[i][i].clone()).collect()
    }

    /// Entrywise specialization q ↦ qbar.
    pub fn evaluate(&self, qbar: &CyclotomicNumber) -> crate::Result<Vec<Vec<CyclotomicNumber>>> {
        self.entries.iter().map(|r| r.iter().map(|x| x.evaluate(qbar)).collect()).collect()
    }
}

impl std::ops::Mul for &RepMatrix {
    type Output = RepMatrix;
    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        RepMatrix::mul(self, rhs)
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for RepMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Reduce `rows` (each of length `ncols`) to reduced row echelon form in
/// place; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<RationalFunction>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<RationalFunction>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m, ncols).len()
}

/// A basis of {x : A x = 0}.
pub fn nullspace(rows: &[Vec<RationalFunction>], ncols: usize) -> Vec<Vec<RationalFunction>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RationalFunction::zero(); ncols];
            v[f] = RationalFunction::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = row[f].neg();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    #[test]
    fn nullspace_of_rank_one() {
        let q = RationalFunction::q_pow(1);
        let rows = vec![vec![rf(1), q.clone()], vec![q.clone(), q.mul(&q)]];
        let ns = nullspace(&rows, 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!(rows.iter().all(|r| r[0].mul(&v[0]).add(&r[1].mul(&v[1])).is_zero()));
        assert_eq!(rank(&rows, 2), 1);
    }

    #[test]
    fn matrix_basics() {
        let m = RepMatrix::from_rows(vec![vec![rf(0), rf(1)], vec![rf(1), rf(0)]]);
        assert_eq!(m.mul(&m), RepMatrix::identity(2));
        assert!(m.trace().is_zero());
        assert!(!m.is_diagonal());
    }
}
