use serde::{Deserialize, Serialize};

use super::partition::DNode;
use super::tableau::DTableau;
use crate::error::{Error, Result};

/// A 2×n content array: position indices of the roots of unity and the
/// contents as exponents m of q^{2m}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContentArray {
    pub positions: Vec<usize>,
    #[serde(rename = "contentExps")]
    pub content_exps: Vec<i64>,
}

impl ContentArray {
    pub fn new(positions: Vec<usize>, content_exps: Vec<i64>) -> Result<Self> {
        if positions.len() != content_exps.len() {
            return Err(Error::Invalid("rows of a content array differ in length".into()));
        }
        Ok(ContentArray { positions, content_exps })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Check the three defining conditions; the error names the first
    /// failing condition and the (1-based) entry where it fails.
    pub fn check(&self, d: usize) -> Result<()> {
        let (a, c) = (&self.positions, &self.content_exps);
        let fail = |condition: u8, entry: usize| Err(Error::NotContentArray { condition, entry });
        if c.first().is_some_and(|&e| e != 0) {
            return fail(1, 1);
        }
        if let Some(i) = a.iter().position(|&p| p == 0 || p > d) {
            return fail(1, i + 1);
        }
        for j in 1..a.len() {
            if c[j] != 0 && !(0..j).any(|i| a[i] == a[j] && (c[i] - c[j]).abs() == 1) {
                return fail(2, j + 1);
            }
        }
        for k in 0..a.len() {
            for j in 0..k {
                if a[j] != a[k] || c[j] != c[k] {
                    continue;
                }
                let between = |e: i64| (j + 1..k).any(|i| a[i] == a[j] && c[i] == e);
                if k - j < 3 || !between(c[j] - 1) || !between(c[j] + 1) {
                    return fail(3, k + 1);
                }
            }
        }
        Ok(())
    }

    pub fn is_content_array(&self, d: usize) -> bool {
        self.check(d).is_ok()
    }

    /// f(T): positions and classical contents of the entries of T.
    pub fn from_tableau(t: &DTableau) -> Result<Self> {
        if !t.is_standard() {
            return Err(Error::NotStandard);
        }
        Ok(ContentArray {
            positions: t.nodes().iter().map(|nd| nd.pos).collect(),
            content_exps: t.nodes().iter().map(DNode::content).collect(),
        })
    }

    /// The standard tableau T with f(T) = self: each entry goes to the
    /// first free node on its diagonal.
    pub fn to_tableau(&self, d: usize) -> Result<DTableau> {
        self.check(d)?;
        let mut t = DTableau::empty(d);
        for (&pos, &m) in self.positions.iter().zip(&self.content_exps) {
            let lam = t.shape().component(pos);
            let mut x = if m >= 0 { 1 } else { (1 - m) as usize };
            while lam.contains(x, (x as i64 + m) as usize) {
                x += 1;
            }
            let node = DNode::new(x, (x as i64 + m) as usize, pos);
            t = t.extend(&node).map_err(|_| Error::InternalInconsistency(format!("node {:?} not addable", node)))?;
        }
        if !t.is_standard() {
            return Err(Error::InternalInconsistency("constructed tableau is not standard".into()));
        }
        Ok(t)
    }
}
