use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{enumerate_dpartitions, DNode, DPartition};
use crate::error::{Error, Result};

/// A filling of a d-partition by 1..n; `nodes[i - 1]` holds entry i.
///
/// Non-standard fillings are representable (they arise as T^{s_i}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DTableau {
    shape: DPartition,
    #[serde(rename = "entries")]
    nodes: Vec<DNode>,
}

impl DTableau {
    pub fn new(shape: DPartition, nodes: Vec<DNode>) -> Result<Self> {
        if nodes.len() != shape.size() {
            return Err(Error::Invalid(format!("{} entries for a shape of size {}", nodes.len(), shape.size())));
        }
        let mut seen = HashSet::with_capacity(nodes.len());
        for node in &nodes {
            if !shape.contains(node) {
                return Err(Error::NodeOutsideShape { row: node.row, col: node.col, pos: node.pos });
            }
            if !seen.insert(*node) {
                return Err(Error::Invalid(format!("node {:?} filled twice", node)));
            }
        }
        Ok(DTableau { shape, nodes })
    }

    /// Build from rows of entries, one list of rows per component:
    /// `from_rows(&[&[&[1, 3]], &[], &[&[2]]])` is (⟦1,3⟧, ∅, ⟦2⟧).
    pub fn from_rows(components: &[&[&[usize]]]) -> Result<Self> {
        let n: usize = components.iter().flat_map(|c| c.iter()).map(|r| r.len()).sum();
        let mut nodes = vec![None; n];
        let mut parts = Vec::with_capacity(components.len());
        for (k, rows) in components.iter().enumerate() {
            parts.push(rows.iter().map(|r| r.len()).collect::<Vec<_>>());
            for (x, row) in rows.iter().enumerate() {
                for (y, &entry) in row.iter().enumerate() {
                    let slot = entry.checked_sub(1).and_then(|i| nodes.get_mut(i)).ok_or_else(|| {
                        Error::Invalid(format!("entry {} out of range 1..={}", entry, n))
                    })?;
                    *slot = Some(DNode::new(x + 1, y + 1, k + 1));
                }
            }
        }
        let part_refs: Vec<&[usize]> = parts.iter().map(Vec::as_slice).collect();
        let shape = DPartition::from_parts(&part_refs)?;
        let nodes = nodes.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::Invalid("missing entry".into()))?;
        Self::new(shape, nodes)
    }

    pub fn shape(&self) -> &DPartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[DNode] {
        &self.nodes
    }

    /// The node holding entry i (1-based).
    pub fn node(&self, i: usize) -> &DNode {
        &self.nodes[i - 1]
    }

    /// p(T|i)
    pub fn position(&self, i: usize) -> usize {
        self.node(i).pos
    }

    /// Classical content of entry i; the quantum content is q^{2·this}.
    pub fn content_exp(&self, i: usize) -> i64 {
        self.node(i).content()
    }

    /// (p(T|i), cc(T|i))
    pub fn data(&self, i: usize) -> Result<(usize, i64)> {
        if i == 0 || i > self.size() {
            return Err(Error::BadIndex(format!("entry {} of a tableau of size {}", i, self.size())));
        }
        Ok((self.position(i), self.content_exp(i)))
    }

    /// The sort key fixing the canonical order of tableaux.
    pub fn order_key(&self) -> Vec<(usize, i64)> {
        self.nodes.iter().map(|nd| (nd.pos, nd.content())).collect()
    }

    fn entry_at(&self) -> std::collections::HashMap<DNode, usize> {
        self.nodes.iter().enumerate().map(|(i, nd)| (*nd, i + 1)).collect()
    }

    pub fn is_standard(&self) -> bool {
        let at = self.entry_at();
        self.nodes.iter().enumerate().all(|(i, nd)| {
            let right = at.get(&DNode::new(nd.row, nd.col + 1, nd.pos));
            let below = at.get(&DNode::new(nd.row + 1, nd.col, nd.pos));
            right.is_none_or(|&e| e > i + 1) && below.is_none_or(|&e| e > i + 1)
        })
    }

    /// T^{s_i}: entries i and i+1 swapped.
    pub fn apply_transposition(&self, i: usize) -> Result<DTableau> {
        if i == 0 || i >= self.size() {
            return Err(Error::BadIndex(format!("s_{} on a tableau of size {}", i, self.size())));
        }
        let mut nodes = self.nodes.clone();
        nodes.swap(i - 1, i);
        Ok(DTableau { shape: self.shape.clone(), nodes })
    }

    /// The tableau with entry n removed; standard if `self` is.
    pub fn restrict(&self) -> Result<DTableau> {
        let last = self.nodes.last().ok_or(Error::EmptyShape)?;
        let shape = self.shape.without_node(last)?;
        Ok(DTableau { shape, nodes: self.nodes[..self.size() - 1].to_vec() })
    }

    /// The tableau with entry n+1 placed at an addable node.
    pub fn extend(&self, node: &DNode) -> Result<DTableau> {
        let shape = self.shape.with_node(node)?;
        let mut nodes = self.nodes.clone();
        nodes.push(*node);
        Ok(DTableau { shape, nodes })
    }

    /// The tableau of size 0 with d empty components.
    pub fn empty(d: usize) -> DTableau {
        DTableau { shape: DPartition::empty(d), nodes: Vec::new() }
    }
}

impl fmt::Display for DTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = self.entry_at();
        let comps: Vec<String> = self
            .shape
            .components()
            .iter()
            .enumerate()
            .map(|(k, lam)| {
                if lam.is_empty() {
                    return "∅".to_string();
                }
                let rows: Vec<String> = (1..=lam.parts().len())
                    .map(|x| {
                        let entries: Vec<String> =
                            (1..=lam.row(x)).map(|y| at[&DNode::new(x, y, k + 1)].to_string()).collect();
                        entries.join(",")
                    })
                    .collect();
                format!("[{}]", rows.join("|"))
            })
            .collect();
        write!(f, "({})", comps.join(", "))
    }
}

#[derive(Deserialize)]
struct RawTableau {
    shape: DPartition,
    entries: Vec<DNode>,
}

impl<'de> Deserialize<'de> for DTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTableau::deserialize(d)?;
        DTableau::new(raw.shape, raw.entries).map_err(serde::de::Error::custom)
    }
}

/// All standard tableaux of shape λ in canonical order.
pub fn enumerate_standard_dtableaux(shape: &DPartition) -> Vec<DTableau> {
    fn go(shape: &DPartition, cur: DTableau, out: &mut Vec<DTableau>) {
        if cur.size() == shape.size() {
            out.push(cur);
            return;
        }
        for node in cur.shape().addable() {
            if shape.contains(&node) {
                go(shape, cur.extend(&node).expect("addable node"), out);
            }
        }
    }
    let mut out = Vec::new();
    go(shape, DTableau::empty(shape.d()), &mut out);
    out.sort_by_key(DTableau::order_key);
    out
}

/// STab_d(n): all standard tableaux of size n, in canonical order.
pub fn all_standard_dtableaux(d: usize, n: usize) -> Vec<DTableau> {
    let mut out: Vec<DTableau> = enumerate_dpartitions(d, n).iter().flat_map(enumerate_standard_dtableaux).collect();
    out.sort_by_key(DTableau::order_key);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(parts: &[&[usize]]) -> DPartition {
        DPartition::from_parts(parts).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_standard_dtableaux(&dp(&[&[2]])).len(), 1);
        assert_eq!(enumerate_standard_dtableaux(&dp(&[&[1], &[1]])).len(), 2);
        assert_eq!(enumerate_standard_dtableaux(&dp(&[&[2, 1]])).len(), 2);
        assert_eq!(enumerate_standard_dtableaux(&dp(&[&[3, 2]])).len(), 5);
    }

    #[test]
    fn tableau_data_example() {
        let t = DTableau::from_rows(&[&[&[1, 3]], &[], &[&[2]]]).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.data(1), Ok((1, 0)));
        assert_eq!(t.data(2), Ok((3, 0)));
        assert_eq!(t.data(3), Ok((1, 1)));
    }

    #[test]
    fn transposition_examples() {
        let t = DTableau::from_rows(&[&[&[1, 3]], &[], &[&[2]]]).unwrap();
        let s = t.apply_transposition(1).unwrap();
        assert_eq!(s, DTableau::from_rows(&[&[&[2, 3]], &[], &[&[1]]]).unwrap());
        assert!(s.is_standard());
        assert_eq!(s.apply_transposition(1).unwrap(), t);

        let row = DTableau::from_rows(&[&[&[1, 2]]]).unwrap();
        assert!(!row.apply_transposition(1).unwrap().is_standard());
        assert!(row.apply_transposition(2).is_err());
    }

    #[test]
    fn json_shape() {
        let t = DTableau::from_rows(&[&[&[1, 3]], &[], &[&[2]]]).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"{"shape":[[2],[],[1]],"entries":[[1,1,1],[1,1,3],[1,2,1]]}"#);
        assert_eq!(serde_json::from_str::<DTableau>(&text).unwrap(), t);
    }
}
