use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {:?} is not weakly decreasing", parts)));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row x (1-based); zero past the last row.
    pub fn row(&self, x: usize) -> usize {
        if x == 0 {
            return 0;
        }
        self.parts.get(x - 1).copied().unwrap_or(0)
    }

    /// Length of column y (1-based).
    pub fn column(&self, y: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= y).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        Partition { parts: (1..=width).map(|y| self.column(y)).collect() }
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x >= 1 && y >= 1 && y <= self.row(x)
    }

    /// Rows x whose last box (x, λ_x) is removable.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.parts.len()).filter(|&x| self.row(x) > self.row(x + 1)).collect()
    }

    /// Rows x for which (x, λ_x + 1) is addable, including the new row at the bottom.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.parts.len() + 1).filter(|&x| x == 1 || self.row(x - 1) > self.row(x)).collect()
    }

    pub fn with_box_in_row(&self, x: usize) -> Partition {
        let mut parts = self.parts.clone();
        if x > parts.len() {
            parts.push(1);
        } else {
            parts[x - 1] += 1;
        }
        Partition { parts }
    }

    pub fn without_box_in_row(&self, x: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[x - 1] -= 1;
        if parts[x - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// Σ (i−1)·λ_i
    pub fn eta(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn hook_length(&self, x: usize, y: usize) -> usize {
        self.row(x) - y + self.column(y) - x + 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of n, largest first in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A d-node: row x, column y, position k, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DNode {
    pub row: usize,
    pub col: usize,
    pub pos: usize,
}

impl DNode {
    pub fn new(row: usize, col: usize, pos: usize) -> Self {
        DNode { row, col, pos }
    }

    /// Classical content y − x.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Serialize for DNode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col, self.pos].serialize(s)
    }
}

impl<'de> Deserialize<'de> for DNode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [row, col, pos] = <[usize; 3]>::deserialize(d)?;
        Ok(DNode { row, col, pos })
    }
}

/// A d-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DPartition {
    components: Vec<Partition>,
}

impl DPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("a d-partition needs d >= 1 components".into()));
        }
        Ok(DPartition { components })
    }

    /// Build from raw parts, one list per component.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        Self::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<_>>()?)
    }

    pub fn empty(d: usize) -> Self {
        DPartition { components: vec![Partition::empty(); d.max(1)] }
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, pos: usize) -> &Partition {
        &self.components[pos - 1]
    }

    pub fn contains(&self, node: &DNode) -> bool {
        node.pos >= 1 && node.pos <= self.d() && self.component(node.pos).contains(node.row, node.col)
    }

    /// All nodes, ordered by (position, row, column).
    pub fn nodes(&self) -> Vec<DNode> {
        let mut out = Vec::with_capacity(self.size());
        for (k, lam) in self.components.iter().enumerate() {
            for (x, &len) in lam.parts().iter().enumerate() {
                out.extend((1..=len).map(|y| DNode::new(x + 1, y, k + 1)));
            }
        }
        out
    }

    pub fn removable(&self) -> Vec<DNode> {
        let mut out = Vec::new();
        for (k, lam) in self.components.iter().enumerate() {
            out.extend(lam.removable_rows().into_iter().map(|x| DNode::new(x, lam.row(x), k + 1)));
        }
        out
    }

    pub fn addable(&self) -> Vec<DNode> {
        let mut out = Vec::new();
        for (k, lam) in self.components.iter().enumerate() {
            out.extend(lam.addable_rows().into_iter().map(|x| DNode::new(x, lam.row(x) + 1, k + 1)));
        }
        out
    }

    /// (removable, addable) d-nodes, each sorted by (position, row).
    pub fn node_sets(&self) -> (Vec<DNode>, Vec<DNode>) {
        (self.removable(), self.addable())
    }

    pub fn with_node(&self, node: &DNode) -> Result<DPartition> {
        if !self.addable().contains(node) {
            return Err(Error::Invalid(format!("node {:?} is not addable", node)));
        }
        let mut components = self.components.clone();
        components[node.pos - 1] = components[node.pos - 1].with_box_in_row(node.row);
        Ok(DPartition { components })
    }

    pub fn without_node(&self, node: &DNode) -> Result<DPartition> {
        if !self.removable().contains(node) {
            return Err(Error::Invalid(format!("node {:?} is not removable", node)));
        }
        let mut components = self.components.clone();
        components[node.pos - 1] = components[node.pos - 1].without_box_in_row(node.row);
        Ok(DPartition { components })
    }

    pub fn hook_length(&self, node: &DNode) -> Result<usize> {
        if !self.contains(node) {
            return Err(Error::NodeOutsideShape { row: node.row, col: node.col, pos: node.pos });
        }
        Ok(self.component(node.pos).hook_length(node.row, node.col))
    }

    pub fn eta(&self) -> usize {
        self.components.iter().map(Partition::eta).sum()
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        if s.len() == 1 {
            write!(f, "{}", s[0])
        } else {
            write!(f, "({})", s.join(", "))
        }
    }
}

/// All d-partitions of n. Compositions of n are taken with the earlier
/// components as large as possible first; each component runs over
/// `partitions_of` in its order.
pub fn enumerate_dpartitions(d: usize, n: usize) -> Vec<DPartition> {
    assert!(d >= 1, "d must be positive");
    fn go(d: usize, rest: usize, cur: &mut Vec<Partition>, out: &mut Vec<DPartition>) {
        if cur.len() == d - 1 {
            for p in partitions_of(rest) {
                cur.push(p);
                out.push(DPartition { components: cur.clone() });
                cur.pop();
            }
            return;
        }
        for m in (0..=rest).rev() {
            for p in partitions_of(m) {
                cur.push(p);
                go(d, rest - m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(parts: &[&[usize]]) -> DPartition {
        DPartition::from_parts(parts).unwrap()
    }

    #[test]
    fn partitions_of_three() {
        let got: Vec<_> = partitions_of(3).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn dpartition_counts() {
        assert_eq!(enumerate_dpartitions(1, 3).len(), 3);
        assert_eq!(enumerate_dpartitions(2, 0), vec![DPartition::empty(2)]);
        assert_eq!(enumerate_dpartitions(3, 2).len(), 9);
    }

    #[test]
    fn node_sets_example() {
        let (rem, add) = dp(&[&[2], &[], &[1]]).node_sets();
        assert_eq!(rem, vec![DNode::new(1, 2, 1), DNode::new(1, 1, 3)]);
        assert_eq!(
            add,
            vec![DNode::new(1, 3, 1), DNode::new(2, 1, 1), DNode::new(1, 1, 2), DNode::new(1, 2, 3), DNode::new(2, 1, 3)]
        );
    }

    #[test]
    fn node_sets_of_column() {
        let (rem, add) = dp(&[&[1, 1]]).node_sets();
        assert_eq!(rem, vec![DNode::new(2, 1, 1)]);
        assert_eq!(add, vec![DNode::new(1, 2, 1), DNode::new(3, 1, 1)]);
        let (rem, add) = DPartition::empty(3).node_sets();
        assert!(rem.is_empty());
        assert_eq!(add, (1..=3).map(|k| DNode::new(1, 1, k)).collect::<Vec<_>>());
    }

    #[test]
    fn hook_lengths_and_eta() {
        let l = dp(&[&[2, 1]]);
        assert_eq!(l.hook_length(&DNode::new(1, 1, 1)), Ok(3));
        assert_eq!(l.hook_length(&DNode::new(1, 2, 1)), Ok(1));
        assert_eq!(dp(&[&[1]]).hook_length(&DNode::new(1, 1, 1)), Ok(1));
        assert_eq!(dp(&[&[3, 1]]).hook_length(&DNode::new(1, 2, 1)), Ok(2));
        assert_eq!(dp(&[&[3, 1]]).hook_length(&DNode::new(2, 1, 1)), Ok(1));
        assert_eq!(l.hook_length(&DNode::new(2, 2, 1)), Err(Error::NodeOutsideShape { row: 2, col: 2, pos: 1 }));
        assert_eq!(dp(&[&[2]]).eta(), 0);
        assert_eq!(dp(&[&[1, 1]]).eta(), 1);
        assert_eq!(dp(&[&[2, 1], &[1]]).eta(), 1);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
