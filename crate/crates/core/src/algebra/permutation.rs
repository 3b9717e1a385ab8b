use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {1..n}, stored 0-based in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Invalid(format!("{:?} is not a permutation", images)));
            }
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// s_{i_1} s_{i_2} … from 1-based generator indices.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::BadIndex(format!("s_{} with n = {}", i, n)));
            }
            w = w.mul_simple(i);
        }
        Ok(w)
    }

    /// The transposition (a b), 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut w = Self::identity(n);
        w.images.swap(a - 1, b - 1);
        w
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(j) for 0-based j.
    #[inline]
    pub fn apply0(&self, j: usize) -> usize {
        self.images[j] as usize
    }

    /// w(j) for 1-based j.
    pub fn apply(&self, j: usize) -> usize {
        self.apply0(j - 1) + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// self ∘ other
    pub fn compose(&self, other: &Self) -> Self {
        Permutation { images: other.images.iter().map(|&j| self.images[j as usize]).collect() }
    }

    /// w·s_i (1-based i): swaps the one-line entries at i and i+1.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// ℓ(w s_i) > ℓ(w), i.e. w(i) < w(i+1).
    pub fn is_right_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// ℓ(w): the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count()).sum()
    }

    /// A reduced word: strip the first right descent repeatedly, collecting
    /// letters from the right. The longest element of S_3 gives [1, 2, 1].
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| !w.is_right_ascent(i)) {
            word.push(i);
            w = w.mul_simple(i);
        }
        word.reverse();
        word
    }

    /// (ℓ(w), reduced word)
    pub fn length_and_reduced_word(&self) -> (usize, Vec<usize>) {
        let word = self.reduced_word();
        (word.len(), word)
    }

    /// All permutations of {1..n} in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// The permutation of {1..n+1} fixing n+1.
    pub fn extend(&self) -> Self {
        let mut images = self.images.clone();
        images.push(self.n() as u8);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}
