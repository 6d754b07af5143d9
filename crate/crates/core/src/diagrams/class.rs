use std::fmt;

use serde::{Serialize, Serializer};

use super::{Partition, SkewDiagram};
use crate::error::{Error, Result};

/// A skew diagram up to translation of its connected components.
///
/// Stores the connected basic components sorted by descending
/// `(rank, size, outer, inner)`, so equality and hashing are structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewClass {
    components: Vec<SkewDiagram>,
}

impl SkewClass {
    /// Builds a class from connected basic components in any order.
    pub fn from_components(mut components: Vec<SkewDiagram>) -> Self {
        debug_assert!(components.iter().all(|c| c.is_basic() && !c.is_empty()));
        components.sort_unstable_by(|a, b| b.cmp(a));
        Self { components }
    }

    /// The class of `staircase(n) / staircase(n - 1)`: `n` single boxes.
    pub fn staircase(n: usize) -> Self {
        Self { components: vec![SkewDiagram::straight(Partition::staircase(1)); n] }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn components(&self) -> &[SkewDiagram] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(SkewDiagram::rank).sum()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(SkewDiagram::size).sum()
    }

    /// `min(dp(outer), dp(inner) + 1)` of any basic arrangement. Both counts
    /// are additive over components once the zero inner row of every
    /// component is counted.
    pub fn delta_value(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let outer: usize = self.components.iter().map(|c| c.outer().distinct_parts()).sum();
        let inner: usize = self.components.iter().map(|c| c.inner().distinct_parts() + 1).sum();
        Ok(outer.min(inner))
    }

    pub fn is_staircase(&self) -> bool {
        self.components.iter().all(|c| c.size() == 1)
    }

    /// The canonical concrete representative.
    pub fn representative(&self) -> SkewDiagram {
        arrange(&self.components)
    }

    /// All concrete basic diagrams in the class, one per distinct ordering
    /// of the components, in lexicographic order of orderings starting with
    /// the canonical one.
    pub fn arrangements(&self) -> Vec<SkewDiagram> {
        let mut labels: Vec<usize> = Vec::with_capacity(self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let first = self.components[..i].iter().position(|d| d == c).unwrap_or(i);
            labels.push(first);
        }
        let mut out = Vec::new();
        loop {
            let ordered: Vec<SkewDiagram> = labels.iter().map(|&l| self.components[l].clone()).collect();
            out.push(arrange(&ordered));
            if !next_permutation(&mut labels) {
                break;
            }
        }
        out
    }
}

/// Stacks the components anti-diagonally, `components[0]` at the lower left
/// and each following component above and to the right of the previous one.
pub fn arrange(components: &[SkewDiagram]) -> SkewDiagram {
    let mut offsets = Vec::with_capacity(components.len());
    let mut offset = 0;
    for c in components {
        offsets.push(offset);
        offset += c.outer().first();
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for (c, off) in components.iter().zip(&offsets).rev() {
        for r in 0..c.outer().length() {
            outer.push(c.outer().part(r) + off);
            inner.push(c.inner().part(r) + off);
        }
    }
    SkewDiagram::new(
        Partition::new(outer).expect("stacked rows are weakly decreasing"),
        Partition::new(inner).expect("stacked rows are weakly decreasing"),
    )
    .expect("stacked components are contained")
}

/// Splits a diagram into its connected components, each made basic.
pub fn decay(d: &SkewDiagram) -> SkewClass {
    let boxes = d.boxes();
    let mut uf = UnionFind::new(boxes.len());
    let index = |r: usize, c: usize| boxes.binary_search(&(r, c)).ok();
    for (i, &(r, c)) in boxes.iter().enumerate() {
        if let Some(j) = index(r, c + 1) {
            uf.union(i, j);
        }
        if let Some(j) = index(r + 1, c) {
            uf.union(i, j);
        }
    }
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut slot = vec![usize::MAX; boxes.len()];
    for (i, b) in boxes.iter().enumerate() {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(*b);
    }
    SkewClass::from_components(
        groups
            .iter()
            .map(|g| SkewDiagram::from_boxes(g).expect("a component of a skew shape is a skew shape"))
            .collect(),
    )
}

impl From<&SkewDiagram> for SkewClass {
    fn from(d: &SkewDiagram) -> Self {
        decay(d)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for SkewClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

impl fmt::Debug for SkewClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{c:?}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for SkewClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
