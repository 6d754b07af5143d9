use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A skew diagram `outer / inner` with `inner` contained in `outer`.
///
/// Boxes use 1-based matrix coordinates: `(r, c)` lies in the diagram when
/// `inner_r < c <= outer_r`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewDiagram {
    #[serde(rename = "lambda")]
    outer: Partition,
    #[serde(rename = "mu")]
    inner: Partition,
}

/// A horizontal or vertical unit step of a boundary path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    H,
    V,
}

/// The outer and inner boundary paths of a skew diagram, read from the
/// lower left corner to the upper right corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPair {
    pub outer: Vec<Step>,
    pub inner: Vec<Step>,
}

impl SkewDiagram {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Containment { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(Self { outer, inner })
    }

    /// The straight shape `p / ()`.
    pub fn straight(p: Partition) -> Self {
        Self { outer: p, inner: Partition::empty() }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `staircase(n) / staircase(n - 1)`: `n` pairwise disconnected boxes.
    pub fn staircase(n: usize) -> Self {
        Self { outer: Partition::staircase(n), inner: Partition::staircase(n.saturating_sub(1)) }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of rows plus number of columns of the bounding frame.
    pub fn rank(&self) -> usize {
        self.outer.first() + self.outer.length()
    }

    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.outer.length())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r + 1, c)))
            .collect()
    }

    /// No empty rows and no empty columns.
    pub fn is_basic(&self) -> bool {
        (0..self.outer.length())
            .all(|i| self.inner.part(i) < self.outer.part(i) && self.inner.part(i) <= self.outer.part(i + 1))
    }

    /// Builds the skew diagram whose boxes are `boxes` with all empty rows and
    /// columns deleted. Returns `None` if the compacted set is not a skew shape.
    pub fn from_boxes(boxes: &[(usize, usize)]) -> Option<SkewDiagram> {
        let mut rows: Vec<usize> = boxes.iter().map(|b| b.0).collect();
        let mut cols: Vec<usize> = boxes.iter().map(|b| b.1).collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        let mut lo = vec![usize::MAX; rows.len()];
        let mut hi = vec![0; rows.len()];
        let mut count = vec![0; rows.len()];
        for &(r, c) in boxes {
            let r = rows.binary_search(&r).ok()?;
            let c = cols.binary_search(&c).ok()? + 1;
            lo[r] = lo[r].min(c);
            hi[r] = hi[r].max(c);
            count[r] += 1;
        }
        if (0..rows.len()).any(|r| hi[r] + 1 - lo[r] != count[r]) {
            return None;
        }
        let outer = Partition::new(hi).ok()?;
        let inner = Partition::new(lo.into_iter().map(|l| l - 1).collect()).ok()?;
        let d = SkewDiagram::new(outer, inner).ok()?;
        (d.size() == boxes.len()).then_some(d)
    }

    /// Deletes empty rows and columns.
    pub fn to_basic(&self) -> SkewDiagram {
        if self.is_basic() {
            return self.clone();
        }
        SkewDiagram::from_boxes(&self.boxes()).expect("compacting a skew shape yields a skew shape")
    }

    /// The 180 degree rotation, normalised to basic position.
    pub fn rotate(&self) -> SkewDiagram {
        let rows = self.outer.length();
        let width = self.outer.first();
        let outer = (0..rows).map(|i| width - self.inner.part(rows - 1 - i)).collect();
        let inner = (0..rows).map(|i| width - self.outer.part(rows - 1 - i)).collect();
        let rotated = SkewDiagram {
            outer: Partition::new(outer).expect("rotation preserves monotonicity"),
            inner: Partition::new(inner).expect("rotation preserves monotonicity"),
        };
        rotated.to_basic()
    }

    pub fn conjugate(&self) -> SkewDiagram {
        SkewDiagram { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// `(outer + other.outer) / (inner + other.inner)`.
    pub fn sum(&self, other: &SkewDiagram) -> SkewDiagram {
        SkewDiagram { outer: self.outer.sum(&other.outer), inner: self.inner.sum(&other.inner) }
    }

    /// `(outer u other.outer) / (inner u other.inner)`.
    pub fn union(&self, other: &SkewDiagram) -> SkewDiagram {
        SkewDiagram { outer: self.outer.union(&other.outer), inner: self.inner.union(&other.inner) }
    }

    /// `min(dp(outer), dp(inner) + 1)`, evaluated on the basic form.
    pub fn delta_value(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let d = self.to_basic();
        Ok(d.outer.distinct_parts().min(d.inner.distinct_parts() + 1))
    }

    /// The outer and inner boundary paths.
    pub fn paths(&self) -> Result<PathPair> {
        if self.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let outer = partition_path(&self.outer, self.outer.length());
        let mut inner = vec![Step::V; self.outer.length() - self.inner.length()];
        inner.extend(partition_path(&self.inner, self.inner.length()));
        inner.extend(std::iter::repeat_n(Step::H, self.outer.first() - self.inner.first()));
        Ok(PathPair { outer, inner })
    }
}

/// Path of `p` from the lower left, rows `len..1`, each row's horizontal run
/// followed by one vertical step.
fn partition_path(p: &Partition, len: usize) -> Vec<Step> {
    let mut steps = Vec::new();
    for i in (0..len).rev() {
        steps.extend(std::iter::repeat_n(Step::H, p.part(i) - p.part(i + 1)));
        steps.push(Step::V);
    }
    steps
}

impl PathPair {
    pub fn len(&self) -> usize {
        self.outer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    /// Checks the structural invariants: equal lengths, equal step counts and
    /// the inner path never having more horizontal steps in a prefix.
    pub fn is_consistent(&self) -> bool {
        let count = |s: &[Step], step| s.iter().filter(|&&x| x == step).count();
        if self.outer.len() != self.inner.len()
            || count(&self.outer, Step::H) != count(&self.inner, Step::H)
            || count(&self.outer, Step::V) != count(&self.inner, Step::V)
        {
            return false;
        }
        let (mut ho, mut hi) = (0, 0);
        for (o, i) in self.outer.iter().zip(&self.inner) {
            ho += usize::from(*o == Step::H);
            hi += usize::from(*i == Step::H);
            if hi > ho {
                return false;
            }
        }
        true
    }

    /// True if the paths touch after some strict prefix and then continue
    /// with the same step; basic diagrams never do.
    pub fn has_shared_segment(&self) -> bool {
        let (mut ho, mut hi) = (0, 0);
        for j in 0..self.len() {
            if ho == hi && self.outer[j] == self.inner[j] {
                return true;
            }
            ho += usize::from(self.outer[j] == Step::H);
            hi += usize::from(self.inner[j] == Step::H);
        }
        false
    }
}

fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::H { 'h' } else { 'v' }).collect()
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o = {}, i = {}", steps_to_string(&self.outer), steps_to_string(&self.inner))
    }
}

impl PathPair {
    pub fn outer_string(&self) -> String {
        steps_to_string(&self.outer)
    }

    pub fn inner_string(&self) -> String {
        steps_to_string(&self.inner)
    }
}

impl PartialOrd for SkewDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by rank, then box count, then outer and inner partitions.
impl Ord for SkewDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then(self.size().cmp(&other.size()))
            .then_with(|| self.outer.cmp(&other.outer))
            .then_with(|| self.inner.cmp(&other.inner))
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

impl FromStr for SkewDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o.parse()?, i.parse()?),
            None => (s.parse()?, Partition::empty()),
        };
        SkewDiagram::new(outer, inner)
    }
}
