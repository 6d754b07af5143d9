use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts, dropping trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from an arbitrary multiset of nonnegative parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Whether the diagram of `other` lies inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    pub fn distinct_parts(&self) -> usize {
        let mut parts = self.parts.clone();
        parts.dedup();
        parts.len()
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Partition {
        Partition { parts: (1..=n).rev().collect() }
    }

    /// Componentwise sum; the shorter partition is padded with zeros.
    pub fn sum(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        Partition { parts: (0..len).map(|i| self.part(i) + other.part(i)).collect() }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Componentwise minimum.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| *a.min(b)).collect();
        Partition { parts }
    }

    /// `(l_1 - l_k, l_1 - l_{k-1}, ..., l_1 - l_2)` with zeros dropped.
    pub fn bar_complement(&self) -> Result<Partition> {
        let first = *self.parts.first().ok_or(Error::EmptyPartition)?;
        let parts = self.parts[1..].iter().rev().map(|p| first - p).collect();
        Partition::new(parts)
    }

    /// Hook length of the box in row `r`, column `c` (both 0-based).
    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let arm = self.parts[r] - c - 1;
        let leg = self.parts[r + 1..].iter().take_while(|&&p| p > c).count();
        arm + leg + 1
    }

    /// Number of standard Young tableaux via the hook length formula.
    ///
    /// The factorial and hook product are reduced over their prime
    /// factorizations so intermediate values never exceed the result.
    pub fn count_syt(&self) -> Result<u64> {
        let n = self.size();
        let mut exponents = vec![0i64; n + 1];
        for k in 2..=n {
            add_factorization(&mut exponents, k, 1);
        }
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                add_factorization(&mut exponents, self.hook_length(r, c), -1);
            }
        }
        let mut result: u64 = 1;
        for (prime, &e) in exponents.iter().enumerate() {
            if e < 0 {
                return Err(Error::Overflow("hook length quotient"));
            }
            for _ in 0..e {
                result = result.checked_mul(prime as u64).ok_or(Error::Overflow("f^lambda"))?;
            }
        }
        Ok(result)
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of `n` with at most `rows` parts, each at most `cols`.
    pub fn all_in_box(n: usize, rows: usize, cols: usize) -> Vec<Partition> {
        Partition::all_of(n).into_iter().filter(|p| p.length() <= rows && p.first() <= cols).collect()
    }

    /// All partitions contained in `self` of the given size.
    pub fn subpartitions_of_size(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_subpartitions(&self.parts, 0, size, usize::MAX, &mut current, &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        (0..=self.size()).flat_map(|s| self.subpartitions_of_size(s)).collect()
    }
}

fn add_factorization(exponents: &mut [i64], mut k: usize, sign: i64) {
    let mut p = 2;
    while p * p <= k {
        while k.is_multiple_of(p) {
            exponents[p] += sign;
            k /= p;
        }
        p += 1;
    }
    if k > 1 {
        exponents[k] += sign;
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

fn fill_subpartitions(
    bound: &[usize],
    row: usize,
    rest: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if row >= bound.len() {
        return;
    }
    let capacity: usize = bound[row..].iter().map(|&b| b.min(max)).sum();
    if capacity < rest {
        return;
    }
    for part in (1..=bound[row].min(max).min(rest)).rev() {
        current.push(part);
        fill_subpartitions(bound, row + 1, rest - part, part, current, out);
        current.pop();
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the part sequences.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            s = inner.trim();
        }
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(0) => Err(Error::Parse(format!("zero part in {s:?}"))),
                    Ok(v) => Ok(v),
                    Err(_) => Err(Error::Parse(format!("invalid part {tok:?} in {s:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Shorthand for building a partition in tests and examples.
///
/// Panics if the parts are not weakly decreasing.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("weakly decreasing parts")
    };
}
