//! Littlewood-Richardson coefficients and skew character decomposition.
//!
//! A single backtracking kernel enumerates LR tableaux of a skew shape. Boxes
//! are filled in reverse row reading order (top row first, right to left
//! within a row) so every partial filling is a prefix of the reverse row word
//! and the lattice condition can be checked incrementally.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::{Partition, SkewDiagram};
use crate::error::{Error, Result};

/// A skew character `sum_nu c_nu [nu]` with positive coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewCharacter {
    degree: usize,
    terms: BTreeMap<Partition, u64>,
}

/// Number of components and number of constituents of a character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcType {
    pub components: u64,
    pub constituents: u64,
}

/// One term of the structured form of a character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub nu: Partition,
    pub coeff: u64,
}

impl SkewCharacter {
    /// Builds a character from terms; zero coefficients are dropped and
    /// repeated keys are merged.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (nu, c) in terms {
            if nu.size() != degree {
                return Err(Error::Parse(format!("term [{nu}] does not have degree {degree}")));
            }
            if c > 0 {
                let e = map.entry(nu).or_insert(0u64);
                *e = e.checked_add(c).ok_or(Error::Overflow("character coefficient"))?;
            }
        }
        Ok(Self { degree, terms: map })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    /// Terms in canonical order: partitions lexicographically descending.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn structured(&self) -> Vec<Term> {
        self.terms().map(|(nu, coeff)| Term { nu: nu.clone(), coeff }).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn cc_type(&self) -> CcType {
        CcType { components: self.terms.len() as u64, constituents: self.terms.values().sum() }
    }

    /// Unordered pairs of distinct components whose diagrams share all but
    /// one box.
    pub fn one_box_pairs(&self) -> u64 {
        let keys: Vec<&Partition> = self.terms.keys().collect();
        let mut count = 0;
        for (i, a) in keys.iter().enumerate() {
            for b in &keys[i + 1..] {
                if a.intersect(b).size() + 1 == self.degree {
                    count += 1;
                }
            }
        }
        count
    }

    /// Applies conjugation to every component.
    pub fn conjugate(&self) -> SkewCharacter {
        SkewCharacter { degree: self.degree, terms: self.terms.iter().map(|(p, &c)| (p.conjugate(), c)).collect() }
    }
}

impl CcType {
    pub fn at_least(&self, components: u64, constituents: u64) -> bool {
        self.components >= components && self.constituents >= constituents
    }
}

impl fmt::Display for CcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.components, self.constituents)
    }
}

impl fmt::Display for SkewCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (nu, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c == 1 {
                write!(f, "[{nu}]")?;
            } else {
                write!(f, "{c}*[{nu}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewCharacter({self})")
    }
}

impl FromStr for SkewCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for tok in s.split('+') {
            let tok = tok.trim();
            let (coeff, rest) = match tok.split_once('*') {
                Some((c, rest)) => {
                    let c = c.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad coefficient in {tok:?}")))?;
                    (c, rest.trim())
                }
                None => (1, tok),
            };
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [parts] in {tok:?}")))?;
            terms.push((inner.parse::<Partition>()?, coeff));
        }
        let degree = terms.first().map(|t| t.0.size()).unwrap_or(0);
        SkewCharacter::from_terms(degree, terms)
    }
}

impl Serialize for SkewCharacter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.structured().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkewCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let degree = terms.first().map(|t| t.nu.size()).unwrap_or(0);
        SkewCharacter::from_terms(degree, terms.into_iter().map(|t| (t.nu, t.coeff))).map_err(serde::de::Error::custom)
    }
}

/// Box layout of a skew shape in reverse row reading order.
struct Kernel {
    /// Index of the box immediately to the right, if any.
    right: Vec<Option<usize>>,
    /// Index of the box immediately above, if it belongs to the shape.
    above: Vec<Option<usize>>,
    rows: usize,
}

impl Kernel {
    fn new(d: &SkewDiagram) -> Self {
        let mut order: HashMap<(usize, usize), usize> = HashMap::new();
        let mut right = Vec::new();
        let mut above = Vec::new();
        let (outer, inner) = (d.outer(), d.inner());
        for r in 0..outer.length() {
            for c in (inner.part(r) + 1..=outer.part(r)).rev() {
                let idx = right.len();
                right.push(order.get(&(r, c + 1)).copied());
                above.push(if r > 0 { order.get(&(r - 1, c)).copied() } else { None });
                order.insert((r, c), idx);
            }
        }
        Kernel { right, above, rows: outer.length() }
    }

    /// Visits the content of every LR tableau. With `target`, only fillings
    /// of that content are produced.
    fn run(&self, target: Option<&[usize]>, visit: &mut dyn FnMut(&[usize])) {
        let mut entries = vec![0usize; self.right.len()];
        // counts[v] = occurrences of value v; index 0 is a sentinel.
        let mut counts = vec![0usize; self.rows + 2];
        counts[0] = usize::MAX;
        self.fill(0, 0, target, &mut entries, &mut counts, visit);
    }

    fn fill(
        &self,
        pos: usize,
        max_used: usize,
        target: Option<&[usize]>,
        entries: &mut [usize],
        counts: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == entries.len() {
            visit(&counts[1..=max_used]);
            return;
        }
        let lo = self.above[pos].map_or(1, |a| entries[a] + 1);
        let mut hi = self.right[pos].map_or(max_used + 1, |r| entries[r]);
        hi = hi.min(max_used + 1).min(self.rows);
        if let Some(t) = target {
            hi = hi.min(t.len());
        }
        for v in lo..=hi {
            if counts[v - 1] <= counts[v] {
                continue;
            }
            if let Some(t) = target {
                if counts[v] >= t[v - 1] {
                    continue;
                }
            }
            entries[pos] = v;
            counts[v] += 1;
            self.fill(pos + 1, max_used.max(v), target, entries, counts, visit);
            counts[v] -= 1;
        }
    }
}

/// Decomposes the skew character of `d` into irreducible characters.
pub fn decompose(d: &SkewDiagram) -> SkewCharacter {
    let mut terms: BTreeMap<Partition, u64> = BTreeMap::new();
    Kernel::new(d).run(None, &mut |content| {
        let nu = Partition::new(content.to_vec()).expect("lattice words have partition content");
        *terms.entry(nu).or_insert(0) += 1;
    });
    SkewCharacter { degree: d.size(), terms }
}

/// The Littlewood-Richardson coefficient `c(outer; inner, nu)`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, nu: &Partition) -> Result<u64> {
    let d = SkewDiagram::new(outer.clone(), inner.clone())?;
    if nu.size() != d.size() {
        return Ok(0);
    }
    let mut count = 0u64;
    Kernel::new(&d).run(Some(nu.parts()), &mut |_| count += 1);
    Ok(count)
}

/// `[alpha] (x) [beta]`: coefficients `c(nu; alpha, beta)` for all `nu`.
pub fn outer_product(alpha: &Partition, beta: &Partition) -> SkewCharacter {
    let degree = alpha.size() + beta.size();
    let terms = Partition::all_of(degree).into_iter().filter(|nu| nu.contains(alpha)).map(|nu| {
        let c = lr_coefficient(&nu, alpha, beta).expect("containment checked");
        (nu, c)
    });
    SkewCharacter::from_terms(degree, terms).expect("degrees match")
}

/// Counts standard fillings of the boxes of `d` directly, without any LR
/// machinery: `sum_nu c(lambda; mu, nu) f^nu` must agree with this.
pub fn count_syt_skew(d: &SkewDiagram) -> u64 {
    let boxes = d.boxes();
    assert!(boxes.len() <= 64, "count_syt_skew supports at most 64 boxes");
    let index: HashMap<(usize, usize), usize> = boxes.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let preds: Vec<u64> = boxes
        .iter()
        .map(|&(r, c)| {
            let mut mask = 0u64;
            for nb in [(r, c.wrapping_sub(1)), (r.wrapping_sub(1), c)] {
                if let Some(&j) = index.get(&nb) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    let full = if boxes.len() == 64 { u64::MAX } else { (1u64 << boxes.len()) - 1 };
    let mut memo = HashMap::new();
    count_fillings(0, full, &preds, &mut memo)
}

fn count_fillings(filled: u64, full: u64, preds: &[u64], memo: &mut HashMap<u64, u64>) -> u64 {
    if filled == full {
        return 1;
    }
    if let Some(&v) = memo.get(&filled) {
        return v;
    }
    let mut total = 0;
    for (i, &p) in preds.iter().enumerate() {
        if filled & (1 << i) == 0 && p & filled == p {
            total += count_fillings(filled | (1 << i), full, preds, memo);
        }
    }
    memo.insert(filled, total);
    total
}
