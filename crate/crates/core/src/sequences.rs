//! The counting sequences `p_n`, `f_n`, `g_n`, `pbar_n` and the bijection
//! between partitions with two kinds of 1s and 2s and pairs of partitions
//! differing by one box.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagrams::Partition;
use crate::error::{Error, Result};

/// Number of partitions of `n`, by enumeration.
pub fn p_count(n: usize) -> u64 {
    Partition::all_of(n).len() as u64
}

/// Number of partitions of `n` via Euler's pentagonal number recurrence.
pub fn p_euler(n: usize) -> Result<u64> {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i128;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    u64::try_from(p[n]).map_err(|_| Error::Overflow("p_n"))
}

/// Number of standard Young tableaux with `n` boxes, as `sum f^lambda`,
/// checked against the involution recurrence.
pub fn f_count(n: usize) -> Result<u64> {
    let by_hooks = Partition::all_of(n)
        .iter()
        .try_fold(0u64, |acc, p| acc.checked_add(p.count_syt()?).ok_or(Error::Overflow("f_n")))?;
    let by_recurrence = involutions(n)?;
    if by_hooks != by_recurrence {
        return Err(Error::OracleMismatch { what: "f_n", n, left: by_hooks, right: by_recurrence });
    }
    Ok(by_hooks)
}

/// Number of involutions of `n` points: `a_n = a_{n-1} + (n-1) a_{n-2}`.
pub fn involutions(n: usize) -> Result<u64> {
    let (mut prev, mut cur) = (1u64, 1u64);
    for m in 2..=n {
        let next =
            (m as u64 - 1).checked_mul(prev).and_then(|t| t.checked_add(cur)).ok_or(Error::Overflow("involutions"))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Number of unordered pairs of partitions of `n` differing by one box, by
/// brute force over all pairs.
pub fn g_count(n: usize) -> u64 {
    all_box_pairs(n).len() as u64
}

/// Number of partitions of `n` with two kinds of 1s and two kinds of 2s,
/// by enumeration, checked against the generating function.
pub fn barp_count(n: usize) -> Result<u64> {
    let enumerated = bar_partitions(n).len() as u64;
    let series = barp_series(n)?[n];
    if enumerated != series {
        return Err(Error::OracleMismatch { what: "pbar_n", n, left: enumerated, right: series });
    }
    Ok(enumerated)
}

/// Coefficients `0..=max` of `1/((1-x)(1-x^2)) prod_{i>=1} 1/(1-x^i)`, in
/// exact integer arithmetic.
pub fn barp_series(max: usize) -> Result<Vec<u64>> {
    let mut coeffs = vec![0u64; max + 1];
    coeffs[0] = 1;
    let factors = [1, 2].into_iter().chain(1..=max);
    for k in factors {
        if k == 0 {
            continue;
        }
        for i in k..=max {
            coeffs[i] = coeffs[i].checked_add(coeffs[i - k]).ok_or(Error::Overflow("series coefficient"))?;
        }
    }
    Ok(coeffs)
}

/// A partition with two kinds of 1s and 2s: ordinary parts `core` together
/// with `n1` primed 1s and `n2` primed 2s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BarPartition {
    pub core: Partition,
    pub n1: usize,
    pub n2: usize,
}

impl BarPartition {
    pub fn weight(&self) -> usize {
        self.core.size() + self.n1 + 2 * self.n2
    }

    /// Parts as sort keys with `2 > 2' > 1 > 1'`: ordinary `k` maps to `2k`,
    /// primed `k` to `2k - 1`.
    fn keys(&self) -> Vec<usize> {
        let mut keys: Vec<usize> = self.core.parts().iter().map(|p| 2 * p).collect();
        keys.extend(std::iter::repeat_n(3, self.n2));
        keys.extend(std::iter::repeat_n(1, self.n1));
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys = self.keys();
        if keys.is_empty() {
            return f.write_str("()");
        }
        for (i, k) in keys.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if k % 2 == 0 {
                write!(f, "{}", k / 2)?;
            } else {
                write!(f, "{}'", k.div_ceil(2))?;
            }
        }
        Ok(())
    }
}

impl FromStr for BarPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (mut core, mut n1, mut n2) = (Vec::new(), 0, 0);
        if s != "()" && !s.is_empty() {
            for tok in s.split(',').map(str::trim) {
                match tok {
                    "1'" => n1 += 1,
                    "2'" => n2 += 1,
                    _ => core.push(tok.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {tok:?}")))?),
                }
            }
        }
        if core.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Ok(BarPartition { core: Partition::from_unsorted(core), n1, n2 })
    }
}

/// All partitions of `n` with two kinds of 1s and 2s, ordered as in the
/// correspondence table (descending, `2 > 2' > 1 > 1'`).
pub fn bar_partitions(n: usize) -> Vec<BarPartition> {
    let mut out = Vec::new();
    for n2 in 0..=n / 2 {
        for n1 in 0..=n - 2 * n2 {
            for core in Partition::all_of(n - n1 - 2 * n2) {
                out.push(BarPartition { core, n1, n2 });
            }
        }
    }
    out.sort_by_key(|b| std::cmp::Reverse(b.keys()));
    out
}

/// Two partitions of the same size whose diagrams share all but one box,
/// the lexicographically larger one first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoxPair {
    nu1: Partition,
    nu2: Partition,
}

impl BoxPair {
    /// Validates and orients a pair.
    pub fn new(a: Partition, b: Partition) -> Result<Self> {
        let n = a.size();
        if b.size() != n || a == b || a.intersect(&b).size() + 1 != n {
            return Err(Error::MalformedPair(format!("({a}) and ({b})")));
        }
        let (nu1, nu2) = if a > b { (a, b) } else { (b, a) };
        Ok(Self { nu1, nu2 })
    }

    pub fn nu1(&self) -> &Partition {
        &self.nu1
    }

    pub fn nu2(&self) -> &Partition {
        &self.nu2
    }

    pub fn weight(&self) -> usize {
        self.nu1.size()
    }
}

/// All one-box pairs of partitions of `n`.
pub fn all_box_pairs(n: usize) -> Vec<BoxPair> {
    let parts = Partition::all_of(n);
    let mut out = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if a.intersect(b).size() + 1 == n {
                out.push(BoxPair::new(a.clone(), b.clone()).expect("checked"));
            }
        }
    }
    out
}

/// `nu1 = core u (n1 + n2 + 2, n2)`, `nu2 = core u (n1 + n2 + 1, n2 + 1)`.
pub fn bijection_forward(b: &BarPartition) -> BoxPair {
    let top = b.n1 + b.n2;
    let nu1 = b.core.union(&Partition::from_unsorted(vec![top + 2, b.n2]));
    let nu2 = b.core.union(&Partition::from_unsorted(vec![top + 1, b.n2 + 1]));
    BoxPair::new(nu1, nu2).expect("rows (c+2, b) and (c+1, b+1) differ by one box")
}

/// Recovers the two rows `(c + 2, b)` of `nu1` and `(c + 1, b + 1)` of `nu2`
/// that differ; the remaining rows form the core, `n1 = c - b`, `n2 = b`.
pub fn bijection_inverse(p: &BoxPair) -> Result<BarPartition> {
    let malformed = || Error::MalformedPair(format!("({}) and ({})", p.nu1, p.nu2));
    let mut multiplicity: BTreeMap<usize, i64> = BTreeMap::new();
    for &x in p.nu1.parts() {
        *multiplicity.entry(x).or_insert(0) += 1;
    }
    for &x in p.nu2.parts() {
        *multiplicity.entry(x).or_insert(0) -= 1;
    }
    let mut only1 = Vec::new();
    let mut only2 = Vec::new();
    for (&value, &m) in &multiplicity {
        let target = if m > 0 { &mut only1 } else { &mut only2 };
        target.extend(std::iter::repeat_n(value, m.unsigned_abs() as usize));
    }
    let [low2, high2] = only2.as_slice() else {
        return Err(malformed());
    };
    let (c, b) = (high2 - 1, low2 - 1);
    let expected: Vec<usize> = if b > 0 { vec![b, c + 2] } else { vec![c + 2] };
    if only1 != expected || c < b {
        return Err(malformed());
    }
    let mut core = p.nu1.parts().to_vec();
    for v in &only1 {
        let pos = core.iter().position(|x| x == v).ok_or_else(malformed)?;
        core.remove(pos);
    }
    Ok(BarPartition { core: Partition::from_unsorted(core), n1: c - b, n2: b })
}

/// Named sequences available for tabulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceName {
    P,
    F,
    G,
    Barp,
}

impl SequenceName {
    pub fn label(&self) -> &'static str {
        match self {
            SequenceName::P => "p_n",
            SequenceName::F => "f_n",
            SequenceName::G => "g_n",
            SequenceName::Barp => "pbar_n",
        }
    }

    pub fn value(&self, n: usize) -> Result<u64> {
        match self {
            SequenceName::P => Ok(p_count(n)),
            SequenceName::F => f_count(n),
            SequenceName::G => Ok(g_count(n)),
            SequenceName::Barp => barp_count(n),
        }
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(SequenceName::P),
            "f" => Ok(SequenceName::F),
            "g" => Ok(SequenceName::G),
            "barp" | "pbar" => Ok(SequenceName::Barp),
            _ => Err(Error::Parse(format!("unknown sequence {s:?} (expected p, f, g or barp)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceEntry {
    pub n: usize,
    pub value: u64,
}

/// Values for `n` in `range`.
pub fn sequence(name: SequenceName, range: std::ops::RangeInclusive<usize>) -> Result<Vec<SequenceEntry>> {
    range.map(|n| Ok(SequenceEntry { n, value: name.value(n)? })).collect()
}

/// Renders rows of values as a right-aligned table headed by `n:`.
pub fn render_table(ns: &[usize], rows: &[(&str, Vec<u64>)]) -> String {
    let mut cells: Vec<Vec<String>> = Vec::new();
    cells.push(std::iter::once("n:".to_string()).chain(ns.iter().map(ToString::to_string)).collect());
    for (label, values) in rows {
        cells.push(std::iter::once(format!("{label}:")).chain(values.iter().map(ToString::to_string)).collect());
    }
    let columns = cells[0].len();
    let widths: Vec<usize> = (0..columns).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| if j == 0 { format!("{c:<w$}", w = widths[0]) } else { format!("{c:>w$}", w = widths[j]) })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
