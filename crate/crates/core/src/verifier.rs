//! Exhaustive verification of the component, constituent and pair bounds
//! over all basic skew classes up to a box count.
//!
//! Every check is a pure function of a class. The sweep shards classes over
//! worker threads by a hash of the class and merges results back into
//! enumeration order, so the report content does not depend on the number of
//! workers.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{decay, Partition, SkewClass, SkewDiagram};
use crate::error::{Error, Result};
use crate::lrrule::{count_syt_skew, decompose, lr_coefficient, SkewCharacter};
use crate::poset::reduce_to_staircase;
use crate::sequences::{f_count, g_count, p_count};

/// Computes the skew character of a diagram. The sweep takes this as a
/// parameter so a faulty decomposition can be injected.
pub type Decomposer = dyn Fn(&SkewDiagram) -> SkewCharacter + Sync;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    LowerCc,
    Pairs,
    Upper,
    Reduction,
    Symmetry,
    Monotonicity,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::LowerCc, Check::Pairs, Check::Upper, Check::Reduction, Check::Symmetry, Check::Monotonicity];

    pub fn name(&self) -> &'static str {
        match self {
            Check::LowerCc => "lower_cc",
            Check::Pairs => "pairs",
            Check::Upper => "upper",
            Check::Reduction => "reduction",
            Check::Symmetry => "symmetry",
            Check::Monotonicity => "monotonicity",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_boxes: usize,
    pub checks: Vec<Check>,
    pub sample_seed: u64,
    pub samples: usize,
    pub parallel_jobs: usize,
}

impl SweepConfig {
    pub fn new(max_boxes: usize) -> Self {
        Self { max_boxes, checks: Check::ALL.to_vec(), sample_seed: 0, samples: 1000, parallel_jobs: 1 }
    }
}

/// One failed inequality or identity, with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub class: String,
    pub components: String,
    pub detail: String,
    pub lhs: String,
    pub rhs: String,
    pub decomposition: String,
}

impl Violation {
    fn new(class: &SkewClass, ch: &SkewCharacter, detail: &str, lhs: impl ToString, rhs: impl ToString) -> Self {
        Self {
            class: class.to_string(),
            components: format!("{class:?}"),
            detail: detail.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            decomposition: ch.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    /// The check's hypothesis does not hold for this input.
    Skipped,
    Failed(Vec<Violation>),
}

impl Outcome {
    fn from_violations(v: Vec<Violation>) -> Self {
        if v.is_empty() {
            Outcome::Passed
        } else {
            Outcome::Failed(v)
        }
    }

    pub fn passed(&self) -> bool {
        !matches!(self, Outcome::Failed(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub examined: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: SweepConfig,
    pub checks: Vec<CheckReport>,
    pub pass: bool,
}

impl Report {
    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max_boxes = {}, jobs = {}", self.config.max_boxes, self.config.parallel_jobs)?;
        for c in &self.checks {
            let status = if c.violations.is_empty() { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:<13} {:<4} examined={} skipped={} violations={} ({} ms)",
                c.name,
                status,
                c.examined,
                c.skipped,
                c.violations.len(),
                c.millis
            )?;
            for v in &c.violations {
                writeln!(f, "  {} {}: {} vs {} | {}", v.class, v.detail, v.lhs, v.rhs, v.decomposition)?;
            }
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Connected basic skew diagrams with exactly `k` boxes, sorted.
pub fn connected_basic(k: usize) -> Vec<SkewDiagram> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    // a connected shape with k boxes spans at most k + 1 rows plus columns
    let max_size = (k + 1) * (k + 1) / 4;
    for size in k..=max_size.max(k) {
        for outer in Partition::all_of(size) {
            if outer.first() + outer.length() > k + 1 {
                continue;
            }
            for inner in outer.subpartitions_of_size(size - k) {
                let d = SkewDiagram::new(outer.clone(), inner).expect("subpartition");
                if d.is_basic() && decay(&d).components().len() == 1 {
                    out.push(d);
                }
            }
        }
    }
    out.sort();
    out
}

/// Every class of basic skew diagrams with 1 to `max_boxes` boxes, exactly
/// once, ordered by box count and then canonically.
///
/// Built as multisets of connected basic components.
pub fn enumerate_basic(max_boxes: usize) -> Vec<SkewClass> {
    let mut pool: Vec<SkewDiagram> = (1..=max_boxes).flat_map(connected_basic).collect();
    pool.sort_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_multisets(&pool, 0, max_boxes, &mut current, &mut out);
    out.sort_by(|a: &SkewClass, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

fn collect_multisets(
    pool: &[SkewDiagram],
    from: usize,
    budget: usize,
    current: &mut Vec<SkewDiagram>,
    out: &mut Vec<SkewClass>,
) {
    if !current.is_empty() {
        out.push(SkewClass::from_components(current.clone()));
    }
    for i in from..pool.len() {
        if pool[i].size() <= budget {
            current.push(pool[i].clone());
            collect_multisets(pool, i, budget - pool[i].size(), current, out);
            current.pop();
        }
    }
}

/// Classes of basic diagrams with exactly `n` boxes, found by scanning all
/// pairs `mu <= lambda` with `lambda_1, l(lambda) <= n`.
pub fn enumerate_basic_by_pairs(n: usize) -> Vec<SkewClass> {
    let mut seen = std::collections::BTreeSet::new();
    // basic diagrams with n boxes have rank at most 2n
    for size in n..=n * (n + 1) / 2 {
        for outer in Partition::all_in_box(size, n, n) {
            for inner in outer.subpartitions_of_size(size - n) {
                let d = SkewDiagram::new(outer.clone(), inner).expect("subpartition");
                if d.is_basic() {
                    seen.insert(decay(&d));
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// `cc(c)` is at least `(p_n, f_n)` with `n` the delta value.
pub fn check_lower_cc(c: &SkewClass, dec: &Decomposer) -> Result<Outcome> {
    let n = c.delta_value()?;
    let ch = dec(&c.representative());
    let cc = ch.cc_type();
    let (p, f) = (p_count(n), f_count(n)?);
    let mut v = Vec::new();
    if cc.components < p {
        v.push(Violation::new(c, &ch, "components >= p_delta", cc.components, p));
    }
    if cc.constituents < f {
        v.push(Violation::new(c, &ch, "constituents >= f_delta", cc.constituents, f));
    }
    Ok(Outcome::from_violations(v))
}

/// At least `g_n` one-box pairs for delta value `n >= 2`, and at least
/// `max(a, b)` where `a`, `b` count the components of the two pieces split off
/// the first and last rows.
pub fn check_pair_bounds(c: &SkewClass, dec: &Decomposer) -> Result<Outcome> {
    let n = c.delta_value()?;
    if n < 2 {
        return Ok(Outcome::Skipped);
    }
    let ch = dec(&c.representative());
    let pairs = ch.one_box_pairs();
    let g = g_count(n);
    let mut v = Vec::new();
    if pairs < g {
        v.push(Violation::new(c, &ch, "pairs >= g_delta", pairs, g));
    }
    for arrangement in c.arrangements() {
        let Some((a_piece, b_piece)) = split_first_last_rows(&arrangement) else {
            continue;
        };
        let a = dec(&a_piece).len() as u64;
        let b = dec(&b_piece).len() as u64;
        if pairs < a.max(b) {
            v.push(Violation::new(
                c,
                &ch,
                &format!("pairs >= max(a, b) for arrangement {arrangement}"),
                pairs,
                a.max(b),
            ));
        }
    }
    Ok(Outcome::from_violations(v))
}

/// For `lambda/mu` with `lambda_l, mu_m >= 1`: the pieces
/// `(lambda_1 - 2, lambda_l - 1)/(mu_1 - 1)` and
/// `(lambda_2, ..., lambda_{l-1})/(mu_2, ..., mu_m)`.
pub fn split_first_last_rows(d: &SkewDiagram) -> Option<(SkewDiagram, SkewDiagram)> {
    let (outer, inner) = (d.outer(), d.inner());
    let l = outer.length();
    if l < 2 || inner.is_empty() {
        return None;
    }
    let (first, last) = (outer.part(0), outer.part(l - 1));
    if first < 2 {
        return None;
    }
    let a_outer = Partition::new(vec![first - 2, last - 1]).ok()?;
    let a_inner = Partition::new(vec![inner.part(0) - 1]).ok()?;
    let b_outer = Partition::new(outer.parts()[1..l - 1].to_vec()).ok()?;
    let b_inner = Partition::new(inner.parts()[1..].to_vec()).ok()?;
    Some((SkewDiagram::new(a_outer, a_inner).ok()?, SkewDiagram::new(b_outer, b_inner).ok()?))
}

/// With `n` boxes: at most `g_n` pairs, at most `p_n` components and at most
/// `min(f_n, p_n f^mu, p_n f^lambdabar)` constituents.
pub fn check_upper_bounds(c: &SkewClass, dec: &Decomposer) -> Result<Outcome> {
    let n = c.size();
    let ch = dec(&c.representative());
    let cc = ch.cc_type();
    let (p, f, g) = (p_count(n), f_count(n)?, g_count(n));
    let mut v = Vec::new();
    let pairs = ch.one_box_pairs();
    if pairs > g {
        v.push(Violation::new(c, &ch, "pairs <= g_n", pairs, g));
    }
    if cc.components > p {
        v.push(Violation::new(c, &ch, "components <= p_n", cc.components, p));
    }
    if cc.constituents > f {
        v.push(Violation::new(c, &ch, "constituents <= f_n", cc.constituents, f));
    }
    for a in c.arrangements() {
        let by_inner = p.checked_mul(a.inner().count_syt()?).ok_or(Error::Overflow("p_n f^mu"))?;
        let by_bar =
            p.checked_mul(a.outer().bar_complement()?.count_syt()?).ok_or(Error::Overflow("p_n f^lambdabar"))?;
        if cc.constituents > by_inner {
            v.push(Violation::new(c, &ch, &format!("constituents <= p_n f^mu for {a}"), cc.constituents, by_inner));
        }
        if cc.constituents > by_bar {
            v.push(Violation::new(
                c,
                &ch,
                &format!("constituents <= p_n f^lambdabar for {a}"),
                cc.constituents,
                by_bar,
            ));
        }
    }
    Ok(Outcome::from_violations(v))
}

/// The reduction reaches the staircase class of the same delta value in
/// exactly `rank - 2 delta` delta-preserving steps, and the chain verifies.
pub fn check_reduction(c: &SkewClass) -> Result<Outcome> {
    let n = c.delta_value()?;
    let empty = SkewCharacter::from_terms(0, [])?;
    let chain = match reduce_to_staircase(c) {
        Ok(chain) => chain,
        Err(Error::TheoremViolation { class }) => {
            return Ok(Outcome::Failed(vec![Violation::new(
                c,
                &empty,
                &format!("no delta-preserving cocover of {class}"),
                "none",
                "some",
            )]));
        }
        Err(e) => return Err(e),
    };
    let mut v = Vec::new();
    let mut prev = c;
    for (_, next) in &chain.steps {
        if next.delta_value()? != n {
            v.push(Violation::new(c, &empty, &format!("delta preserved at {next}"), next.delta_value()?, n));
        }
        if next.rank() + 1 != prev.rank() {
            v.push(Violation::new(c, &empty, &format!("rank drops by one at {next}"), next.rank(), prev.rank()));
        }
        prev = next;
    }
    if chain.end() != &SkewClass::staircase(n) {
        v.push(Violation::new(c, &empty, "chain ends at staircase", chain.end(), SkewClass::staircase(n)));
    }
    if chain.len() + 2 * n != c.rank() {
        v.push(Violation::new(c, &empty, "chain length = rank - 2 delta", chain.len(), c.rank() - 2 * n));
    }
    if !chain.verify() {
        v.push(Violation::new(c, &empty, "witness chain verifies", false, true));
    }
    Ok(Outcome::from_violations(v))
}

/// Rotation and conjugation invariance of the decomposition, argument swap
/// of the coefficients and, up to 7 boxes, the standard filling count
/// identity.
pub fn check_symmetry(c: &SkewClass, dec: &Decomposer) -> Result<Outcome> {
    let d = c.representative();
    let ch = dec(&d);
    let mut v = shape_identities(&d, &ch, dec)?;
    for violation in &mut v {
        violation.class = c.to_string();
        violation.components = format!("{c:?}");
    }
    Ok(Outcome::from_violations(v))
}

/// The symmetry identities for a single concrete diagram.
pub fn shape_identities(d: &SkewDiagram, ch: &SkewCharacter, dec: &Decomposer) -> Result<Vec<Violation>> {
    let class = decay(d);
    let mut v = Vec::new();
    let mut fail = |detail: String, lhs: String, rhs: String| {
        let mut violation = Violation::new(&class, ch, &detail, lhs, rhs);
        violation.class = d.to_string();
        v.push(violation);
    };
    let rotated = dec(&d.rotate());
    if &rotated != ch {
        fail("rotation invariance".into(), rotated.to_string(), ch.to_string());
    }
    let conjugated = dec(&d.conjugate());
    if conjugated != ch.conjugate() {
        fail("conjugation symmetry".into(), conjugated.to_string(), ch.conjugate().to_string());
    }
    for nu in Partition::all_of(d.size()) {
        let swapped = if d.outer().contains(&nu) { lr_coefficient(d.outer(), &nu, d.inner())? } else { 0 };
        if swapped != ch.coefficient(&nu) {
            fail(format!("argument swap at nu = ({nu})"), swapped.to_string(), ch.coefficient(&nu).to_string());
        }
    }
    if d.size() <= 7 {
        let weighted = ch.terms().try_fold(0u64, |acc, (nu, c)| {
            nu.count_syt()?.checked_mul(c).and_then(|t| t.checked_add(acc)).ok_or(Error::Overflow("sum c f^nu"))
        })?;
        let direct = count_syt_skew(d);
        if weighted != direct {
            fail("sum c f^nu = standard fillings".into(), weighted.to_string(), direct.to_string());
        }
    }
    Ok(v)
}

/// Every pair `mu <= lambda` with `|lambda| <= max_outer` and at most
/// `max_boxes` boxes, basic or not.
pub fn all_skew_shapes(max_outer: usize, max_boxes: usize) -> Vec<SkewDiagram> {
    let mut out = Vec::new();
    for size in 0..=max_outer {
        for outer in Partition::all_of(size) {
            for inner_size in size.saturating_sub(max_boxes)..=size {
                for inner in outer.subpartitions_of_size(inner_size) {
                    out.push(SkewDiagram::new(outer.clone(), inner).expect("subpartition"));
                }
            }
        }
    }
    out
}

/// Checks `c(l; m, n) <= c(l + l'; m + m', n + n')` and the union form on
/// seeded random samples with `c(l'; m', n') != 0` and all sizes at most
/// `max_size`.
pub fn check_monotonicity(seed: u64, samples: usize, max_size: usize) -> Result<(usize, Vec<Violation>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes: Vec<SkewDiagram> = all_skew_shapes(max_size, max_size);
    let mut violations = Vec::new();
    for _ in 0..samples {
        let (d, nu) = sample_triple(&shapes, &mut rng);
        let (dp, nup) = sample_triple(&shapes, &mut rng);
        let base = lr_coefficient(d.outer(), d.inner(), &nu)?;
        debug_assert!(lr_coefficient(dp.outer(), dp.inner(), &nup)? > 0);
        let summed = lr_coefficient(&d.outer().sum(dp.outer()), &d.inner().sum(dp.inner()), &nu.sum(&nup))?;
        let united = lr_coefficient(&d.outer().union(dp.outer()), &d.inner().union(dp.inner()), &nu.union(&nup))?;
        let label = format!("({d:?}, ({nu})) with ({dp:?}, ({nup}))");
        for (form, value) in [("sum", summed), ("union", united)] {
            if value < base {
                violations.push(Violation {
                    class: label.clone(),
                    components: String::new(),
                    detail: format!("monotonicity, {form} form"),
                    lhs: base.to_string(),
                    rhs: value.to_string(),
                    decomposition: String::new(),
                });
            }
        }
    }
    Ok((samples, violations))
}

/// A shape and a content `nu` with nonzero coefficient.
fn sample_triple(shapes: &[SkewDiagram], rng: &mut ChaCha8Rng) -> (SkewDiagram, Partition) {
    let d = shapes.choose(rng).expect("nonempty shape list").clone();
    let ch = decompose(&d);
    let terms: Vec<(&Partition, u64)> = ch.terms().collect();
    let nu = terms.choose_weighted(rng, |t| t.1).expect("every skew character has a term").0.clone();
    (d, nu)
}

fn shard_of(c: &SkewClass, jobs: usize) -> usize {
    let mut h = DefaultHasher::new();
    c.hash(&mut h);
    (h.finish() % jobs as u64) as usize
}

/// Runs `f` on every class over `jobs` worker threads and returns the
/// outcomes in input order.
pub fn sweep<F>(classes: &[SkewClass], jobs: usize, f: F) -> Result<Vec<Outcome>>
where
    F: Fn(&SkewClass) -> Result<Outcome> + Sync,
{
    let jobs = jobs.max(1);
    let shards: Vec<usize> = classes.iter().map(|c| shard_of(c, jobs)).collect();
    let mut results: Vec<Option<Result<Outcome>>> = vec![None; classes.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|worker| {
                let (f, shards) = (&f, &shards);
                scope.spawn(move || {
                    classes
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| shards[*i] == worker)
                        .map(|(i, c)| (i, f(c)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    results.into_iter().map(|r| r.expect("every class assigned")).collect()
}

fn summarize(name: &str, outcomes: Vec<Outcome>, started: Instant) -> CheckReport {
    let examined = outcomes.len();
    let skipped = outcomes.iter().filter(|o| matches!(o, Outcome::Skipped)).count();
    let violations = outcomes
        .into_iter()
        .flat_map(|o| match o {
            Outcome::Failed(v) => v,
            _ => Vec::new(),
        })
        .collect();
    CheckReport { name: name.to_string(), examined, skipped, violations, millis: started.elapsed().as_millis() }
}

pub fn run_suite(cfg: &SweepConfig) -> Result<Report> {
    run_suite_with(cfg, &decompose)
}

/// Runs the configured checks with a caller-supplied decomposition.
pub fn run_suite_with(cfg: &SweepConfig, dec: &Decomposer) -> Result<Report> {
    if cfg.max_boxes == 0 {
        return Err(Error::Parse("max_boxes must be at least 1".into()));
    }
    let classes = enumerate_basic(cfg.max_boxes);
    let jobs = cfg.parallel_jobs;
    let mut checks: Vec<Check> = cfg.checks.clone();
    checks.sort();
    checks.dedup();
    let mut reports = Vec::new();
    for check in checks {
        let started = Instant::now();
        let report = match check {
            Check::LowerCc => summarize(check.name(), sweep(&classes, jobs, |c| check_lower_cc(c, dec))?, started),
            Check::Pairs => summarize(check.name(), sweep(&classes, jobs, |c| check_pair_bounds(c, dec))?, started),
            Check::Upper => summarize(check.name(), sweep(&classes, jobs, |c| check_upper_bounds(c, dec))?, started),
            Check::Reduction => summarize(check.name(), sweep(&classes, jobs, check_reduction)?, started),
            Check::Symmetry => summarize(check.name(), sweep(&classes, jobs, |c| check_symmetry(c, dec))?, started),
            Check::Monotonicity => {
                let (examined, violations) = check_monotonicity(cfg.sample_seed, cfg.samples, cfg.max_boxes.min(7))?;
                CheckReport {
                    name: check.name().to_string(),
                    examined,
                    skipped: 0,
                    violations,
                    millis: started.elapsed().as_millis(),
                }
            }
        };
        reports.push(report);
    }
    let pass = reports.iter().all(|r| r.violations.is_empty());
    Ok(Report { config: cfg.clone(), checks: reports, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> SkewClass {
        decay(&s.parse::<SkewDiagram>().unwrap())
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_basic(1), vec![class("1")]);
        let two: Vec<SkewClass> = enumerate_basic(2).into_iter().filter(|c| c.size() == 2).collect();
        assert_eq!(two.len(), 3);
        for s in ["2", "1,1", "2,1/1"] {
            assert!(two.contains(&class(s)));
        }
    }

    #[test]
    fn enumeration_matches_pair_scan() {
        for n in 1..=6 {
            let by_components: Vec<SkewClass> = enumerate_basic(n).into_iter().filter(|c| c.size() == n).collect();
            let mut by_pairs = enumerate_basic_by_pairs(n);
            by_pairs.sort();
            let mut sorted = by_components.clone();
            sorted.sort();
            assert_eq!(sorted, by_pairs, "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(enumerate_basic(5), enumerate_basic(5));
    }

    #[test]
    fn lower_cc_examples() {
        for n in 1..=5 {
            let c = SkewClass::staircase(n);
            let cc = decompose(&c.representative()).cc_type();
            assert_eq!((cc.components, cc.constituents), (p_count(n), f_count(n).unwrap()));
            assert_eq!(check_lower_cc(&c, &decompose).unwrap(), Outcome::Passed);
        }
        let c = class("4,3,2,1/2,2");
        assert_eq!(c.delta_value().unwrap(), 2);
        assert_eq!(check_lower_cc(&c, &decompose).unwrap(), Outcome::Passed);
        assert_eq!(check_lower_cc(&class("3,3,1"), &decompose).unwrap(), Outcome::Passed);
    }

    #[test]
    fn pair_bound_examples() {
        assert_eq!(check_pair_bounds(&class("2,1/1"), &decompose).unwrap(), Outcome::Passed);
        assert_eq!(decompose(&SkewDiagram::staircase(4)).one_box_pairs(), g_count(4));
        assert_eq!(check_pair_bounds(&SkewClass::staircase(4), &decompose).unwrap(), Outcome::Passed);
        assert_eq!(check_pair_bounds(&class("3,2"), &decompose).unwrap(), Outcome::Skipped);
    }

    #[test]
    fn split_pieces() {
        let d: SkewDiagram = "5,4,3,2,2/4,2,2,1".parse().unwrap();
        let (a, b) = split_first_last_rows(&d).unwrap();
        assert_eq!(a.to_string(), "3,1/3");
        assert_eq!(b.to_string(), "4,3,2/2,2,1");
        assert_eq!(split_first_last_rows(&"3,2".parse().unwrap()), None);
    }

    #[test]
    fn split_hypotheses_are_met_often() {
        let mut met = 0;
        let mut total = 0;
        for c in enumerate_basic(6).iter().filter(|c| c.delta_value().unwrap() >= 2) {
            for a in c.arrangements() {
                total += 1;
                met += usize::from(split_first_last_rows(&a).is_some());
            }
        }
        assert!(met * 2 > total, "{met} of {total}");
    }

    #[test]
    fn upper_bounds_tight_on_staircase() {
        for n in 1..=5 {
            let c = SkewClass::staircase(n);
            let d = c.representative();
            let ch = decompose(&d);
            let cc = ch.cc_type();
            assert_eq!(ch.one_box_pairs(), g_count(n));
            assert_eq!(cc.components, p_count(n));
            assert_eq!(cc.constituents, f_count(n).unwrap());
            let f_mu = d.inner().count_syt().unwrap();
            let f_bar = d.outer().bar_complement().unwrap().count_syt().unwrap();
            let bound = f_count(n).unwrap().min(p_count(n) * f_mu).min(p_count(n) * f_bar);
            assert_eq!(cc.constituents, bound, "n = {n}");
            assert_eq!(check_upper_bounds(&c, &decompose).unwrap(), Outcome::Passed);
        }
        let c = class("4,3,2,1/2,2");
        assert_eq!(check_upper_bounds(&c, &decompose).unwrap(), Outcome::Passed);
        assert!(decompose(&c.representative()).one_box_pairs() <= g_count(6));
    }

    #[test]
    fn reduction_check_example() {
        assert_eq!(check_reduction(&class("5,4,3,2,2/4,2,2,1")).unwrap(), Outcome::Passed);
        assert_eq!(check_reduction(&SkewClass::staircase(3)).unwrap(), Outcome::Passed);
    }

    #[test]
    fn monotonicity_examples() {
        let l = Partition::new(vec![3, 2, 1]).unwrap();
        let m = Partition::new(vec![2, 1]).unwrap();
        let base = lr_coefficient(&l, &m, &m).unwrap();
        assert_eq!(base, 2);
        let (lp, mp, np) =
            (Partition::new(vec![2]).unwrap(), Partition::new(vec![1]).unwrap(), Partition::new(vec![1]).unwrap());
        assert!(lr_coefficient(&lp, &mp, &np).unwrap() > 0);
        assert!(lr_coefficient(&l.sum(&lp), &m.sum(&mp), &m.sum(&np)).unwrap() >= base);
        assert!(lr_coefficient(&l.union(&lp), &m.union(&mp), &m.union(&np)).unwrap() >= base);
        // adding the empty triple changes nothing
        let e = Partition::empty();
        assert_eq!(lr_coefficient(&e, &e, &e).unwrap(), 1);
        assert_eq!(lr_coefficient(&l.sum(&e), &m.sum(&e), &m.sum(&e)).unwrap(), base);

        let (n, v) = check_monotonicity(7, 200, 7).unwrap();
        assert_eq!(n, 200);
        assert!(v.is_empty(), "{v:?}");
    }

    #[test]
    fn suite_trivial_and_small() {
        let report = run_suite(&SweepConfig::new(1)).unwrap();
        assert!(report.pass);
        let mut cfg = SweepConfig::new(5);
        cfg.samples = 50;
        let report = run_suite(&cfg).unwrap();
        assert!(report.pass, "{report}");
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn parallelism_does_not_change_content() {
        let mut cfg = SweepConfig::new(5);
        cfg.samples = 20;
        let serial = run_suite(&cfg).unwrap();
        cfg.parallel_jobs = 4;
        let parallel = run_suite(&cfg).unwrap();
        for (a, b) in serial.checks.iter().zip(&parallel.checks) {
            assert_eq!((a.examined, a.skipped, &a.violations), (b.examined, b.skipped, &b.violations));
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let target = SkewDiagram::staircase(3);
        let faulty = move |d: &SkewDiagram| {
            let ch = decompose(d);
            if *d == target {
                // drop the coefficient of [2,1] from 2 to 1
                let terms = ch.terms().map(|(nu, c)| (nu.clone(), if nu.length() == 2 { c - 1 } else { c }));
                SkewCharacter::from_terms(ch.degree(), terms.collect::<Vec<_>>()).unwrap()
            } else {
                ch
            }
        };
        let mut cfg = SweepConfig::new(3);
        cfg.checks = vec![Check::LowerCc];
        let report = run_suite_with(&cfg, &faulty).unwrap();
        assert!(!report.pass);
        let violations = &report.check("lower_cc").unwrap().violations;
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].class, "3,2,1/2,1");
        assert_eq!((violations[0].lhs.as_str(), violations[0].rhs.as_str()), ("3", "4"));
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}
