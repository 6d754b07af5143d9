//! The graded poset of skew classes.
//!
//! A basic diagram covers another when it is obtained by adding one column
//! `(1^x)/(1^y)` with `y <= x <= l(alpha)` or inserting one row `(x)/(y)`
//! with `y <= x <= alpha_1`, both diagrams basic. Classes inherit the
//! relation existentially over their concrete arrangements.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::diagrams::{decay, Partition, SkewClass, SkewDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Column,
    Row,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// A single cover step: `+ (1^x)/(1^y)` for columns, `u (x)/(y)` for rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverMove {
    pub kind: MoveKind,
    pub x: usize,
    pub y: usize,
    pub direction: Direction,
}

/// A start class followed by cover steps, each certifying that consecutive
/// classes are related by one cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessChain {
    pub start: SkewClass,
    pub steps: Vec<(CoverMove, SkewClass)>,
}

impl CoverMove {
    pub fn up(kind: MoveKind, x: usize, y: usize) -> Self {
        Self { kind, x, y, direction: Direction::Up }
    }

    pub fn down(kind: MoveKind, x: usize, y: usize) -> Self {
        Self { kind, x, y, direction: Direction::Down }
    }

    /// The diagram that is added (column) or inserted (row).
    pub fn piece(&self) -> SkewDiagram {
        match self.kind {
            MoveKind::Column => SkewDiagram::new(
                Partition::new(vec![1; self.x]).expect("column"),
                Partition::new(vec![1; self.y]).expect("column"),
            ),
            MoveKind::Row => {
                SkewDiagram::new(Partition::new(vec![self.x]).expect("row"), Partition::new(vec![self.y]).expect("row"))
            }
        }
        .expect("y <= x")
    }
}

impl fmt::Display for CoverMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.direction {
            Direction::Up => '+',
            Direction::Down => '-',
        };
        let kind = match self.kind {
            MoveKind::Column => "col",
            MoveKind::Row => "row",
        };
        write!(f, "{sign}{kind} {} {}", self.x, self.y)
    }
}

impl Serialize for CoverMove {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Adds a column or row to the basic diagram `d`. Returns `None` if the move
/// is out of bounds or the result is not basic.
pub fn apply_up(d: &SkewDiagram, kind: MoveKind, x: usize, y: usize) -> Option<SkewDiagram> {
    if x == 0 || y > x {
        return None;
    }
    let bound = match kind {
        MoveKind::Column => d.outer().length(),
        MoveKind::Row => d.outer().first(),
    };
    if x > bound {
        return None;
    }
    let piece = CoverMove::up(kind, x, y).piece();
    let result = match kind {
        MoveKind::Column => d.sum(&piece),
        MoveKind::Row => d.union(&piece),
    };
    result.is_basic().then_some(result)
}

/// Finds the basic diagram `alpha/beta` with `apply_up(alpha/beta, kind, x, y) == d`.
pub fn remove_down(d: &SkewDiagram, kind: MoveKind, x: usize, y: usize) -> Option<SkewDiagram> {
    if x == 0 || y > x {
        return None;
    }
    let (outer, inner) = match kind {
        MoveKind::Column => (subtract_column(d.outer(), x)?, subtract_column(d.inner(), y)?),
        MoveKind::Row => (remove_part(d.outer(), x)?, remove_part(d.inner(), y)?),
    };
    let candidate = SkewDiagram::new(outer, inner).ok()?;
    if !candidate.is_basic() {
        return None;
    }
    (apply_up(&candidate, kind, x, y).as_ref() == Some(d)).then_some(candidate)
}

fn subtract_column(p: &Partition, k: usize) -> Option<Partition> {
    if k > p.length() {
        return None;
    }
    let parts = (0..p.length()).map(|i| p.part(i) - usize::from(i < k)).collect();
    Partition::new(parts).ok()
}

fn remove_part(p: &Partition, value: usize) -> Option<Partition> {
    if value == 0 {
        return Some(p.clone());
    }
    let pos = p.parts().iter().position(|&q| q == value)?;
    let mut parts = p.parts().to_vec();
    parts.remove(pos);
    Partition::new(parts).ok()
}

/// Moves in canonical order: columns before rows, then ascending `(x, y)`.
fn moves(d_rows: usize, d_cols: usize, direction: Direction) -> impl Iterator<Item = CoverMove> {
    let column =
        (1..=d_rows).flat_map(move |x| (0..=x).map(move |y| CoverMove { kind: MoveKind::Column, x, y, direction }));
    let row = (1..=d_cols).flat_map(move |x| (0..=x).map(move |y| CoverMove { kind: MoveKind::Row, x, y, direction }));
    column.chain(row)
}

/// Every `(class, move)` with the class covered by `c`, in canonical
/// enumeration order (move order first, then arrangement order). A class may
/// appear more than once.
pub fn down_cover_moves(c: &SkewClass) -> Vec<(SkewClass, CoverMove)> {
    let arrangements = c.arrangements();
    let Some(first) = arrangements.first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for mv in moves(first.outer().length(), first.outer().first(), Direction::Down) {
        for a in &arrangements {
            if let Some(smaller) = remove_down(a, mv.kind, mv.x, mv.y) {
                out.push((decay(&smaller), mv));
            }
        }
    }
    out
}

/// Every `(class, move)` with the class covering `c`, in canonical order.
pub fn up_cover_moves(c: &SkewClass) -> Vec<(SkewClass, CoverMove)> {
    let arrangements = c.arrangements();
    let first = arrangements.first().cloned().unwrap_or_default();
    let mut out = Vec::new();
    for mv in moves(first.outer().length(), first.outer().first(), Direction::Up) {
        for a in &arrangements {
            if let Some(larger) = apply_up(a, mv.kind, mv.x, mv.y) {
                out.push((decay(&larger), mv));
            }
        }
    }
    out
}

pub fn down_covers(c: &SkewClass) -> BTreeSet<SkewClass> {
    down_cover_moves(c).into_iter().map(|(d, _)| d).collect()
}

pub fn up_covers(c: &SkewClass) -> BTreeSet<SkewClass> {
    up_cover_moves(c).into_iter().map(|(u, _)| u).collect()
}

/// Whether `b` lies below `a`, by level-wise descent from `a`.
///
/// Covers never add boxes going down, so classes with fewer boxes than `b`
/// are pruned.
pub fn is_geq(a: &SkewClass, b: &SkewClass) -> bool {
    if a == b {
        return true;
    }
    if a.rank() <= b.rank() || a.size() < b.size() {
        return false;
    }
    let mut frontier: BTreeSet<SkewClass> = BTreeSet::from([a.clone()]);
    for rank in (b.rank()..a.rank()).rev() {
        let mut next = BTreeSet::new();
        for c in &frontier {
            next.extend(down_covers(c).into_iter().filter(|d| d.size() >= b.size()));
        }
        if rank == b.rank() {
            return next.contains(b);
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    false
}

/// Removes one row or column without changing the delta value.
///
/// Takes the first delta-preserving cocover in canonical enumeration order.
pub fn reduce_step(c: &SkewClass) -> Result<(SkewClass, CoverMove)> {
    let delta = c.delta_value()?;
    if c.is_staircase() {
        return Err(Error::AtMinimum);
    }
    down_cover_moves(c)
        .into_iter()
        .find(|(d, _)| d.delta_value().ok() == Some(delta))
        .ok_or_else(|| Error::TheoremViolation { class: c.to_string() })
}

/// Descends from `c` to the staircase class with the same delta value.
pub fn reduce_to_staircase(c: &SkewClass) -> Result<WitnessChain> {
    c.delta_value()?;
    let mut chain = WitnessChain { start: c.clone(), steps: Vec::new() };
    let mut current = c.clone();
    loop {
        match reduce_step(&current) {
            Ok((next, mv)) => {
                chain.steps.push((mv, next.clone()));
                current = next;
            }
            Err(Error::AtMinimum) => return Ok(chain),
            Err(e) => return Err(e),
        }
    }
}

/// Checks that `upper` covers `lower` through `mv` applied to some
/// arrangement of `lower`.
fn covers_via(lower: &SkewClass, upper: &SkewClass, mv: &CoverMove) -> bool {
    if lower.rank() + 1 != upper.rank() {
        return false;
    }
    lower.arrangements().iter().filter_map(|a| apply_up(a, mv.kind, mv.x, mv.y)).any(|d| &decay(&d) == upper)
}

impl WitnessChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> &SkewClass {
        self.steps.last().map_or(&self.start, |s| &s.1)
    }

    /// Recomputes every step from scratch.
    pub fn verify(&self) -> bool {
        let mut prev = &self.start;
        for (mv, next) in &self.steps {
            let ok = match mv.direction {
                Direction::Up => covers_via(prev, next, mv),
                Direction::Down => covers_via(next, prev, mv),
            };
            if !ok {
                return false;
            }
            prev = next;
        }
        true
    }
}

pub fn verify_chain(w: &WitnessChain) -> bool {
    w.verify()
}

/// One line per step, preceded by a `start` line:
///
/// ```text
/// start 4,3,2,1/3,2,1
/// +col 4 1 5,4,3,2/4,2,1
/// +row 2 2 5,4,3,2,2/4,2,2,1
/// ```
impl fmt::Display for WitnessChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "start {}", self.start)?;
        for (mv, class) in &self.steps {
            write!(f, "\n{mv} {class}")?;
        }
        Ok(())
    }
}

impl FromStr for WitnessChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let start = lines
            .next()
            .and_then(|l| l.strip_prefix("start"))
            .ok_or_else(|| Error::Parse("chain must begin with a start line".into()))?;
        let start = decay(&start.trim().parse::<SkewDiagram>()?);
        let mut steps = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [head, x, y, rest @ ..] = fields.as_slice() else {
                return Err(Error::Parse(format!("malformed step {line:?}")));
            };
            let (direction, kind) = match *head {
                "+col" => (Direction::Up, MoveKind::Column),
                "+row" => (Direction::Up, MoveKind::Row),
                "-col" => (Direction::Down, MoveKind::Column),
                "-row" => (Direction::Down, MoveKind::Row),
                other => return Err(Error::Parse(format!("unknown move {other:?}"))),
            };
            let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {t:?}")));
            let mv = CoverMove { kind, x: num(x)?, y: num(y)?, direction };
            let class = decay(&rest.concat().parse::<SkewDiagram>()?);
            steps.push((mv, class));
        }
        Ok(WitnessChain { start, steps })
    }
}

impl Serialize for WitnessChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Step<'a> {
            #[serde(rename = "move")]
            mv: &'a CoverMove,
            class: &'a SkewClass,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            start: &'a SkewClass,
            steps: Vec<Step<'a>>,
        }
        Doc { start: &self.start, steps: self.steps.iter().map(|(mv, class)| Step { mv, class }).collect() }
            .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> SkewClass {
        decay(&s.parse::<SkewDiagram>().unwrap())
    }

    #[test]
    fn apply_and_remove_are_inverse() {
        let d: SkewDiagram = "4,3,2,1/3,2,1".parse().unwrap();
        let up = apply_up(&d, MoveKind::Column, 4, 1).unwrap();
        assert_eq!(up.to_string(), "5,4,3,2/4,2,1");
        let up2 = apply_up(&up, MoveKind::Row, 2, 2).unwrap();
        assert_eq!(up2.to_string(), "5,4,3,2,2/4,2,2,1");
        assert_eq!(remove_down(&up2, MoveKind::Row, 2, 2), Some(up.clone()));
        assert_eq!(remove_down(&up, MoveKind::Column, 4, 1), Some(d.clone()));
        // out of bounds
        assert_eq!(apply_up(&d, MoveKind::Column, 5, 0), None);
        assert_eq!(apply_up(&d, MoveKind::Row, 5, 0), None);
        // (1) + (1)/(1) shifts the only box and leaves an empty column
        assert_eq!(apply_up(&"1".parse().unwrap(), MoveKind::Column, 1, 1), None);
    }

    #[test]
    fn down_cover_examples() {
        let single = class("1");
        // two disconnected boxes: removing a column or row keeps both boxes
        assert_eq!(down_covers(&SkewClass::staircase(2)), BTreeSet::from([class("2"), class("1,1")]));
        assert_eq!(down_covers(&class("2")), BTreeSet::from([single.clone()]));
        assert!(down_covers(&single).is_empty());
        assert!(down_covers(&class("5,4,3,2/4,2,1")).contains(&SkewClass::staircase(4)));
    }

    #[test]
    fn up_cover_examples() {
        let ups = up_covers(&class("1"));
        assert_eq!(ups, BTreeSet::from([class("2"), class("1,1")]));
        // two disconnected boxes sit two ranks above a single box
        assert!(!ups.contains(&class("2,1/1")));
        assert!(up_covers(&SkewClass::staircase(3)).contains(&class("4,3,2/3,2")));
        for u in up_covers(&class("3,1/1")) {
            assert_eq!(u.rank(), 6);
        }
    }

    #[test]
    fn comparability() {
        let c = class("3,2/1");
        assert!(is_geq(&c, &c));
        assert!(!is_geq(&class("3,2/2"), &class("3,2/1")));
        assert!(is_geq(&class("5,4,3,2,2/3,3,2,1"), &SkewClass::staircase(4)));
        assert!(is_geq(&class("3,2/1"), &class("1")));
        assert!(!is_geq(&class("1"), &class("2")));
    }

    #[test]
    fn reduction_examples() {
        let c = class("5,4,3,2,2/4,2,2,1");
        let (d, _) = reduce_step(&c).unwrap();
        assert_eq!(d.rank(), 9);
        assert_eq!(d.delta_value().unwrap(), 4);

        assert_eq!(reduce_step(&SkewClass::staircase(3)), Err(Error::AtMinimum));
        assert_eq!(reduce_step(&class("2,1/1")), Err(Error::AtMinimum));
        assert_eq!(reduce_step(&SkewClass::empty()), Err(Error::EmptyDiagram));

        let chain = reduce_to_staircase(&c).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain.end(), &SkewClass::staircase(4));
        assert!(chain.verify());
        assert!(reduce_to_staircase(&SkewClass::staircase(5)).unwrap().is_empty());
    }

    #[test]
    fn example_chain_verifies_and_round_trips() {
        let text = "start 4,3,2,1/3,2,1\n+col 4 1 5,4,3,2/4,2,1\n+row 2 2 5,4,3,2,2/4,2,2,1";
        let chain: WitnessChain = text.parse().unwrap();
        assert!(verify_chain(&chain));
        assert_eq!(chain.to_string().parse::<WitnessChain>().unwrap(), chain);

        let empty = WitnessChain { start: class("3,1"), steps: vec![] };
        assert!(empty.verify());

        let mut corrupted = chain.clone();
        corrupted.steps[0].1 = class("3,3,1/1");
        assert!(!corrupted.verify());

        let mut wrong_move = chain.clone();
        wrong_move.steps[1].0 = CoverMove::up(MoveKind::Row, 2, 1);
        assert!(!wrong_move.verify());
    }
}
