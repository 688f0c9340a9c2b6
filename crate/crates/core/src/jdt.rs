//! Shifted jeu de taquin, rectification, Knuth equivalence and the
//! Yamanouchi / LRS predicates.
//!
//! Slides run on the standardization of the reading word, where all labels
//! are distinct, and the result is destandardized with the original weight.
//! On the semistandard level this means: equal unprimed letters move the
//! lower entry, equal primed letters move the right entry, and a letter that
//! becomes the leftmost of its value in the reading word loses its prime.

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{addable_cells, removable_cells, Cell, SkewShape, StrictPartition};
use crate::tableau::ShiftedTableau;
use crate::word::{standardize, Letter, PrimedWord, Weight};

/// Default length cap for [`knuth_equivalent`].
pub const DEFAULT_KNUTH_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Inner,
    Outer,
}

/// One slide: the hole enters at `cell` and leaves the shape at `exit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlideStep {
    pub dir: Direction,
    pub cell: Cell,
    pub exit: Cell,
}

/// The slides performed by a rectification, in order.
///
/// Serialized as a flat sequence of `(dir, row, col)` triples: each slide
/// contributes its inner triple followed by the outer triple that undoes it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SlideRecord {
    pub steps: Vec<SlideStep>,
}

impl SlideRecord {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn triples(&self) -> Vec<(Direction, usize, usize)> {
        self.steps
            .iter()
            .flat_map(|s| {
                let back = match s.dir {
                    Direction::Inner => Direction::Outer,
                    Direction::Outer => Direction::Inner,
                };
                [(s.dir, s.cell.0, s.cell.1), (back, s.exit.0, s.exit.1)]
            })
            .collect()
    }

    pub fn from_triples(triples: &[(Direction, usize, usize)]) -> Result<Self> {
        if !triples.len().is_multiple_of(2) {
            return Err(Error::RecordMismatch("odd number of triples".into()));
        }
        let steps = triples
            .chunks(2)
            .map(|pair| {
                let (d, r, c) = pair[0];
                let (back, er, ec) = pair[1];
                if d == back {
                    return Err(Error::RecordMismatch("a slide and its inverse share a direction".into()));
                }
                Ok(SlideStep {
                    dir: d,
                    cell: (r, c),
                    exit: (er, ec),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SlideRecord { steps })
    }
}

impl Serialize for SlideRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SlideRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(Direction, usize, usize)>::deserialize(d)?;
        SlideRecord::from_triples(&triples).map_err(serde::de::Error::custom)
    }
}

/// Working copy of a tableau holding its standardization, with absolute
/// column indexing. The weight is kept aside and restored at the end.
struct Board {
    n: u8,
    weight: Weight,
    outer: Vec<usize>,
    inner: Vec<usize>,
    // grid[r - 1][c - 1]; `None` for inner cells and the moving hole
    grid: Vec<Vec<Option<usize>>>,
}

impl Board {
    fn from_tableau(t: &ShiftedTableau) -> Self {
        let shape = t.shape();
        let rows = shape.rows();
        let outer: Vec<usize> = (1..=rows).map(|r| shape.outer().part(r)).collect();
        let inner: Vec<usize> = (1..=rows).map(|r| shape.inner().part(r)).collect();
        let mut grid: Vec<Vec<Option<usize>>> = (1..=rows).map(|r| vec![None; r - 1 + outer[r - 1]]).collect();
        let labels = standardize(&t.reading_letters());
        for ((r, c), s) in shape.reading_cells().into_iter().zip(labels) {
            grid[r - 1][c - 1] = Some(s);
        }
        Board {
            n: t.n(),
            weight: t.weight(),
            outer,
            inner,
            grid,
        }
    }

    fn part(v: &[usize], r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        v.get(r - 1).copied().unwrap_or(0)
    }

    fn filled(&self, (r, c): Cell) -> Option<usize> {
        if r == 0 || r > self.outer.len() {
            return None;
        }
        if c < r + Self::part(&self.inner, r) || c >= r + self.outer[r - 1] {
            return None;
        }
        self.grid[r - 1][c - 1]
    }

    fn inner_partition(&self) -> StrictPartition {
        StrictPartition::from_row_lengths(self.inner.clone()).expect("board inner stays strict")
    }

    fn outer_partition(&self) -> StrictPartition {
        StrictPartition::from_row_lengths(self.outer.clone()).expect("board outer stays strict")
    }

    fn trim(&mut self) {
        while self.outer.last() == Some(&0) {
            self.outer.pop();
            self.inner.pop();
            self.grid.pop();
        }
    }

    /// Slides the hole created at inner corner `corner`; returns the vacated outer cell.
    fn inner_slide(&mut self, corner: Cell) -> Result<Cell> {
        if !removable_cells(&self.inner_partition()).contains(&corner) {
            return Err(Error::NotInnerCorner(corner));
        }
        let (mut r, mut c) = corner;
        self.inner[r - 1] -= 1;
        loop {
            let go_right = match (self.filled((r, c + 1)), self.filled((r + 1, c))) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(x), Some(y)) => x < y,
            };
            let (nr, nc) = if go_right { (r, c + 1) } else { (r + 1, c) };
            self.grid[r - 1][c - 1] = self.grid[nr - 1][nc - 1].take();
            r = nr;
            c = nc;
        }
        debug_assert_eq!(c, r + self.outer[r - 1] - 1);
        self.outer[r - 1] -= 1;
        self.grid[r - 1].pop();
        self.trim();
        Ok((r, c))
    }

    /// Slides a hole placed at outer corner `cell` inward; returns the freed inner cell.
    fn outer_slide(&mut self, cell: Cell) -> Result<Cell> {
        if !addable_cells(&self.outer_partition()).contains(&cell) {
            return Err(Error::NotOuterCorner(cell));
        }
        let (mut r, mut c) = cell;
        if r > self.outer.len() {
            self.outer.push(0);
            self.inner.push(0);
            self.grid.push(vec![None; r - 1]);
        }
        self.outer[r - 1] += 1;
        self.grid[r - 1].push(None);
        loop {
            let go_left = match (self.filled((r, c - 1)), self.filled((r - 1, c))) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(x), Some(y)) => y < x,
            };
            let (nr, nc) = if go_left { (r, c - 1) } else { (r - 1, c) };
            self.grid[r - 1][c - 1] = self.grid[nr - 1][nc - 1].take();
            r = nr;
            c = nc;
        }
        debug_assert_eq!(c, r + self.inner[r - 1]);
        self.inner[r - 1] += 1;
        Ok((r, c))
    }

    fn to_tableau(&self) -> ShiftedTableau {
        let shape = SkewShape::new(self.outer_partition(), self.inner_partition()).expect("nested");
        let labels: Vec<usize> = shape
            .reading_cells()
            .into_iter()
            .map(|(r, c)| self.grid[r - 1][c - 1].expect("slid board has no holes"))
            .collect();
        let word = PrimedWord::destandardize(&labels, &self.weight).expect("jeu de taquin commutes with standardization");
        ShiftedTableau::from_reading_word(shape, self.n, word.letters()).expect("jeu de taquin preserves semistandardness")
    }
}

/// One inner slide into the inner corner `corner`.
pub fn inner_slide(t: &ShiftedTableau, corner: Cell) -> Result<(ShiftedTableau, Cell)> {
    let mut b = Board::from_tableau(t);
    let exit = b.inner_slide(corner)?;
    Ok((b.to_tableau(), exit))
}

/// One outer slide from the outer corner `cell`.
pub fn outer_slide(t: &ShiftedTableau, cell: Cell) -> Result<(ShiftedTableau, Cell)> {
    let mut b = Board::from_tableau(t);
    let freed = b.outer_slide(cell)?;
    Ok((b.to_tableau(), freed))
}

/// Rectifies using the inner corner chosen by `choose` at every step.
pub fn rectify_by(t: &ShiftedTableau, mut choose: impl FnMut(&[Cell]) -> Cell) -> (ShiftedTableau, SlideRecord) {
    let mut b = Board::from_tableau(t);
    let mut steps = Vec::new();
    loop {
        let corners = removable_cells(&b.inner_partition());
        if corners.is_empty() {
            break;
        }
        let corner = choose(&corners);
        let exit = b.inner_slide(corner).expect("chosen among inner corners");
        steps.push(SlideStep {
            dir: Direction::Inner,
            cell: corner,
            exit,
        });
    }
    (b.to_tableau(), SlideRecord { steps })
}

/// Rectification, sliding into the lowest inner corner each time.
pub fn rectify(t: &ShiftedTableau) -> (ShiftedTableau, SlideRecord) {
    rectify_by(t, |corners| *corners.last().expect("non-empty"))
}

/// Rectification with uniformly random corner choices.
pub fn rectify_random<R: Rng + ?Sized>(t: &ShiftedTableau, rng: &mut R) -> (ShiftedTableau, SlideRecord) {
    rectify_by(t, |corners| corners[rng.gen_range(0..corners.len())])
}

/// Undoes a rectification record on a straight tableau by outer slides at
/// the recorded exit cells, in reverse order.
pub fn unrectify(s: &ShiftedTableau, rec: &SlideRecord) -> Result<ShiftedTableau> {
    let mut b = Board::from_tableau(s);
    for step in rec.steps.iter().rev() {
        if step.dir != Direction::Inner {
            return Err(Error::RecordMismatch("expected a record of inner slides".into()));
        }
        let freed = b
            .outer_slide(step.exit)
            .map_err(|e| Error::RecordMismatch(format!("replaying slide at {:?}: {e}", step.exit)))?;
        if freed != step.cell {
            return Err(Error::RecordMismatch(format!(
                "outer slide from {:?} freed {:?}, record expects {:?}",
                step.exit, freed, step.cell
            )));
        }
    }
    Ok(b.to_tableau())
}

/// Replays the inner slides of `rec` on `t`.
pub fn replay(t: &ShiftedTableau, rec: &SlideRecord) -> Result<ShiftedTableau> {
    let mut b = Board::from_tableau(t);
    for step in &rec.steps {
        match step.dir {
            Direction::Inner => b.inner_slide(step.cell)?,
            Direction::Outer => b.outer_slide(step.cell)?,
        };
    }
    Ok(b.to_tableau())
}

/// The Yamanouchi tableau `Y_ν`: row `i` filled with `i`.
pub fn yamanouchi(nu: &StrictPartition, n: u8) -> ShiftedTableau {
    let rows = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![Letter::unprimed(i as u8 + 1); len])
        .collect();
    ShiftedTableau::from_rows(SkewShape::straight(nu.clone()), n.max(nu.len() as u8).max(1), rows)
        .expect("Yamanouchi tableau is semistandard")
}

pub fn is_yamanouchi(t: &ShiftedTableau) -> bool {
    t.shape().is_straight()
        && t.rows()
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().all(|&l| l == Letter::unprimed(i as u8 + 1)))
}

/// Littlewood-Richardson-Stembridge: the rectification is Yamanouchi.
pub fn is_lrs(t: &ShiftedTableau) -> bool {
    is_yamanouchi(&rectify(t).0)
}

/// The anti-diagonal strip whose reading word is `w`: one cell per row,
/// no two cells sharing a row or column.
pub fn strip_tableau(w: &PrimedWord) -> ShiftedTableau {
    let len = w.len();
    let outer = StrictPartition::new((1..=len).rev().map(|k| 2 * k).collect()).expect("strict");
    let inner = StrictPartition::new((1..=len).rev().map(|k| 2 * k - 1).collect()).expect("strict");
    let shape = SkewShape::new(outer, inner).expect("nested");
    ShiftedTableau::from_reading_word(shape, w.n(), w.letters()).expect("strip cells are unrelated")
}

/// Rectification of a word.
pub fn rectify_word(w: &PrimedWord) -> ShiftedTableau {
    rectify(&strip_tableau(w)).0
}

/// Words reachable from `w` by one move K1, K2, S1 or S2.
///
/// Comparisons use the standardization; a move permutes the standardization
/// and the result is the unique word with that standardization and the same
/// weight, when one exists. S2 is the case of S1 where the first two letters
/// share a value.
pub fn knuth_neighbors(w: &PrimedWord) -> Vec<PrimedWord> {
    let std = w.standardize();
    let wt = w.weight();
    let mut out = Vec::new();
    let mut push = |perm: Vec<usize>| {
        if let Some(v) = PrimedWord::destandardize(&perm, &wt) {
            let v = v.with_n(w.n());
            if v != *w && !out.contains(&v) {
                out.push(v);
            }
        }
    };
    if std.len() >= 2 {
        let mut p = std.clone();
        p.swap(0, 1);
        push(p);
    }
    for j in 0..std.len().saturating_sub(2) {
        let (x, y, z) = (std[j], std[j + 1], std[j + 2]);
        // K1: b a c <-> b c a with a < b < c
        if (y < x && x < z) || (z < x && x < y) {
            let mut p = std.clone();
            p.swap(j + 1, j + 2);
            push(p);
        }
        // K2: a c b <-> c a b with a < b < c
        if (x < z && z < y) || (y < z && z < x) {
            let mut p = std.clone();
            p.swap(j, j + 1);
            push(p);
        }
    }
    out.sort();
    out
}

/// Shifted Knuth equivalence by bidirectional breadth-first search.
pub fn knuth_equivalent(w: &PrimedWord, v: &PrimedWord, cap: usize) -> Result<bool> {
    for x in [w, v] {
        if x.len() > cap {
            return Err(Error::CapExceeded { len: x.len(), cap });
        }
    }
    if w.len() != v.len() || w.weight() != v.weight() {
        return Ok(false);
    }
    if w == v {
        return Ok(true);
    }
    let mut seen: [HashSet<PrimedWord>; 2] = [HashSet::new(), HashSet::new()];
    let mut queues: [VecDeque<PrimedWord>; 2] = [VecDeque::new(), VecDeque::new()];
    seen[0].insert(w.clone());
    seen[1].insert(v.clone());
    queues[0].push_back(w.clone());
    queues[1].push_back(v.clone());
    while !queues[0].is_empty() && !queues[1].is_empty() {
        let side = if queues[0].len() <= queues[1].len() { 0 } else { 1 };
        let level = queues[side].len();
        for _ in 0..level {
            let x = queues[side].pop_front().expect("non-empty");
            for y in knuth_neighbors(&x) {
                if seen[1 - side].contains(&y) {
                    return Ok(true);
                }
                if seen[side].insert(y.clone()) {
                    queues[side].push_back(y);
                }
            }
        }
    }
    Ok(false)
}

/// The full Knuth class of `w`.
pub fn knuth_class(w: &PrimedWord) -> HashSet<PrimedWord> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for y in knuth_neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Weight;
    use rand::SeedableRng;
    use std::collections::HashMap;

    fn t(shape: &str, filling: &str, n: u8) -> ShiftedTableau {
        ShiftedTableau::parse(shape, filling, n).unwrap()
    }

    fn w(s: &str, n: u8) -> PrimedWord {
        PrimedWord::parse(s, n).unwrap()
    }

    /// Slide oracle: slide the standardized tableau (no ties, no special
    /// cases) and destandardize with the original weight.
    fn std_inner_slide(x: &ShiftedTableau, corner: Cell) -> Option<ShiftedTableau> {
        let word = x.reading_word();
        let std = word.standardize();
        let big = std.len() as u8;
        let std_letters: Vec<Letter> = std.iter().map(|&s| Letter::unprimed(s as u8)).collect();
        let st = ShiftedTableau::from_reading_word(x.shape().clone(), big.max(1), &std_letters).ok()?;
        // generic slide on distinct labels
        let mut grid: HashMap<Cell, u8> = st.entries().map(|(c, l)| (c, l.value)).collect();
        let (mut r, mut c) = corner;
        loop {
            let right = grid.get(&(r, c + 1)).copied();
            let below = grid.get(&(r + 1, c)).copied();
            let next = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) => {
                    if a < b {
                        (r, c + 1)
                    } else {
                        (r + 1, c)
                    }
                }
            };
            let v = grid.remove(&next).unwrap();
            grid.insert((r, c), v);
            r = next.0;
            c = next.1;
        }
        let mut outer: Vec<usize> = Vec::new();
        let mut inner: Vec<usize> = Vec::new();
        let rows = grid.keys().map(|k| k.0).max().unwrap_or(0);
        for row in 1..=rows {
            let cols: Vec<usize> = grid.keys().filter(|k| k.0 == row).map(|k| k.1).collect();
            let lo = cols.iter().min().copied();
            let hi = cols.iter().max().copied();
            match (lo, hi) {
                (Some(lo), Some(hi)) => {
                    inner.push(lo - row);
                    outer.push(hi - row + 1);
                }
                _ => {
                    // an empty row keeps the original inner boundary
                    let keep = x.shape().inner().part(row);
                    inner.push(keep);
                    outer.push(keep);
                }
            }
        }
        let shape = SkewShape::new(
            StrictPartition::from_row_lengths(outer).ok()?,
            StrictPartition::from_row_lengths(inner).ok()?,
        )
        .ok()?;
        let labels: Vec<usize> = shape.reading_cells().iter().map(|c| grid[c] as usize).collect();
        let word = PrimedWord::destandardize(&labels, &word.weight())?;
        ShiftedTableau::from_reading_word(shape, x.n(), word.letters()).ok()
    }

    #[test]
    fn slides_agree_with_standardized_slides() {
        for outer in StrictPartition::all_within(4) {
            for inner in outer.subpartitions() {
                if inner.is_empty() || inner == outer {
                    continue;
                }
                let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                for x in ShiftedTableau::enumerate(&shape, 3) {
                    for corner in shape.inner_corners() {
                        let (fast, _) = inner_slide(&x, corner).unwrap();
                        let oracle = std_inner_slide(&x, corner).expect("oracle slide");
                        assert_eq!(fast.reading_word(), oracle.reading_word(), "{x} at {corner:?}");
                        assert_eq!(fast.shape().cells(), oracle.shape().cells());
                    }
                }
            }
        }
    }

    #[test]
    fn straight_shape_has_no_inner_corner() {
        let x = t("2,1", "1 1 / 2", 2);
        assert!(matches!(inner_slide(&x, (1, 1)), Err(Error::NotInnerCorner(_))));
    }

    #[test]
    fn small_slide() {
        let x = t("2,1/1", "1 / 2", 2);
        let (y, exit) = inner_slide(&x, (1, 1)).unwrap();
        // the diagonal hole only has a right neighbour; then the 2 moves up
        assert_eq!(y, t("2", "1 2", 2));
        assert_eq!(exit, (2, 2));
    }

    #[test]
    fn outer_slide_undoes_inner_slide() {
        for shape in ["3,1/1", "4,2/1", "4,2,1/2", "3,2/1"] {
            let shape: SkewShape = shape.parse().unwrap();
            for x in ShiftedTableau::enumerate(&shape, 3) {
                for corner in shape.inner_corners() {
                    let (y, exit) = inner_slide(&x, corner).unwrap();
                    let (back, freed) = outer_slide(&y, exit).unwrap();
                    assert_eq!(freed, corner);
                    assert_eq!(back, x);
                }
            }
        }
    }

    #[test]
    fn rectify_straight_is_identity() {
        let x = t("3,1", "1 1 2' / 2", 2);
        let (y, rec) = rectify(&x);
        assert_eq!(y, x);
        assert!(rec.is_empty());
        assert_eq!(unrectify(&y, &rec).unwrap(), x);
    }

    #[test]
    fn rectify_unrectify_round_trip() {
        let shape: SkewShape = "3,1/1".parse().unwrap();
        for x in ShiftedTableau::enumerate(&shape, 2) {
            let (y, rec) = rectify(&x);
            assert!(y.shape().is_straight());
            assert_eq!(unrectify(&y, &rec).unwrap(), x);
            assert_eq!(replay(&x, &rec).unwrap(), y);
        }
    }

    #[test]
    fn small_rectification_is_order_independent() {
        let x = t("2,1/1", "1 / 2", 2);
        let (y, _) = rectify(&x);
        assert_eq!(y.weight(), Weight::new(vec![1, 1]));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(rectify_random(&x, &mut rng).0, y);
        }
    }

    #[test]
    fn record_serializes_as_triples() {
        let x = t("3,1/1", "1 2 / 2", 2);
        let (_, rec) = rectify(&x);
        let json = serde_json::to_string(&rec).unwrap();
        let back: SlideRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert!(json.starts_with("[[\"inner\",1,1],[\"outer\","));
    }

    #[test]
    fn yamanouchi_examples() {
        let nu = StrictPartition::new(vec![2, 1]).unwrap();
        assert_eq!(yamanouchi(&nu, 2), t("2,1", "1 1 / 2", 2));
        assert!(yamanouchi(&StrictPartition::empty(), 1).is_empty());
        for nu in StrictPartition::all_within(4) {
            let n = nu.len().max(1) as u8;
            let wt = Weight::new((1..=n as usize).map(|r| nu.part(r)).collect());
            let matching: Vec<_> = ShiftedTableau::enumerate(&SkewShape::straight(nu.clone()), n)
                .into_iter()
                .filter(|x| x.weight() == wt)
                .collect();
            assert_eq!(matching, vec![yamanouchi(&nu, n)]);
        }
    }

    #[test]
    fn lrs_examples() {
        let nu = StrictPartition::new(vec![3, 1]).unwrap();
        assert!(is_lrs(&yamanouchi(&nu, 2)));
        let ex = t("5,3,1", "1 1 1 1 3' / 2 2 3' / 3", 3);
        assert!(!is_lrs(&ex));
    }

    #[test]
    fn knuth_move_examples() {
        assert!(knuth_neighbors(&w("1 2", 2)).contains(&w("2 1", 2)));
        assert!(knuth_neighbors(&w("2 1 3", 3)).contains(&w("2 3 1", 3)));
        assert!(knuth_neighbors(&w("1 1", 1)).contains(&w("1 1'", 1)));
        assert!(knuth_equivalent(&w("1 2", 2), &w("2 1", 2), DEFAULT_KNUTH_CAP).unwrap());
        let long = w("1 1 1 1 1 1 1 1 1", 1);
        assert!(knuth_equivalent(&long, &long, DEFAULT_KNUTH_CAP).is_err());
    }

    #[test]
    fn knuth_moves_are_symmetric() {
        for word in ["2 1 3 1 2", "1 2' 1 3 2 2'", "3 1 2 2' 1"] {
            let x = w(word, 3);
            for y in knuth_neighbors(&x) {
                assert!(knuth_neighbors(&y).contains(&x), "{x} -> {y}");
            }
        }
    }

    #[test]
    fn words_rectify_like_their_tableaux() {
        let shape: SkewShape = "4,3,1/2".parse().unwrap();
        for x in ShiftedTableau::enumerate(&shape, 2) {
            assert_eq!(rectify_word(&x.reading_word()), rectify(&x).0);
            let (r, _) = rectify(&x);
            assert!(knuth_equivalent(&x.reading_word(), &r.reading_word(), 8).unwrap());
        }
    }
}
