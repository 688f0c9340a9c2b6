//! Strict partitions and skew shifted shapes.
//!
//! Cells are 1-based `(row, column)` pairs. Row `r` of the shifted diagram of
//! `λ` occupies columns `r ..= r + λ_r - 1`; a skew shape `λ/μ` keeps the
//! columns `r + μ_r ..= r + λ_r - 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// A partition with strictly decreasing positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        if ok {
            Ok(StrictPartition(parts))
        } else {
            Err(Error::NotStrict(parts))
        }
    }

    /// Builds a partition from a row-length vector, dropping trailing zeros.
    pub(crate) fn from_row_lengths(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self::new(rows)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// The stair `(m, m-1, ..., 1)`.
    pub fn stair(m: usize) -> Self {
        StrictPartition((1..=m).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `r` (1-based), 0 past the end.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells of the straight shifted diagram, row-major.
    pub fn cells(&self) -> Vec<Cell> {
        SkewShape::straight(self.clone()).cells()
    }

    /// The complement `λ∨` inside the stair of width `m`: the cells of
    /// `δ_m` outside `λ`, reflected along the anti-diagonal.
    pub fn complement(&self, m: usize) -> Result<StrictPartition> {
        if !StrictPartition::stair(m).contains(self) {
            return Err(Error::NotInStair {
                partition: self.to_string(),
                width: m,
            });
        }
        let mut rows = vec![0usize; m];
        for r in 1..=m {
            for c in (r + self.part(r))..=m {
                // (r, c) -> (m + 1 - c, m + 1 - r)
                rows[m - c] += 1;
            }
        }
        StrictPartition::from_row_lengths(rows)
    }

    /// All strict partitions with largest part at most `m` (equivalently,
    /// contained in the stair `δ_m`), in increasing order.
    pub fn all_within(m: usize) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = (0u32..(1 << m))
            .map(|mask| {
                let parts = (1..=m).rev().filter(|k| mask & (1 << (k - 1)) != 0).collect();
                StrictPartition(parts)
            })
            .collect();
        out.sort();
        out
    }

    /// All strict partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<StrictPartition> {
        StrictPartition::all_within(self.first())
            .into_iter()
            .filter(|p| self.contains(p))
            .collect()
    }

    /// All strict partitions of `size` with at most `max_len` parts.
    pub fn of_size(size: usize, max_len: usize) -> Vec<StrictPartition> {
        fn go(rem: usize, cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            if left == 0 {
                return;
            }
            for p in (1..=cap.min(rem)).rev() {
                cur.push(p);
                go(rem - p, p - 1, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Comma-separated parts; the empty string (or `∅`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(StrictPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        StrictPartition::new(parts)
    }
}

/// A skew shifted shape `λ/μ` with `μ ⊆ λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: StrictPartition) -> Self {
        SkewShape {
            outer,
            inner: StrictPartition::empty(),
        }
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns occupied by row `r` (1-based); empty past the last row.
    pub fn row_columns(&self, r: usize) -> std::ops::Range<usize> {
        (r + self.inner.part(r))..(r + self.outer.part(r))
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && self.row_columns(r).contains(&c)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|r| self.row_columns(r).map(move |c| (r, c)))
            .collect()
    }

    /// Cells in reading order: rows bottom to top, each left to right.
    pub fn reading_cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .rev()
            .flat_map(|r| self.row_columns(r).map(move |c| (r, c)))
            .collect()
    }

    /// Inner corners: cells of `μ` whose removal leaves a strict partition.
    pub fn inner_corners(&self) -> Vec<Cell> {
        removable_cells(&self.inner)
    }

    /// Outer corners: cells outside `λ` whose addition keeps it strict.
    pub fn outer_corners(&self) -> Vec<Cell> {
        addable_cells(&self.outer)
    }

    /// Removable cells of `λ` (the end of each row that can be deleted).
    pub fn outer_removable(&self) -> Vec<Cell> {
        removable_cells(&self.outer)
    }
}

pub(crate) fn removable_cells(p: &StrictPartition) -> Vec<Cell> {
    (1..=p.len())
        .filter(|&r| {
            let here = p.part(r);
            let next = p.part(r + 1);
            here - 1 > next || (here == 1 && next == 0)
        })
        .map(|r| (r, r + p.part(r) - 1))
        .collect()
}

pub(crate) fn addable_cells(p: &StrictPartition) -> Vec<Cell> {
    (1..=p.len() + 1)
        .filter(|&r| r == 1 || p.part(r) + 1 < p.part(r - 1))
        .map(|r| (r, r + p.part(r)))
        .collect()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `"outer/inner"`, `"outer/"` or just `"outer"`.
    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        SkewShape::new(outer.parse()?, inner.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_strict() {
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(StrictPartition::new(vec![3, 0]).is_err());
        assert!(StrictPartition::new(vec![]).is_ok());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(sp(&[5, 3, 2]).complement(5).unwrap(), sp(&[4, 1]));
        assert_eq!(sp(&[3, 2, 1]).complement(3).unwrap(), sp(&[]));
        assert_eq!(sp(&[2]).complement(2).unwrap(), sp(&[1]));
        assert_eq!(sp(&[]).complement(3).unwrap(), sp(&[3, 2, 1]));
        assert!(sp(&[4]).complement(3).is_err());
    }

    #[test]
    fn complement_is_involution() {
        for m in 0..=6 {
            for p in StrictPartition::all_within(m) {
                let c = p.complement(m).unwrap();
                assert_eq!(c.complement(m).unwrap(), p, "m={m} λ={p}");
                assert_eq!(c.size() + p.size(), m * (m + 1) / 2);
            }
        }
    }

    #[test]
    fn skew_cells_use_shifted_convention() {
        let s: SkewShape = "3,1/1".parse().unwrap();
        assert_eq!(s.cells(), vec![(1, 2), (1, 3), (2, 2)]);
        assert_eq!(s.reading_cells(), vec![(2, 2), (1, 2), (1, 3)]);
        assert_eq!(s.inner_corners(), vec![(1, 1)]);
        assert!("2/3".parse::<SkewShape>().is_err());
    }

    #[test]
    fn corners() {
        let p = sp(&[4, 2, 1]);
        assert_eq!(removable_cells(&p), vec![(1, 4), (3, 3)]);
        assert_eq!(addable_cells(&p), vec![(1, 5), (2, 4)]);
        assert_eq!(addable_cells(&sp(&[])), vec![(1, 1)]);
        assert_eq!(removable_cells(&sp(&[2, 1])), vec![(2, 2)]);
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(StrictPartition::all_within(4).len(), 16);
        assert_eq!(StrictPartition::of_size(6, 3), vec![sp(&[6]), sp(&[5, 1]), sp(&[4, 2]), sp(&[3, 2, 1])]);
        assert_eq!(sp(&[3, 1]).subpartitions().len(), 6);
    }
}
