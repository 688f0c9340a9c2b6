//! Semistandard shifted tableaux in canonical form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Cell, SkewShape, StrictPartition};
use crate::word::{canonicalize_in_place, is_canonical, parse_letters, Letter, PrimedWord, Weight};

/// A semistandard filling of a skew shifted shape over `[n]'`, stored in
/// canonical form (its reading word is the canonical representative).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedTableau {
    shape: SkewShape,
    n: u8,
    rows: Vec<Vec<Letter>>,
}

impl ShiftedTableau {
    /// Builds a tableau from its rows (inner cells omitted). Any representative
    /// is accepted; the stored filling is canonicalized.
    pub fn from_rows(shape: SkewShape, n: u8, rows: Vec<Vec<Letter>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != shape.rows() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows given for shape {shape}",
                rows.len()
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            let want = shape.row_columns(idx + 1).len();
            if row.len() != want {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, shape {shape} needs {want}",
                    idx + 1,
                    row.len()
                )));
            }
            if let Some(l) = row.iter().find(|l| l.value == 0 || l.value > n) {
                return Err(Error::LetterOutOfRange {
                    value: l.value as usize,
                    n,
                });
            }
        }
        let mut t = ShiftedTableau { shape, n, rows };
        t.canonicalize();
        t.check_semistandard()?;
        Ok(t)
    }

    /// Fills `shape` in reading order with `letters`.
    pub fn from_reading_word(shape: SkewShape, n: u8, letters: &[Letter]) -> Result<Self> {
        if letters.len() != shape.size() {
            return Err(Error::ShapeMismatch(format!(
                "word of length {} for shape {shape} of size {}",
                letters.len(),
                shape.size()
            )));
        }
        let mut rows: Vec<Vec<Letter>> = (1..=shape.rows())
            .map(|r| Vec::with_capacity(shape.row_columns(r).len()))
            .collect();
        let mut it = letters.iter();
        for r in (1..=shape.rows()).rev() {
            for _ in shape.row_columns(r) {
                rows[r - 1].push(*it.next().expect("length checked"));
            }
        }
        ShiftedTableau::from_rows(shape, n, rows)
    }

    /// Parses the text format: rows separated by `/`, cells by spaces.
    pub fn parse(shape: &str, filling: &str, n: u8) -> Result<Self> {
        let shape: SkewShape = shape.parse()?;
        let rows = filling
            .split('/')
            .map(parse_letters)
            .collect::<Result<Vec<_>>>()?;
        ShiftedTableau::from_rows(shape, n, rows)
    }

    /// Parses `shape` and `filling`, taking `n` as the largest value present
    /// (at least 1) when not given.
    pub fn parse_infer(shape: &str, filling: &str, n: Option<u8>) -> Result<Self> {
        let n = match n {
            Some(n) => n,
            None => filling_max(filling)?.max(1),
        };
        ShiftedTableau::parse(shape, filling, n)
    }

    /// The tableau with no cells on the shape `λ/λ`.
    pub fn empty(outer: StrictPartition, n: u8) -> Self {
        let shape = SkewShape::new(outer.clone(), outer).expect("λ ⊆ λ");
        let rows = vec![Vec::new(); shape.rows()];
        ShiftedTableau { shape, n, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn entry(&self, (r, c): Cell) -> Option<Letter> {
        if !self.shape.contains_cell((r, c)) {
            return None;
        }
        let start = self.shape.row_columns(r).start;
        Some(self.rows[r - 1][c - start])
    }

    /// `(cell, letter)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(idx, row)| {
            let r = idx + 1;
            let start = self.shape.row_columns(r).start;
            row.iter().enumerate().map(move |(k, &l)| ((r, start + k), l))
        })
    }

    /// Row reading word: rows bottom to top, each left to right.
    pub fn reading_word(&self) -> PrimedWord {
        PrimedWord::from_canonical(self.reading_letters(), self.n)
    }

    pub(crate) fn reading_letters(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn weight(&self) -> Weight {
        let mut c = vec![0; self.n as usize];
        for l in self.rows.iter().flatten() {
            c[l.value as usize - 1] += 1;
        }
        Weight::new(c)
    }

    /// Same filling over a different alphabet bound.
    pub fn with_n(&self, n: u8) -> Result<Self> {
        if let Some(l) = self.rows.iter().flatten().find(|l| l.value > n) {
            return Err(Error::LetterOutOfRange {
                value: l.value as usize,
                n,
            });
        }
        Ok(ShiftedTableau { n, ..self.clone() })
    }

    fn canonicalize(&mut self) {
        let mut word = self.reading_letters();
        canonicalize_in_place(&mut word);
        let mut it = word.into_iter();
        for row in self.rows.iter_mut().rev() {
            for l in row.iter_mut() {
                *l = it.next().expect("same length");
            }
        }
    }

    fn check_semistandard(&self) -> Result<()> {
        for ((r, c), l) in self.entries() {
            if let Some(right) = self.entry((r, c + 1)) {
                if right < l || (right == l && l.primed) {
                    return Err(Error::NotSemistandard {
                        cell: (r, c),
                        reason: "row must weakly increase with at most one i' per row",
                    });
                }
            }
            if let Some(below) = self.entry((r + 1, c)) {
                if below < l || (below == l && !l.primed) {
                    return Err(Error::NotSemistandard {
                        cell: (r, c),
                        reason: "column must weakly increase with at most one i per column",
                    });
                }
            }
        }
        debug_assert!(is_canonical(&self.reading_letters()));
        Ok(())
    }

    /// The sub-tableau `T^{p,q}` on the cells whose value lies in `[p, q]`.
    /// Letters are kept as they are; an empty range gives an empty tableau.
    pub fn restrict(&self, p: usize, q: usize) -> ShiftedTableau {
        let below = |v: usize| -> StrictPartition {
            let rows = (1..=self.shape.rows())
                .map(|r| {
                    self.shape.inner().part(r)
                        + self.rows[r - 1].iter().filter(|l| (l.value as usize) <= v).count()
                })
                .collect();
            StrictPartition::from_row_lengths(rows).expect("letters below a value form a shifted shape")
        };
        let inner = below(p.saturating_sub(1));
        let outer = below(q.max(p.saturating_sub(1)));
        let shape = SkewShape::new(outer, inner).expect("nested");
        let rows = (1..=shape.rows())
            .map(|r| {
                self.rows[r - 1]
                    .iter()
                    .copied()
                    .filter(|l| (p..=q).contains(&(l.value as usize)))
                    .collect()
            })
            .collect();
        let mut t = ShiftedTableau {
            shape,
            n: self.n,
            rows,
        };
        t.canonicalize();
        t
    }

    /// Adds `delta` to every letter value and sets the alphabet bound to `n`.
    pub fn shift_values(&self, delta: i32, n: u8) -> Result<ShiftedTableau> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| {
                        let v = l.value as i32 + delta;
                        if v < 1 || v > n as i32 {
                            Err(Error::LetterOutOfRange {
                                value: v.max(0) as usize,
                                n,
                            })
                        } else {
                            Ok(l.with_value(v as u8))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ShiftedTableau {
            shape: self.shape.clone(),
            n,
            rows,
        })
    }

    /// Disjoint union of tableaux whose cells assemble into one skew shape.
    /// The alphabet bound of the result is the largest among the parts.
    pub fn splice(parts: &[ShiftedTableau]) -> Result<ShiftedTableau> {
        let n = parts.iter().map(|t| t.n).max().unwrap_or(1);
        let nonempty: Vec<&ShiftedTableau> = parts.iter().filter(|t| !t.is_empty()).collect();
        if nonempty.is_empty() {
            return Ok(parts
                .first()
                .map(|t| ShiftedTableau { n, ..t.clone() })
                .unwrap_or_else(|| ShiftedTableau::empty(StrictPartition::empty(), n)));
        }
        let depth = nonempty.iter().map(|t| t.shape.rows()).max().unwrap_or(0);
        let outer_rows = (1..=depth)
            .map(|r| nonempty.iter().map(|t| t.shape.outer().part(r)).max().unwrap_or(0))
            .collect();
        let inner_rows = (1..=depth)
            .map(|r| {
                nonempty
                    .iter()
                    .filter(|t| r <= t.shape.rows())
                    .map(|t| t.shape.inner().part(r))
                    .min()
                    .unwrap_or(0)
            })
            .collect();
        let outer = StrictPartition::from_row_lengths(outer_rows)
            .map_err(|e| Error::ShapeMismatch(format!("spliced outer shape: {e}")))?;
        let inner = StrictPartition::from_row_lengths(inner_rows)
            .map_err(|e| Error::ShapeMismatch(format!("spliced inner shape: {e}")))?;
        let shape = SkewShape::new(outer, inner)?;
        let mut grid: Vec<Vec<Option<Letter>>> = (1..=shape.rows())
            .map(|r| vec![None; shape.row_columns(r).len()])
            .collect();
        for t in &nonempty {
            for ((r, c), l) in t.entries() {
                if !shape.contains_cell((r, c)) {
                    return Err(Error::ShapeMismatch(format!("cell {:?} outside {shape}", (r, c))));
                }
                let slot = &mut grid[r - 1][c - shape.row_columns(r).start];
                if slot.is_some() {
                    return Err(Error::Overlap((r, c)));
                }
                *slot = Some(l);
            }
        }
        let rows = grid
            .into_iter()
            .enumerate()
            .map(|(idx, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(k, l)| {
                        l.ok_or_else(|| {
                            let r = idx + 1;
                            Error::ShapeMismatch(format!(
                                "cell {:?} not covered by any part",
                                (r, shape.row_columns(r).start + k)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ShiftedTableau::from_rows(shape, n, rows)
    }

    /// Every tableau of `SShT(shape, n)`, sorted by reading word.
    pub fn enumerate(shape: &SkewShape, n: u8) -> Vec<ShiftedTableau> {
        let cells = shape.reading_cells();
        let mut out = Vec::new();
        let mut fill: Vec<Letter> = Vec::with_capacity(cells.len());
        let mut seen = vec![false; n as usize + 1];
        enumerate_rec(shape, n, &cells, &mut fill, &mut seen, &mut out);
        out.sort_by_key(|t| t.reading_letters());
        out
    }

    /// Text form of the filling: `"1 1 2' / 2"`.
    pub fn filling_text(&self) -> String {
        self.rows
            .iter()
            .map(|row| crate::word::format_letters(row))
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

fn filling_max(filling: &str) -> Result<u8> {
    let mut m = 0;
    for part in filling.split('/') {
        for l in parse_letters(part)? {
            m = m.max(l.value);
        }
    }
    Ok(m)
}

fn enumerate_rec(
    shape: &SkewShape,
    n: u8,
    cells: &[Cell],
    fill: &mut Vec<Letter>,
    seen: &mut [bool],
    out: &mut Vec<ShiftedTableau>,
) {
    let k = fill.len();
    if k == cells.len() {
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); shape.rows()];
        for (&(r, _), &l) in cells.iter().zip(fill.iter()).rev() {
            rows[r - 1].push(l);
        }
        for row in rows.iter_mut() {
            row.reverse();
        }
        out.push(ShiftedTableau {
            shape: shape.clone(),
            n,
            rows,
        });
        return;
    }
    let (r, c) = cells[k];
    // reading order fills rows bottom to top, so the left and lower
    // neighbours are already known
    let left = (k > 0 && cells[k - 1] == (r, c - 1)).then(|| fill[k - 1]);
    let below = if shape.contains_cell((r + 1, c)) {
        cells[..k].iter().position(|&x| x == (r + 1, c)).map(|p| fill[p])
    } else {
        None
    };
    for value in 1..=n {
        for primed in [true, false] {
            let l = Letter { value, primed };
            if primed && !seen[value as usize] {
                continue;
            }
            if let Some(a) = left {
                if l < a || (l == a && l.primed) {
                    continue;
                }
            }
            if let Some(b) = below {
                if b < l || (b == l && !l.primed) {
                    continue;
                }
            }
            let first = !seen[value as usize];
            seen[value as usize] = true;
            fill.push(l);
            enumerate_rec(shape, n, cells, fill, seen, out);
            fill.pop();
            if first {
                seen[value as usize] = false;
            }
        }
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.filling_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(shape: &str, filling: &str, n: u8) -> ShiftedTableau {
        ShiftedTableau::parse(shape, filling, n).unwrap()
    }

    fn worked_example() -> ShiftedTableau {
        t("6,4,2/3,1", "1 1 2' / 2 3' 3 / 3 3", 3)
    }

    #[test]
    fn reading_word_and_weight() {
        let ex = worked_example();
        assert_eq!(ex.reading_word().to_string(), "3 3 2 3' 3 1 1 2'");
        assert_eq!(ex.weight(), Weight::new(vec![2, 2, 4]));
        assert_eq!(t("1", "1", 1).reading_word().to_string(), "1");
        assert_eq!(t("2,1", "1 2' / 2", 2).reading_word().to_string(), "2 1 2'");
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(ShiftedTableau::parse("2", "1' 1'", 1).is_err());
        assert!(ShiftedTableau::parse("2,1", "1 2 / 2", 2).is_err());
        assert!(ShiftedTableau::parse("2,1", "2 1 / 2", 2).is_err());
        assert!(ShiftedTableau::parse("2,1", "1 1", 2).is_err());
        assert!(ShiftedTableau::parse("2", "1 3", 2).is_err());
    }

    #[test]
    fn input_is_canonicalized() {
        let a = t("2,1", "1' 2' / 2'", 2);
        assert_eq!(a, t("2,1", "1 2' / 2", 2));
    }

    #[test]
    fn enumerate_small_shapes() {
        let one = ShiftedTableau::enumerate(&"1".parse().unwrap(), 1);
        assert_eq!(one, vec![t("1", "1", 1)]);
        let s21 = ShiftedTableau::enumerate(&"2,1".parse().unwrap(), 2);
        assert_eq!(s21, vec![t("2,1", "1 1 / 2", 2), t("2,1", "1 2' / 2", 2)]);
        let s2 = ShiftedTableau::enumerate(&"2".parse().unwrap(), 2);
        let words: Vec<String> = s2.iter().map(|x| x.reading_word().to_string()).collect();
        assert_eq!(words, vec!["1 1", "1 2", "2 2"]);
        let empty = ShiftedTableau::enumerate(&"2,1/2,1".parse().unwrap(), 3);
        assert_eq!(empty.len(), 1);
    }

    /// Brute force over every filling of every cell with every letter.
    fn brute_force(shape: &SkewShape, n: u8) -> Vec<ShiftedTableau> {
        let cells = shape.reading_cells();
        let alphabet: Vec<Letter> = (1..=n).flat_map(|v| [Letter::primed(v), Letter::unprimed(v)]).collect();
        let total = alphabet.len().pow(cells.len() as u32);
        let mut out = std::collections::BTreeSet::new();
        for mut code in 0..total {
            let mut word = Vec::new();
            for _ in 0..cells.len() {
                word.push(alphabet[code % alphabet.len()]);
                code /= alphabet.len();
            }
            if !is_canonical(&word) {
                continue;
            }
            if let Ok(x) = ShiftedTableau::from_reading_word(shape.clone(), n, &word) {
                if x.reading_letters() == word {
                    out.insert(x.reading_letters());
                }
            }
        }
        out.into_iter()
            .map(|w| ShiftedTableau::from_reading_word(shape.clone(), n, &w).unwrap())
            .collect()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (shape, n) in [("2,1", 2), ("2", 2), ("3,1", 2), ("3,1/1", 2), ("2,1", 3), ("3,2/2", 3), ("4,2/1", 2)] {
            let shape: SkewShape = shape.parse().unwrap();
            let fast = ShiftedTableau::enumerate(&shape, n);
            assert_eq!(fast, brute_force(&shape, n), "shape {shape} n {n}");
        }
    }

    #[test]
    fn restrict_examples() {
        let x = t("2,1", "1 2' / 2", 2);
        assert_eq!(x.restrict(1, 2), x);
        let mid = x.restrict(2, 2);
        assert_eq!(mid.shape().to_string(), "2,1/1");
        assert_eq!(mid.entry((1, 2)), Some(Letter::primed(2)));
        assert_eq!(mid.entry((2, 2)), Some(Letter::unprimed(2)));
        let y = t("2,1", "1 1 / 2", 2);
        assert!(y.restrict(3, 3).is_empty());
    }

    #[test]
    fn splice_round_trip() {
        let x = t("2,1", "1 2' / 2", 2);
        assert_eq!(ShiftedTableau::splice(&[x.restrict(1, 1), x.restrict(2, 2)]).unwrap(), x);
        let empty = ShiftedTableau::empty(StrictPartition::empty(), 2);
        assert_eq!(ShiftedTableau::splice(&[empty, x.clone()]).unwrap(), x);
        let ex = worked_example();
        for split in 0..=3 {
            let parts = [ex.restrict(1, split), ex.restrict(split + 1, 3)];
            assert_eq!(ShiftedTableau::splice(&parts).unwrap(), ex);
        }
    }

    #[test]
    fn splice_rejects_overlap() {
        let x = t("2,1", "1 2' / 2", 2);
        assert!(matches!(ShiftedTableau::splice(&[x.clone(), x]), Err(Error::Overlap(_))));
    }

    #[test]
    fn splice_round_trip_over_all_compositions() {
        let shape: SkewShape = "4,2,1/1".parse().unwrap();
        for x in ShiftedTableau::enumerate(&shape, 3) {
            for a in 0..=3 {
                for b in a..=3 {
                    let parts = [x.restrict(1, a), x.restrict(a + 1, b), x.restrict(b + 1, 3)];
                    assert_eq!(ShiftedTableau::splice(&parts).unwrap(), x);
                }
            }
        }
    }
}
