//! Primed letters, words in canonical form, weights and standardization.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the primed alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub value: u8,
    pub primed: bool,
}

impl Letter {
    pub const fn unprimed(value: u8) -> Self {
        Letter { value, primed: false }
    }

    pub const fn primed(value: u8) -> Self {
        Letter { value, primed: true }
    }

    /// Position in the total order of the primed alphabet.
    pub fn rank(self) -> u16 {
        2 * self.value as u16 - self.primed as u16
    }

    pub fn with_value(self, value: u8) -> Self {
        Letter { value, ..self }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u8 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if value == 0 {
            return Err(Error::Parse(format!("letter values start at 1, got {s:?}")));
        }
        Ok(Letter { value, primed })
    }
}

/// Parses a space-separated string of letters, e.g. `"1 2' 2"`.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Formats letters space-separated with ASCII primes.
pub fn format_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Whether the leftmost letter of every value is unprimed.
pub fn is_canonical(letters: &[Letter]) -> bool {
    let mut seen = [false; 256];
    for l in letters {
        if !seen[l.value as usize] {
            if l.primed {
                return false;
            }
            seen[l.value as usize] = true;
        }
    }
    true
}

/// Unprimes the leftmost occurrence of every value, in place.
pub(crate) fn canonicalize_in_place(letters: &mut [Letter]) {
    let mut seen = [false; 256];
    for l in letters.iter_mut() {
        if !seen[l.value as usize] {
            l.primed = false;
            seen[l.value as usize] = true;
        }
    }
}

/// Letter counts by value, `wt_1 ... wt_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(Vec<usize>);

impl Weight {
    pub fn new(counts: Vec<usize>) -> Self {
        Weight(counts)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `wt_i` for 1-based `i`, 0 when out of range.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `⟨wt, α_i⟩ = wt_i - wt_{i+1}`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.get(i) as i64 - self.get(i + 1) as i64
    }

    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    /// `wt + α_i` (`raise = true`) or `wt - α_i`; `None` if a count would go negative.
    pub fn shift_alpha(&self, i: usize, raise: bool) -> Option<Weight> {
        let mut c = self.0.clone();
        let (from, to) = if raise { (i, i - 1) } else { (i - 1, i) };
        if i == 0 || i >= c.len() || c[from] == 0 {
            return None;
        }
        c[from] -= 1;
        c[to] += 1;
        Some(Weight(c))
    }

    /// Action of the transposition `s_i = (i, i+1)`.
    pub fn swapped(&self, i: usize) -> Weight {
        let mut c = self.0.clone();
        c.swap(i - 1, i);
        Weight(c)
    }

    /// Reverses coordinates `p ..= q` (1-based).
    pub fn reversed_between(&self, p: usize, q: usize) -> Weight {
        let mut c = self.0.clone();
        c[p - 1..q].reverse();
        Weight(c)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A word over `[n]'`, stored as its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimedWord {
    letters: Vec<Letter>,
    n: u8,
}

impl PrimedWord {
    /// Canonical representative of the class of `letters`.
    pub fn canonicalize(letters: &[Letter], n: u8) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.value == 0 || l.value > n) {
            return Err(Error::LetterOutOfRange {
                value: bad.value as usize,
                n,
            });
        }
        let mut letters = letters.to_vec();
        canonicalize_in_place(&mut letters);
        Ok(PrimedWord { letters, n })
    }

    pub fn parse(s: &str, n: u8) -> Result<Self> {
        Self::canonicalize(&parse_letters(s)?, n)
    }

    pub fn empty(n: u8) -> Self {
        PrimedWord { letters: Vec::new(), n }
    }

    pub(crate) fn from_canonical(letters: Vec<Letter>, n: u8) -> Self {
        debug_assert!(is_canonical(&letters));
        PrimedWord { letters, n }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Weight {
        let mut c = vec![0; self.n as usize];
        for l in &self.letters {
            c[l.value as usize - 1] += 1;
        }
        Weight(c)
    }

    /// Standardization: labels `1..=len`, assigned from the smallest value
    /// up; within a value, primed letters right to left, then unprimed
    /// letters left to right.
    pub fn standardize(&self) -> Vec<usize> {
        standardize(&self.letters)
    }

    /// The unique word with standardization `std` and weight `weight`, if any.
    pub fn destandardize(std: &[usize], weight: &Weight) -> Option<PrimedWord> {
        let total: usize = weight.counts().iter().sum();
        if total != std.len() {
            return None;
        }
        // positions[label - 1] = index in the word
        let mut positions = vec![usize::MAX; std.len()];
        for (idx, &label) in std.iter().enumerate() {
            if label == 0 || label > std.len() || positions[label - 1] != usize::MAX {
                return None;
            }
            positions[label - 1] = idx;
        }
        let mut letters = vec![Letter::unprimed(1); std.len()];
        let mut start = 0;
        for (v, &count) in weight.counts().iter().enumerate() {
            let block = &positions[start..start + count];
            start += count;
            if block.is_empty() {
                continue;
            }
            // positions must strictly decrease (primed) then strictly increase (unprimed)
            let turn = block
                .iter()
                .enumerate()
                .min_by_key(|(_, &p)| p)
                .map(|(k, _)| k)
                .unwrap_or(0);
            if !block[..=turn]
                .windows(2)
                .all(|w| w[0] > w[1])
                || !block[turn..].windows(2).all(|w| w[0] < w[1])
            {
                return None;
            }
            for (k, &p) in block.iter().enumerate() {
                letters[p] = Letter {
                    value: v as u8 + 1,
                    primed: k < turn,
                };
            }
        }
        Some(PrimedWord {
            letters,
            n: weight.len() as u8,
        })
    }

    pub fn with_n(mut self, n: u8) -> Self {
        self.n = n;
        self
    }
}

pub(crate) fn standardize(letters: &[Letter]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    // the leftmost letter of each value behaves the same primed or unprimed,
    // so sorting by (value, primed-first, position key) is representative-free
    order.sort_by_key(|&idx| {
        let l = letters[idx];
        let key = if l.primed {
            -(idx as i64) - 1
        } else {
            idx as i64
        };
        (l.value, !l.primed, key)
    });
    let mut std = vec![0; letters.len()];
    for (label, idx) in order.into_iter().enumerate() {
        std[idx] = label + 1;
    }
    std
}

impl fmt::Display for PrimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_letters(&self.letters))
    }
}
