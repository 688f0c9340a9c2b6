//! The star operator, evacuation, reversal and the interval involutions
//! `η_{p,q}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::{rectify, unrectify};
use crate::shape::SkewShape;
use crate::tableau::ShiftedTableau;
use crate::word::{Letter, Weight};

/// `θ_{p,q-1}`: the longest permutation of `[p, q-1]` inside the symmetric
/// group on operator indices. On weights it reverses coordinates `p..=q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalPermutation {
    pub p: usize,
    pub q: usize,
}

impl IntervalPermutation {
    pub fn new(p: usize, q: usize) -> Self {
        assert!(1 <= p && p < q, "interval permutation needs 1 <= p < q");
        IntervalPermutation { p, q }
    }

    /// Image of the operator index `i`.
    pub fn index(&self, i: usize) -> usize {
        if (self.p..self.q).contains(&i) {
            self.p + self.q - i - 1
        } else {
            i
        }
    }

    pub fn weight(&self, wt: &Weight) -> Weight {
        wt.reversed_between(self.p, self.q)
    }
}

/// Reflect along the anti-diagonal of the stair `δ = (λ_1, ..., 1)` and
/// complement the letters: `i ↦ (n-i+1)'`, `i' ↦ n-i+1`. A tableau of shape
/// `λ/μ` goes to shape `μ∨/λ∨`.
pub fn star(t: &ShiftedTableau, n: u8) -> Result<ShiftedTableau> {
    if let Some(l) = t.rows().iter().flatten().find(|l| l.value > n) {
        return Err(Error::LetterOutOfRange {
            value: l.value as usize,
            n,
        });
    }
    let m = t.shape().outer().first();
    let outer = t.shape().inner().complement(m)?;
    let inner = t.shape().outer().complement(m)?;
    let shape = SkewShape::new(outer, inner)?;
    let mut rows: Vec<Vec<Option<Letter>>> = (1..=shape.rows())
        .map(|r| vec![None; shape.row_columns(r).len()])
        .collect();
    for ((r, c), l) in t.entries() {
        let (nr, nc) = (m + 1 - c, m + 1 - r);
        let start = shape.row_columns(nr).start;
        rows[nr - 1][nc - start] = Some(Letter {
            value: n + 1 - l.value,
            primed: !l.primed,
        });
    }
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(|l| l.expect("reflection is a bijection")).collect())
        .collect();
    ShiftedTableau::from_rows(shape, n, rows)
}

/// Evacuation of a straight tableau: rectify its star.
pub fn evacuate(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    if !t.shape().is_straight() {
        return Err(Error::NotStraight(t.shape().to_string()));
    }
    Ok(rectify(&star(t, t.n())?).0)
}

/// Reversal: rectify, evacuate, then undo the rectification slides.
pub fn reversal(t: &ShiftedTableau) -> ShiftedTableau {
    let (r, rec) = rectify(t);
    let e = evacuate(&r).expect("rectification is straight");
    unrectify(&e, &rec).expect("evacuation preserves the rectified shape")
}

/// The Schützenberger involution `η`, realized as reversal.
pub fn eta(t: &ShiftedTableau) -> ShiftedTableau {
    reversal(t)
}

fn check_interval(t: &ShiftedTableau, p: usize, q: usize) -> Result<()> {
    if p < 1 || p >= q || q > t.n() as usize {
        return Err(Error::InvalidInterval { p, q, n: t.n() });
    }
    Ok(())
}

/// `η_{p,q}`: reversal of the letters in `[p, q]`, other letters fixed.
pub fn eta_interval(t: &ShiftedTableau, p: usize, q: usize) -> Result<ShiftedTableau> {
    check_interval(t, p, q)?;
    let n = t.n();
    let shift = (p - 1) as i32;
    let low = t.restrict(1, p - 1);
    let mid = t.restrict(p, q).shift_values(-shift, (q - p + 1) as u8)?;
    let mid = reversal(&mid).shift_values(shift, n)?;
    let high = t.restrict(q + 1, n as usize);
    ShiftedTableau::splice(&[low, mid, high])
}
