//! Crystal operators on words and tableaux.
//!
//! The primed operators `E'_i`, `F'_i` keep the standardization and move the
//! weight by `±α_i`. The unprimed operators `E_i`, `F_i` act on the letters
//! `{i, i+1}` only: that piece is relabelled to `{1, 2}`, rectified, moved
//! inside the straight two-letter crystal `B(ρ, 2)` and slid back.
//!
//! `B(ρ, 2)` is a single string. A two-row `ρ = (m, j)` gives a separated
//! string of `2(m - j)` elements: the top chain holds the elements with
//! `E' = none`, the bottom chain those with `F' = none`, and `F` moves down one
//! weight level inside a chain. A one-row `ρ = (m)` gives a collapsed chain of
//! `m + 1` elements with `F = F'`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::{rectify, unrectify};
use crate::shape::{SkewShape, StrictPartition};
use crate::tableau::ShiftedTableau;
use crate::word::PrimedWord;

fn valid_index(n: u8, i: usize) -> bool {
    i >= 1 && i < n as usize
}

fn check_index(n: u8, i: usize) -> Result<()> {
    if valid_index(n, i) {
        Ok(())
    } else {
        Err(Error::InvalidIndex { i, n })
    }
}

fn primed_word(w: &PrimedWord, i: usize, raise: bool) -> Option<PrimedWord> {
    if !valid_index(w.n(), i) {
        return None;
    }
    let wt = w.weight().shift_alpha(i, raise)?;
    PrimedWord::destandardize(&w.standardize(), &wt)
}

/// `E'_i(w)`: the word with the same standardization and weight `wt + α_i`.
pub fn primed_raise_word(w: &PrimedWord, i: usize) -> Option<PrimedWord> {
    primed_word(w, i, true)
}

/// `F'_i(w)`: the word with the same standardization and weight `wt - α_i`.
pub fn primed_lower_word(w: &PrimedWord, i: usize) -> Option<PrimedWord> {
    primed_word(w, i, false)
}

fn primed_tableau(t: &ShiftedTableau, i: usize, raise: bool) -> Option<ShiftedTableau> {
    let w = primed_word(&t.reading_word(), i, raise)?;
    Some(
        ShiftedTableau::from_reading_word(t.shape().clone(), t.n(), w.letters())
            .expect("same standardization keeps the filling semistandard"),
    )
}

pub fn primed_raise(t: &ShiftedTableau, i: usize) -> Option<ShiftedTableau> {
    primed_tableau(t, i, true)
}

pub fn primed_lower(t: &ShiftedTableau, i: usize) -> Option<ShiftedTableau> {
    primed_tableau(t, i, false)
}

/// The operators of a straight two-letter crystal `B(ρ, 2)`.
struct Ladder {
    lower: HashMap<ShiftedTableau, ShiftedTableau>,
    raise: HashMap<ShiftedTableau, ShiftedTableau>,
}

impl Ladder {
    fn build(rho: &StrictPartition) -> Ladder {
        let elems = ShiftedTableau::enumerate(&SkewShape::straight(rho.clone()), 2);
        let mut lower = HashMap::new();
        if rho.len() <= 1 {
            for x in &elems {
                if let Some(y) = primed_lower(x, 1) {
                    lower.insert(x.clone(), y);
                }
            }
        } else {
            let top = |x: &ShiftedTableau| primed_raise(x, 1).is_none();
            let mut levels: HashMap<(bool, usize), &ShiftedTableau> = HashMap::new();
            for x in &elems {
                let prev = levels.insert((top(x), x.weight().get(2)), x);
                assert!(prev.is_none(), "two elements of one chain share a weight in B({rho}, 2)");
            }
            for x in &elems {
                if let Some(y) = levels.get(&(top(x), x.weight().get(2) + 1)) {
                    lower.insert(x.clone(), (*y).clone());
                }
            }
        }
        let raise = lower.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        Ladder { lower, raise }
    }
}

static LADDERS: Lazy<RwLock<HashMap<StrictPartition, Arc<Ladder>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn ladder(rho: &StrictPartition) -> Arc<Ladder> {
    if let Some(l) = LADDERS.read().expect("ladder cache poisoned").get(rho) {
        return l.clone();
    }
    let built = Arc::new(Ladder::build(rho));
    LADDERS
        .write()
        .expect("ladder cache poisoned")
        .entry(rho.clone())
        .or_insert(built)
        .clone()
}

fn unprimed(t: &ShiftedTableau, i: usize, raise: bool) -> Option<ShiftedTableau> {
    let n = t.n();
    if !valid_index(n, i) {
        return None;
    }
    let piece = t.restrict(i, i + 1);
    if piece.is_empty() {
        return None;
    }
    let shift = i as i32 - 1;
    let local = piece.shift_values(-shift, 2).expect("restricted letters lie in [i, i+1]");
    let (straight, rec) = rectify(&local);
    let lad = ladder(straight.shape().outer());
    let table = if raise { &lad.raise } else { &lad.lower };
    let moved = table.get(&straight.with_n(2).expect("two letters"))?;
    let back = unrectify(moved, &rec)
        .expect("moves inside B(ρ, 2) keep the shape")
        .shift_values(shift, n)
        .expect("values return to [i, i+1]");
    let spliced = ShiftedTableau::splice(&[t.restrict(1, i - 1), back, t.restrict(i + 2, n as usize)])
        .expect("the pieces tile the original shape");
    Some(spliced)
}

/// `E_i(T)`.
pub fn unprimed_raise(t: &ShiftedTableau, i: usize) -> Option<ShiftedTableau> {
    unprimed(t, i, true)
}

/// `F_i(T)`.
pub fn unprimed_lower(t: &ShiftedTableau, i: usize) -> Option<ShiftedTableau> {
    unprimed(t, i, false)
}

/// `E_i` on words through the anti-diagonal strip tableau.
pub fn unprimed_raise_word(w: &PrimedWord, i: usize) -> Option<PrimedWord> {
    unprimed_raise(&crate::jdt::strip_tableau(w), i).map(|t| t.reading_word())
}

pub fn unprimed_lower_word(w: &PrimedWord, i: usize) -> Option<PrimedWord> {
    unprimed_lower(&crate::jdt::strip_tableau(w), i).map(|t| t.reading_word())
}

fn iterate(t: &ShiftedTableau, m: usize, op: impl Fn(&ShiftedTableau) -> Option<ShiftedTableau>) -> Option<ShiftedTableau> {
    let mut cur = t.clone();
    for _ in 0..m {
        cur = op(&cur)?;
    }
    Some(cur)
}

fn count(t: &ShiftedTableau, op: impl Fn(&ShiftedTableau) -> Option<ShiftedTableau>) -> usize {
    let mut k = 0;
    let mut cur = t.clone();
    while let Some(next) = op(&cur) {
        cur = next;
        k += 1;
    }
    k
}

fn is_isolated(t: &ShiftedTableau, i: usize) -> bool {
    unprimed_lower(t, i).is_none()
        && unprimed_raise(t, i).is_none()
        && primed_lower(t, i).is_none()
        && primed_raise(t, i).is_none()
}

/// `σ_i(T)`, the shifted reflection operator.
pub fn sigma(t: &ShiftedTableau, i: usize) -> Result<ShiftedTableau> {
    check_index(t.n(), i)?;
    if is_isolated(t, i) {
        return Ok(t.clone());
    }
    let k = t.weight().pairing(i);
    let f = |x: &ShiftedTableau| unprimed_lower(x, i);
    let e = |x: &ShiftedTableau| unprimed_raise(x, i);
    let fp = primed_lower(t, i);
    let out = match (k.signum(), fp) {
        (1, Some(_)) => iterate(t, k as usize - 1, f).and_then(|x| primed_lower(&x, i)),
        (1, None) => iterate(t, k as usize + 1, f).and_then(|x| primed_raise(&x, i)),
        (0, Some(x)) => unprimed_raise(&x, i),
        (0, None) => unprimed_lower(t, i).and_then(|x| primed_raise(&x, i)),
        (_, Some(x)) => iterate(&x, (-k) as usize + 1, e),
        (_, None) => primed_raise(t, i).and_then(|x| iterate(&x, (-k) as usize - 1, e)),
    };
    Ok(out.expect("σ_i stays inside the i-string"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StringKind {
    /// Two `i`-chains of equal length joined by `i'` edges.
    Separated,
    /// One chain carrying both an `i` and an `i'` edge at each step.
    Collapsed,
}

/// An `i`-string: the `{i, i'}`-component of a tableau, laid out by chains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringDescriptor {
    pub color: usize,
    pub kind: StringKind,
    /// The single chain of a collapsed string, or the top chain, highest first.
    pub top: Vec<ShiftedTableau>,
    /// The bottom chain of a separated string; empty when collapsed.
    pub bottom: Vec<ShiftedTableau>,
}

impl StringDescriptor {
    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn members(&self) -> impl Iterator<Item = &ShiftedTableau> {
        self.top.iter().chain(self.bottom.iter())
    }

    /// Checks every operator inside the string against the arrangement of
    /// its kind: all edges present, no others.
    pub fn check(&self) -> std::result::Result<(), String> {
        let i = self.color;
        let chain_ok = |chain: &[ShiftedTableau], primed_too: bool| -> std::result::Result<(), String> {
            for (k, x) in chain.iter().enumerate() {
                let next = chain.get(k + 1);
                let prev = k.checked_sub(1).map(|p| &chain[p]);
                if unprimed_lower(x, i).as_ref() != next {
                    return Err(format!("F_{i} of {x} breaks the chain"));
                }
                if unprimed_raise(x, i).as_ref() != prev {
                    return Err(format!("E_{i} of {x} breaks the chain"));
                }
                if primed_too {
                    if primed_lower(x, i).as_ref() != next {
                        return Err(format!("F'_{i} of {x} differs from F_{i}"));
                    }
                    if primed_raise(x, i).as_ref() != prev {
                        return Err(format!("E'_{i} of {x} differs from E_{i}"));
                    }
                }
            }
            Ok(())
        };
        match self.kind {
            StringKind::Collapsed => {
                if !self.bottom.is_empty() || self.top.is_empty() {
                    return Err("collapsed string must be one non-empty chain".into());
                }
                chain_ok(&self.top, true)
            }
            StringKind::Separated => {
                if self.top.len() != self.bottom.len() || self.top.is_empty() {
                    return Err("separated string needs two chains of equal length".into());
                }
                chain_ok(&self.top, false)?;
                chain_ok(&self.bottom, false)?;
                for (x, y) in self.top.iter().zip(&self.bottom) {
                    if primed_lower(x, i).as_ref() != Some(y) || primed_raise(x, i).is_some() {
                        return Err(format!("top element {x} lacks its i' edge"));
                    }
                    if primed_raise(y, i).as_ref() != Some(x) || primed_lower(y, i).is_some() {
                        return Err(format!("bottom element {y} lacks its i' edge"));
                    }
                }
                Ok(())
            }
        }
    }
}

/// The full `{i, i'}`-component of `t`.
pub fn string_members(t: &ShiftedTableau, i: usize) -> BTreeSet<ShiftedTableau> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.clone());
    while let Some(x) = queue.pop_front() {
        let nbrs = [
            unprimed_lower(&x, i),
            unprimed_raise(&x, i),
            primed_lower(&x, i),
            primed_raise(&x, i),
        ];
        for y in nbrs.into_iter().flatten() {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn follow(start: &ShiftedTableau, i: usize) -> Vec<ShiftedTableau> {
    let mut chain = vec![start.clone()];
    while let Some(next) = unprimed_lower(chain.last().expect("non-empty"), i) {
        chain.push(next);
    }
    chain
}

/// Lays out the `i`-string of `t`. The result is only meaningful as an
/// arrangement after [`StringDescriptor::check`] succeeds.
pub fn classify_string(t: &ShiftedTableau, i: usize) -> StringDescriptor {
    let members = string_members(t, i);
    let head = members
        .iter()
        .find(|x| unprimed_raise(x, i).is_none() && primed_raise(x, i).is_none())
        .unwrap_or(t)
        .clone();
    let collapsed = members.iter().all(|x| unprimed_lower(x, i) == primed_lower(x, i));
    if collapsed {
        StringDescriptor {
            color: i,
            kind: StringKind::Collapsed,
            top: follow(&head, i),
            bottom: Vec::new(),
        }
    } else {
        let bottom = primed_lower(&head, i).map(|b| follow(&b, i)).unwrap_or_default();
        StringDescriptor {
            color: i,
            kind: StringKind::Separated,
            top: follow(&head, i),
            bottom,
        }
    }
}

/// Partial and total string lengths of a tableau for one color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lengths {
    pub eps_hat: usize,
    pub eps_prime: usize,
    pub phi_hat: usize,
    pub phi_prime: usize,
    pub eps: usize,
    pub phi: usize,
}

pub fn lengths(t: &ShiftedTableau, i: usize) -> Lengths {
    let eps_hat = count(t, |x| unprimed_raise(x, i));
    let eps_prime = count(t, |x| primed_raise(x, i));
    let phi_hat = count(t, |x| unprimed_lower(x, i));
    let phi_prime = count(t, |x| primed_lower(x, i));
    let (eps, phi) = match classify_string(t, i).kind {
        StringKind::Collapsed => (eps_hat, phi_hat),
        StringKind::Separated => (eps_hat + eps_prime, phi_hat + phi_prime),
    };
    Lengths {
        eps_hat,
        eps_prime,
        phi_hat,
        phi_prime,
        eps,
        phi,
    }
}

/// One step of an operator program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    E(usize),
    F(usize),
    EPrime(usize),
    FPrime(usize),
    Sigma(usize),
}

impl Operator {
    pub fn index(self) -> usize {
        match self {
            Operator::E(i) | Operator::F(i) | Operator::EPrime(i) | Operator::FPrime(i) | Operator::Sigma(i) => i,
        }
    }

    /// Applies the operator; `Ok(None)` means it is undefined on `t`.
    pub fn apply(self, t: &ShiftedTableau) -> Result<Option<ShiftedTableau>> {
        let i = self.index();
        check_index(t.n(), i)?;
        Ok(match self {
            Operator::E(_) => unprimed_raise(t, i),
            Operator::F(_) => unprimed_lower(t, i),
            Operator::EPrime(_) => primed_raise(t, i),
            Operator::FPrime(_) => primed_lower(t, i),
            Operator::Sigma(_) => Some(sigma(t, i)?),
        })
    }

    /// Parses a comma-separated program such as `"F1,E2',S1"`.
    pub fn parse_program(s: &str) -> Result<Vec<Operator>> {
        s.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::parse)
            .collect()
    }

    /// Runs a program left to right, stopping at the first undefined step.
    pub fn run_program(ops: &[Operator], t: &ShiftedTableau) -> Result<Option<ShiftedTableau>> {
        let mut cur = t.clone();
        for op in ops {
            match op.apply(&cur)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::E(i) => write!(f, "E{i}"),
            Operator::F(i) => write!(f, "F{i}"),
            Operator::EPrime(i) => write!(f, "E{i}'"),
            Operator::FPrime(i) => write!(f, "F{i}'"),
            Operator::Sigma(i) => write!(f, "S{i}"),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown operator {s:?}"));
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            Some(b) => (b, true),
            None => (s, false),
        };
        let mut chars = body.chars();
        let head = chars.next().ok_or_else(bad)?;
        let i: usize = chars.as_str().parse().map_err(|_| bad())?;
        match (head, primed) {
            ('E', false) => Ok(Operator::E(i)),
            ('F', false) => Ok(Operator::F(i)),
            ('E', true) => Ok(Operator::EPrime(i)),
            ('F', true) => Ok(Operator::FPrime(i)),
            ('S', false) => Ok(Operator::Sigma(i)),
            _ => Err(bad()),
        }
    }
}
