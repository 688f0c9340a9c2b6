//! Exhaustive checks of the algebraic properties of shifted tableau
//! crystals, grouped into suites.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{classify_string, lengths, sigma, string_members};
use crate::error::{Error, Result};
use crate::graph::{lrs_count, verify_cactus, CactusGenerator, CrystalGraph};
use crate::involutions::{reversal, IntervalPermutation};
use crate::jdt::{is_lrs, knuth_neighbors, rectify, rectify_random, rectify_word, yamanouchi};
use crate::shape::{SkewShape, StrictPartition};
use crate::tableau::ShiftedTableau;
use crate::word::{Letter, PrimedWord};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// What was covered, or the first counterexample.
    pub detail: String,
}

impl Check {
    fn from(name: &str, outcome: std::result::Result<String, String>) -> Check {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{}: {} checks, {} failed", self.suite, self.checks.len(), failed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Golden,
    Cactus,
    Braid,
    Knuth,
    Symmetry,
    Structure,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "golden" => Suite::Golden,
            "cactus" => Suite::Cactus,
            "braid" => Suite::Braid,
            "knuth" => Suite::Knuth,
            "symmetry" => Suite::Symmetry,
            "structure" => Suite::Structure,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Golden => "golden",
            Suite::Cactus => "cactus",
            Suite::Braid => "braid",
            Suite::Knuth => "knuth",
            Suite::Symmetry => "symmetry",
            Suite::Structure => "structure",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    /// Graphs for the graph-based checks; `None` uses [`desk_graphs`].
    pub graphs: Option<Vec<(SkewShape, u8)>>,
    /// Longest word for the Knuth check.
    pub max_size: usize,
    pub seed: u64,
    /// Random slide orders per tableau.
    pub orders: usize,
    /// Width of the stair bounding the enumerated skew shapes.
    pub stair: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            graphs: None,
            max_size: 6,
            seed: 0,
            orders: 50,
            stair: 4,
        }
    }
}

/// `B((2,1),4)`, `B((3,1),3)` and `B((3,2),3)`.
pub fn desk_graphs() -> Vec<(SkewShape, u8)> {
    ["2,1", "3,1", "3,2"]
        .iter()
        .zip([4u8, 3, 3])
        .map(|(s, n)| (s.parse().expect("literal shape"), n))
        .collect()
}

/// Every skew shape `λ/μ` with `μ ⊆ λ ⊆ (m, m-1, ..., 1)`.
pub fn skew_shapes_within(m: usize) -> Vec<SkewShape> {
    StrictPartition::all_within(m)
        .into_iter()
        .flat_map(|lambda| {
            lambda
                .subpartitions()
                .into_iter()
                .map(move |mu| SkewShape::new(lambda.clone(), mu).expect("subpartition"))
        })
        .collect()
}

fn build(shape: &SkewShape, n: u8) -> std::result::Result<CrystalGraph, String> {
    CrystalGraph::build(shape, n).map_err(|e| format!("building B({shape}, {n}): {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tableau(shape: &str, filling: &str, n: u8) -> ShiftedTableau {
    ShiftedTableau::parse(shape, filling, n).expect("literal tableau")
}

/// The three worked examples: canonical form and weight, evacuation, and
/// the failure of the braid relation for `σ`.
pub fn check_golden() -> Vec<Check> {
    let canon = (|| {
        let w = PrimedWord::parse("1 2' 2' 1 1 2 3' 2' 2", 3).map_err(|e| e.to_string())?;
        ensure(w.to_string() == "1 2 2' 1 1 2 3 2' 2", || format!("canonical form is {w}"))?;
        let t = tableau("6,4,2/3,1", "1 1 2' / 2 3' 3 / 3 3", 3);
        ensure(t.weight().counts() == [2, 2, 4], || format!("weight is {}", t.weight()))?;
        Ok(format!("{w}; weight {}", t.weight()))
    })();
    let evac = (|| {
        let t = tableau("4,2", "1 1 2' 2 / 2 3", 3);
        let e = crate::involutions::evacuate(&t).map_err(|e| e.to_string())?;
        ensure(e == tableau("4,2", "1 2' 2 3 / 2 3", 3), || format!("evacuation gives {e}"))?;
        Ok(format!("evac({t}) = {e}"))
    })();
    vec![
        Check::from("canonical form and weight", canon),
        Check::from("evacuation example", evac),
        Check::from("braid relation fails for sigma", braid_witness()),
    ]
}

fn braid_witness() -> std::result::Result<String, String> {
    let t = tableau("5,3,1", "1 1 1 1 3' / 2 2 3' / 3", 3);
    let s = |x: &ShiftedTableau, i| sigma(x, i).map_err(|e| e.to_string());
    let a = s(&s(&s(&t, 1)?, 2)?, 1)?;
    let b = s(&s(&s(&t, 2)?, 1)?, 2)?;
    ensure(a == tableau("5,3,1", "1 1 1 2 3 / 2 3' 3 / 3", 3), || format!("s1 s2 s1 gives {a}"))?;
    ensure(b == tableau("5,3,1", "1 1 1 2' 3' / 2 3' 3 / 3", 3), || format!("s2 s1 s2 gives {b}"))?;
    ensure(a != b, || "the two composites agree".into())?;
    Ok(format!("s1s2s1(T) = {a}, s2s1s2(T) = {b}"))
}

/// Cactus relations, plus `s_{1,3}s_{1,4} = s_{1,4}s_{2,4}` when `n = 4`.
pub fn check_cactus(shape: &SkewShape, n: u8) -> Check {
    let name = format!("cactus relations on B({shape}, {n})");
    let outcome = (|| {
        let g = build(shape, n)?;
        let report = verify_cactus(&g).map_err(|e| e.to_string())?;
        if !report.passed() {
            let v = &report.violations[0];
            return Err(format!(
                "{} violations; first: {} {:?} at {}",
                report.violations.len(),
                v.relation,
                v.parameters,
                g.vertex(v.witness)
            ));
        }
        if n == 4 {
            let table = |p, q| g.cactus_table(CactusGenerator { p, q }).map_err(|e| e.to_string());
            let (a, b, c) = (table(1, 3)?, table(1, 4)?, table(2, 4)?);
            if let Some(v) = (0..g.len()).find(|&v| a[b[v]] != b[c[v]]) {
                return Err(format!("s13 s14 != s14 s24 at {}", g.vertex(v)));
            }
        }
        Ok(report.summary())
    })();
    Check::from(&name, outcome)
}

/// Intertwining and weight laws of every `η_{p,q}`, involutivity, and
/// highest to lowest in every component of `B_{p,q}`.
pub fn check_eta_axioms(shape: &SkewShape, n: u8) -> Check {
    let name = format!("eta axioms on B({shape}, {n})");
    let outcome = (|| {
        let g = build(shape, n)?;
        let mut checks = 0usize;
        for gen in CactusGenerator::all(n) {
            let (p, q) = (gen.p, gen.q);
            let theta = IntervalPermutation::new(p, q);
            let eta = g.cactus_table(gen).map_err(|e| e.to_string())?;
            for v in 0..g.len() {
                let t = g.vertex(v);
                let e = g.vertex(eta[v]);
                ensure(eta[eta[v]] == v, || format!("eta_{p},{q} is not an involution at {t}"))?;
                ensure(e.weight() == theta.weight(&t.weight()), || {
                    format!("weight law fails for eta_{p},{q} at {t}")
                })?;
                for i in p..q {
                    let j = theta.index(i);
                    for primed in [false, true] {
                        let lhs = g.raise(eta[v], i, primed);
                        let rhs = g.lower(v, j, primed).map(|u| eta[u]);
                        ensure(lhs == rhs, || format!("E_{i} eta_{p},{q} != eta_{p},{q} F_{j} at {t}"))?;
                        let lhs = g.lower(eta[v], i, primed);
                        let rhs = g.raise(v, j, primed).map(|u| eta[u]);
                        ensure(lhs == rhs, || format!("F_{i} eta_{p},{q} != eta_{p},{q} E_{j} at {t}"))?;
                    }
                    ensure(lengths(e, i).eps == lengths(t, j).phi, || {
                        format!("eps_{i}(eta_{p},{q} T) != phi_{j}(T) at {t}")
                    })?;
                    checks += 1;
                }
            }
            let sub = g.interval_subgraph(p, q).map_err(|e| e.to_string())?;
            for c in sub.components() {
                ensure(c.highest.len() == 1 && c.lowest.len() == 1, || {
                    format!("B_{p},{q} component of {} lacks a unique highest/lowest", g.vertex(c.vertices[0]))
                })?;
                ensure(eta[c.highest[0]] == c.lowest[0], || {
                    format!("eta_{p},{q} does not send {} to the lowest element", g.vertex(c.highest[0]))
                })?;
            }
        }
        Ok(format!("{} vertices, {checks} intertwining checks", g.len()))
    })();
    Check::from(&name, outcome)
}

fn sigma_tables(g: &CrystalGraph) -> std::result::Result<Vec<Vec<usize>>, String> {
    (1..g.n() as usize)
        .map(|i| {
            g.vertices()
                .par_iter()
                .map(|t| {
                    let s = sigma(t, i).map_err(|e| e.to_string())?;
                    g.id_of(&s).ok_or_else(|| format!("sigma_{i}({t}) = {s} left the graph"))
                })
                .collect()
        })
        .collect()
}

/// `σ_i² = id`, far commutation, `wt(σ_i T) = s_i wt(T)`, and `σ_i`
/// preserving components and `i`-strings.
pub fn check_sigma(shape: &SkewShape, n: u8) -> Check {
    let name = format!("sigma properties on B({shape}, {n})");
    let outcome = (|| {
        let g = build(shape, n)?;
        let tables = sigma_tables(&g)?;
        let comp = g.component_ids();
        for (k, s) in tables.iter().enumerate() {
            let i = k + 1;
            let strings = g.interval_subgraph(i, i + 1).map_err(|e| e.to_string())?.component_ids();
            for v in 0..g.len() {
                let t = g.vertex(v);
                ensure(s[s[v]] == v, || format!("sigma_{i}^2 != id at {t}"))?;
                ensure(g.vertex(s[v]).weight() == t.weight().swapped(i), || {
                    format!("wt(sigma_{i} T) != s_{i} wt(T) at {t}")
                })?;
                ensure(comp[s[v]] == comp[v], || format!("sigma_{i} leaves the component of {t}"))?;
                ensure(strings[s[v]] == strings[v], || format!("sigma_{i} leaves the {i}-string of {t}"))?;
            }
            for (l, r) in tables.iter().enumerate().skip(k + 2) {
                let j = l + 1;
                if let Some(v) = (0..g.len()).find(|&v| s[r[v]] != r[s[v]]) {
                    return Err(format!("sigma_{i} sigma_{j} != sigma_{j} sigma_{i} at {}", g.vertex(v)));
                }
            }
        }
        Ok(format!("{} vertices, {} colors", g.len(), tables.len()))
    })();
    Check::from(&name, outcome)
}

/// `σ_i = η_{i,i+1}` pointwise.
pub fn check_sigma_is_restricted_reversal(shape: &SkewShape, n: u8) -> Check {
    let name = format!("sigma_i = eta_(i,i+1) on B({shape}, {n})");
    let outcome = (|| {
        let g = build(shape, n)?;
        let tables = sigma_tables(&g)?;
        for (k, s) in tables.iter().enumerate() {
            let i = k + 1;
            let eta = g.cactus_table(CactusGenerator { p: i, q: i + 1 }).map_err(|e| e.to_string())?;
            if let Some(v) = (0..g.len()).find(|&v| s[v] != eta[v]) {
                return Err(format!("sigma_{i} and eta_{i},{} differ at {}", i + 1, g.vertex(v)));
            }
        }
        Ok(format!("{} vertices", g.len()))
    })();
    Check::from(&name, outcome)
}

/// All reduced words of the longest element of `S_n`.
pub fn reduced_words_of_longest(n: usize) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, word: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == len {
            out.push(word.clone());
            return;
        }
        for i in 1..perm.len() {
            if perm[i - 1] < perm[i] {
                perm.swap(i - 1, i);
                word.push(i);
                go(perm, word, len, out);
                word.pop();
                perm.swap(i - 1, i);
            }
        }
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    go(&mut perm, &mut Vec::new(), n * n.saturating_sub(1) / 2, &mut out);
    out
}

/// For each reduced word of the longest element of `S_n`, the product of
/// the `σ_i` sends the highest weight element of each component of
/// `B(λ/μ, n)` to its lowest, and agrees there with reversal.
pub fn check_long_element(shapes: &[SkewShape], n: u8, words: &[Vec<usize>]) -> Check {
    let name = format!("long element on {} shapes, n = {n}, {} reduced words", shapes.len(), words.len());
    let outcome = shapes
        .par_iter()
        .map(|shape| -> std::result::Result<usize, String> {
            let g = build(shape, n)?;
            let mut count = 0;
            for c in g.components() {
                ensure(c.highest.len() == 1 && c.lowest.len() == 1, || {
                    format!("a component of B({shape}, {n}) lacks a unique highest/lowest")
                })?;
                let high = g.vertex(c.highest[0]);
                let low = g.vertex(c.lowest[0]);
                let rev = reversal(high);
                ensure(&rev == low, || format!("reversal({high}) = {rev} is not lowest {low}"))?;
                for word in words {
                    let mut cur = high.clone();
                    // rightmost factor acts first
                    for &i in word.iter().rev() {
                        cur = sigma(&cur, i).map_err(|e| e.to_string())?;
                    }
                    ensure(&cur == low, || format!("sigma word {word:?} sends {high} to {cur}, not {low}"))?;
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(|counts| format!("{} component checks", counts.iter().sum::<usize>()));
    Check::from(&name, outcome)
}

/// Every canonical word of length `len` over `[n]'`.
pub fn all_words(len: usize, n: u8) -> Vec<PrimedWord> {
    let alphabet: Vec<Letter> = (1..=n).flat_map(|v| [Letter::primed(v), Letter::unprimed(v)]).collect();
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<PrimedWord> = words
        .into_iter()
        .map(|w| PrimedWord::canonicalize(&w, n).expect("letters in range"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Knuth classes found by breadth-first search over Knuth moves coincide
/// with the fibres of rectification, for all words up to `max_len`.
pub fn check_knuth_words(max_len: usize, n: u8) -> Check {
    let name = format!("Knuth classes = rectification classes, words up to length {max_len} over [{n}]'");
    let outcome = (|| {
        let mut total = 0;
        let mut classes = 0;
        for len in 0..=max_len {
            let pool = all_words(len, n);
            let rects: Vec<ShiftedTableau> = pool.par_iter().map(rectify_word).collect();
            let id: HashMap<&PrimedWord, usize> = pool.iter().enumerate().map(|(k, w)| (w, k)).collect();
            let mut seen = vec![false; pool.len()];
            let mut comps = 0;
            for start in 0..pool.len() {
                if seen[start] {
                    continue;
                }
                comps += 1;
                seen[start] = true;
                let mut queue = VecDeque::from([start]);
                while let Some(k) = queue.pop_front() {
                    for nb in knuth_neighbors(&pool[k]) {
                        let j = *id.get(&nb).ok_or_else(|| format!("Knuth move left the word set: {nb}"))?;
                        ensure(rects[j] == rects[k], || {
                            format!("{} and {} are Knuth related but rectify differently", pool[k], nb)
                        })?;
                        if !seen[j] {
                            seen[j] = true;
                            queue.push_back(j);
                        }
                    }
                }
            }
            let distinct: HashSet<&ShiftedTableau> = rects.iter().collect();
            ensure(comps == distinct.len(), || {
                format!("length {len}: {comps} Knuth classes but {} rectifications", distinct.len())
            })?;
            total += pool.len();
            classes += comps;
        }
        Ok(format!("{total} words in {classes} classes"))
    })();
    Check::from(&name, outcome)
}

/// Rectification does not depend on the order of the slides.
pub fn check_random_rectification(shapes: &[SkewShape], max_n: u8, orders: usize, seed: u64) -> Check {
    let name = format!("rectification is order independent ({orders} random orders per tableau)");
    let jobs: Vec<(usize, &SkewShape, u8)> = shapes
        .iter()
        .flat_map(|s| (1..=max_n).map(move |n| (s, n)))
        .enumerate()
        .map(|(k, (s, n))| (k, s, n))
        .collect();
    let outcome = jobs
        .par_iter()
        .map(|&(k, shape, n)| -> std::result::Result<usize, String> {
            let mut rng = StdRng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut count = 0;
            for t in ShiftedTableau::enumerate(shape, n) {
                let (r, _) = rectify(&t);
                for _ in 0..orders {
                    let (s, _) = rectify_random(&t, &mut rng);
                    ensure(s == r, || format!("{t} rectifies to both {r} and {s}"))?;
                }
                count += 1;
            }
            Ok(count)
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(|c| format!("{} tableaux on {} shapes", c.iter().sum::<usize>(), shapes.len()));
    Check::from(&name, outcome)
}

fn strict_partitions_of(size: usize) -> Vec<StrictPartition> {
    StrictPartition::of_size(size, size)
}

/// `f^λ_{μν} = f^{μ∨}_{λ∨ν}` with complements in the stair of width `m`.
pub fn check_lr_symmetry(m: usize) -> Check {
    let name = format!("LR symmetry for shapes inside the stair of width {m}");
    let shapes = skew_shapes_within(m);
    let outcome = shapes
        .par_iter()
        .map(|s| -> std::result::Result<usize, String> {
            let (lambda, mu) = (s.outer(), s.inner());
            let dl = lambda.complement(m).map_err(|e| e.to_string())?;
            let dm = mu.complement(m).map_err(|e| e.to_string())?;
            let mut count = 0;
            for nu in strict_partitions_of(s.size()) {
                let a = lrs_count(lambda, mu, nu.parts()).map_err(|e| e.to_string())?;
                let b = lrs_count(&dm, &dl, nu.parts()).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("f^{lambda}_({mu}),({nu}) = {a} but the dual count is {b}"))?;
                count += 1;
            }
            Ok(count)
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(|c| format!("{} triples on {} shapes", c.iter().sum::<usize>(), shapes.len()));
    Check::from(&name, outcome)
}

/// Components of `B(λ/μ, n)` with highest weight `ν` are counted by `f^λ_{μν}`.
pub fn check_component_counts(shapes: &[SkewShape], n: u8) -> Check {
    let name = format!("component counts = LRS counts on {} shapes, n = {n}", shapes.len());
    let outcome = shapes
        .par_iter()
        .map(|s| -> std::result::Result<usize, String> {
            let g = build(s, n)?;
            let mut by_weight: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for c in g.components() {
                ensure(c.highest.len() == 1, || format!("a component of B({s}, {n}) has no unique highest"))?;
                let wt: Vec<usize> = g.vertex(c.highest[0]).weight().counts().iter().copied().filter(|&x| x > 0).collect();
                *by_weight.entry(wt).or_default() += 1;
            }
            let mut count = 0;
            for nu in strict_partitions_of(s.size()).into_iter().filter(|nu| nu.len() <= n as usize) {
                let f = lrs_count(s.outer(), s.inner(), nu.parts()).map_err(|e| e.to_string())?;
                let got = by_weight.remove(nu.parts()).unwrap_or(0);
                ensure(f == got, || format!("B({s}, {n}): {got} components of highest weight ({nu}), f = {f}"))?;
                count += 1;
            }
            ensure(by_weight.is_empty(), || {
                format!("B({s}, {n}) has highest weights that are not strict: {:?}", by_weight.keys())
            })?;
            Ok(count)
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(|c| format!("{} (shape, weight) pairs", c.iter().sum::<usize>()));
    Check::from(&name, outcome)
}

/// Unique highest and lowest weight element per component, highest
/// elements LRS, and every `i`-string laid out as one of the two
/// arrangements.
pub fn check_structure(shapes: &[SkewShape], n: u8) -> Check {
    let name = format!("component and string structure on {} shapes, n = {n}", shapes.len());
    let outcome = shapes
        .par_iter()
        .map(|s| -> std::result::Result<usize, String> {
            let g = build(s, n)?;
            for c in g.components() {
                ensure(c.highest.len() == 1 && c.lowest.len() == 1, || {
                    format!("component of {} in B({s}, {n}) has {} highest and {} lowest", g.vertex(c.vertices[0]), c.highest.len(), c.lowest.len())
                })?;
                let high = g.vertex(c.highest[0]);
                ensure(is_lrs(high), || format!("highest element {high} is not LRS"))?;
            }
            let mut strings = 0;
            for i in 1..n as usize {
                let mut placed = vec![false; g.len()];
                for v in 0..g.len() {
                    if placed[v] {
                        continue;
                    }
                    let d = classify_string(g.vertex(v), i);
                    d.check().map_err(|e| format!("{i}-string of {} in B({s}, {n}): {e}", g.vertex(v)))?;
                    let members = string_members(g.vertex(v), i);
                    ensure(members.len() == d.len(), || format!("{i}-string of {} is not covered by its chains", g.vertex(v)))?;
                    for m in d.members() {
                        let id = g.id_of(m).ok_or_else(|| format!("{m} is not a vertex"))?;
                        ensure(!placed[id], || format!("{m} lies in two {i}-strings"))?;
                        placed[id] = true;
                    }
                    strings += 1;
                }
            }
            Ok(strings)
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(|c| format!("{} strings", c.iter().sum::<usize>()));
    Check::from(&name, outcome)
}

/// `B(ν, n)` is connected with highest weight element `Y_ν`.
pub fn check_straight_connected(m: usize, n: u8) -> Check {
    let name = format!("straight crystals inside the stair of width {m} are connected, n = {n}");
    let shapes: Vec<StrictPartition> = StrictPartition::all_within(m).into_iter().filter(|nu| nu.len() <= n as usize).collect();
    let outcome = shapes
        .par_iter()
        .map(|nu| -> std::result::Result<(), String> {
            let g = build(&SkewShape::straight(nu.clone()), n)?;
            let comps = g.components();
            ensure(comps.len() == 1, || format!("B({nu}, {n}) has {} components", comps.len()))?;
            let y = yamanouchi(nu, n);
            ensure(comps[0].highest == vec![g.id_of(&y).unwrap_or(usize::MAX)], || {
                format!("highest element of B({nu}, {n}) is not Y_({nu})")
            })
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(|v| format!("{} shapes", v.len()));
    Check::from(&name, outcome)
}

fn graphs(opts: &Options) -> Vec<(SkewShape, u8)> {
    opts.graphs.clone().unwrap_or_else(desk_graphs)
}

pub fn run_suite(suite: Suite, opts: &Options) -> SuiteReport {
    let stair_shapes = || skew_shapes_within(opts.stair);
    let checks = match suite {
        Suite::Golden => check_golden(),
        Suite::Cactus => graphs(opts)
            .iter()
            .flat_map(|(s, n)| [check_cactus(s, *n), check_eta_axioms(s, *n)])
            .collect(),
        Suite::Braid => {
            let mut v = vec![Check::from("braid relation fails for sigma", braid_witness())];
            for (s, n) in graphs(opts) {
                v.push(check_sigma(&s, n));
                v.push(check_sigma_is_restricted_reversal(&s, n));
            }
            for n in [3u8, 4] {
                v.push(check_long_element(&stair_shapes(), n, &reduced_words_of_longest(n as usize)));
            }
            v
        }
        Suite::Knuth => vec![
            check_knuth_words(opts.max_size, 3),
            check_random_rectification(&stair_shapes(), 3, opts.orders, opts.seed),
        ],
        Suite::Symmetry => vec![check_lr_symmetry(opts.stair), check_component_counts(&stair_shapes(), 3)],
        Suite::Structure => {
            let mut v = vec![check_structure(&stair_shapes(), 3)];
            for (s, n) in graphs(opts) {
                v.push(check_structure(&[s], n));
            }
            v.push(check_straight_connected(opts.stair, 3));
            v.push(check_straight_connected(opts.stair, 4));
            v
        }
        Suite::All => {
            return SuiteReport {
                suite: "all".into(),
                checks: [
                    Suite::Golden,
                    Suite::Cactus,
                    Suite::Braid,
                    Suite::Knuth,
                    Suite::Symmetry,
                    Suite::Structure,
                ]
                .iter()
                .flat_map(|&s| run_suite(s, opts).checks)
                .collect(),
            }
        }
    };
    SuiteReport {
        suite: suite.to_string(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words() {
        assert_eq!(reduced_words_of_longest(3), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(reduced_words_of_longest(4).len(), 16);
        assert_eq!(reduced_words_of_longest(1), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn shapes_and_words() {
        assert_eq!(StrictPartition::all_within(2).len(), 4);
        // ∅; (1)/∅,(1); (2)/∅,(1),(2); (2,1)/∅,(1),(2),(2,1)
        assert_eq!(skew_shapes_within(2).len(), 10);
        assert_eq!(all_words(1, 2).len(), 2);
        assert_eq!(all_words(2, 1).len(), 2);
    }

    #[test]
    fn small_checks_pass() {
        for c in check_golden() {
            assert!(c.passed, "{c}");
        }
        let shape: SkewShape = "3,1/1".parse().unwrap();
        for c in [
            check_cactus(&shape, 3),
            check_eta_axioms(&shape, 3),
            check_sigma(&shape, 3),
            check_sigma_is_restricted_reversal(&shape, 3),
            check_long_element(std::slice::from_ref(&shape), 3, &reduced_words_of_longest(3)),
            check_knuth_words(3, 2),
            check_random_rectification(std::slice::from_ref(&shape), 2, 5, 1),
            check_lr_symmetry(3),
            check_component_counts(&skew_shapes_within(3), 3),
            check_structure(&[shape], 3),
            check_straight_connected(3, 3),
        ] {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn suite_names() {
        for s in ["golden", "cactus", "braid", "knuth", "symmetry", "structure", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
