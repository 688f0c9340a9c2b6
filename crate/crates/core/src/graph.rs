//! Crystal graphs `B(λ/μ, n)`: vertices, coloured edges, components,
//! interval subgraphs, cactus action and exports.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::{primed_lower, unprimed_lower};
use crate::error::{Error, Result};
use crate::involutions::{eta_interval, IntervalPermutation};
use crate::jdt::is_lrs;
use crate::shape::{SkewShape, StrictPartition};
use crate::tableau::ShiftedTableau;
use crate::word::{parse_letters, Weight};

/// Default bound on the number of vertices of a graph.
pub const DEFAULT_MAX_VERTICES: usize = 100_000;

/// A lowering edge: `F_color(src) = dst`, or `F'_color(src) = dst` when primed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub color: usize,
    pub primed: bool,
}

#[derive(Debug, Clone)]
pub struct CrystalGraph {
    shape: SkewShape,
    n: u8,
    vertices: Vec<ShiftedTableau>,
    index: HashMap<ShiftedTableau, usize>,
    edges: Vec<Edge>,
    out: Vec<Vec<Edge>>,
    inc: Vec<Vec<Edge>>,
}

impl PartialEq for CrystalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.n == other.n && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for CrystalGraph {}

/// A connected component, with its vertices in graph order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    /// Vertices with no incoming edge. A crystal component has exactly one.
    pub highest: Vec<usize>,
    /// Vertices with no outgoing edge.
    pub lowest: Vec<usize>,
}

impl CrystalGraph {
    pub fn build(shape: &SkewShape, n: u8) -> Result<Self> {
        Self::build_with_cap(shape, n, DEFAULT_MAX_VERTICES)
    }

    pub fn build_with_cap(shape: &SkewShape, n: u8, cap: usize) -> Result<Self> {
        let vertices = ShiftedTableau::enumerate(shape, n);
        if vertices.len() > cap {
            return Err(Error::TooManyVertices {
                count: vertices.len(),
                cap,
            });
        }
        let index: HashMap<ShiftedTableau, usize> =
            vertices.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        let colors = (n as usize).saturating_sub(1);
        let edges: Vec<Edge> = (0..vertices.len() * colors)
            .into_par_iter()
            .flat_map_iter(|job| {
                let (src, color) = (job / colors, job % colors + 1);
                let t = &vertices[src];
                let solid = unprimed_lower(t, color).map(|u| (u, false));
                let dashed = primed_lower(t, color).map(|u| (u, true));
                let index = &index;
                solid.into_iter().chain(dashed).map(move |(u, primed)| Edge {
                    src,
                    dst: index[&u],
                    color,
                    primed,
                })
            })
            .collect();
        Ok(Self::assemble(shape.clone(), n, vertices, index, edges))
    }

    fn assemble(
        shape: SkewShape,
        n: u8,
        vertices: Vec<ShiftedTableau>,
        index: HashMap<ShiftedTableau, usize>,
        mut edges: Vec<Edge>,
    ) -> Self {
        edges.sort();
        let mut out = vec![Vec::new(); vertices.len()];
        let mut inc = vec![Vec::new(); vertices.len()];
        for e in &edges {
            out[e.src].push(*e);
            inc[e.dst].push(*e);
        }
        CrystalGraph {
            shape,
            n,
            vertices,
            index,
            edges,
            out,
            inc,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn vertices(&self) -> &[ShiftedTableau] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: usize) -> &ShiftedTableau {
        &self.vertices[id]
    }

    pub fn id_of(&self, t: &ShiftedTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn out_edges(&self, id: usize) -> &[Edge] {
        &self.out[id]
    }

    pub fn in_edges(&self, id: usize) -> &[Edge] {
        &self.inc[id]
    }

    /// Target of the lowering edge of the given color and kind, if any.
    pub fn lower(&self, id: usize, color: usize, primed: bool) -> Option<usize> {
        self.out[id]
            .iter()
            .find(|e| e.color == color && e.primed == primed)
            .map(|e| e.dst)
    }

    pub fn raise(&self, id: usize, color: usize, primed: bool) -> Option<usize> {
        self.inc[id]
            .iter()
            .find(|e| e.color == color && e.primed == primed)
            .map(|e| e.src)
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                let nbrs = self.out[v].iter().map(|e| e.dst).chain(self.inc[v].iter().map(|e| e.src));
                for u in nbrs {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            let highest = members.iter().copied().filter(|&v| self.inc[v].is_empty()).collect();
            let lowest = members.iter().copied().filter(|&v| self.out[v].is_empty()).collect();
            comps.push(Component {
                vertices: members,
                highest,
                lowest,
            });
        }
        comps
    }

    /// Component id of every vertex, following [`CrystalGraph::components`].
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.len()];
        for (k, c) in self.components().iter().enumerate() {
            for &v in &c.vertices {
                ids[v] = k;
            }
        }
        ids
    }

    /// `B_{p,q}`: the same vertices with only the colors in `[p, q-1]`.
    pub fn interval_subgraph(&self, p: usize, q: usize) -> Result<CrystalGraph> {
        if p < 1 || p >= q || q > self.n as usize {
            return Err(Error::InvalidInterval { p, q, n: self.n });
        }
        let edges = self.edges.iter().copied().filter(|e| (p..q).contains(&e.color)).collect();
        Ok(Self::assemble(
            self.shape.clone(),
            self.n,
            self.vertices.clone(),
            self.index.clone(),
            edges,
        ))
    }

    /// Extends `root ↦ other_root` along matching edges. Succeeds when this
    /// gives a weight-preserving bijection between the two components that
    /// carries edges to edges in both directions.
    pub fn rooted_isomorphism(
        &self,
        root: usize,
        other: &CrystalGraph,
        other_root: usize,
    ) -> std::result::Result<HashMap<usize, usize>, String> {
        let mut map = HashMap::from([(root, other_root)]);
        let mut back = HashMap::from([(other_root, root)]);
        let mut queue = VecDeque::from([(root, other_root)]);
        let key = |e: &Edge| (e.color, e.primed);
        while let Some((u, v)) = queue.pop_front() {
            if self.vertices[u].weight() != other.vertices[v].weight() {
                return Err(format!("weights differ at {} and {}", self.vertices[u], other.vertices[v]));
            }
            let sides = [
                (&self.out[u], &other.out[v], true),
                (&self.inc[u], &other.inc[v], false),
            ];
            for (mine, theirs, forward) in sides {
                if mine.len() != theirs.len() {
                    return Err(format!("degree differs at {}", self.vertices[u]));
                }
                for e in mine {
                    let f = theirs
                        .iter()
                        .find(|f| key(f) == key(e))
                        .ok_or_else(|| format!("edge {:?} at {} has no partner", key(e), self.vertices[u]))?;
                    let (a, b) = if forward { (e.dst, f.dst) } else { (e.src, f.src) };
                    match (map.get(&a), back.get(&b)) {
                        (None, None) => {
                            map.insert(a, b);
                            back.insert(b, a);
                            queue.push_back((a, b));
                        }
                        (Some(&x), Some(&y)) if x == b && y == a => {}
                        _ => return Err(format!("conflicting images for {}", self.vertices[a])),
                    }
                }
            }
        }
        Ok(map)
    }

    /// `s_{p,q}·T = η_{p,q}(T)` for a vertex `T`.
    pub fn cactus_act(&self, gen: CactusGenerator, t: &ShiftedTableau) -> Result<ShiftedTableau> {
        if self.id_of(t).is_none() {
            return Err(Error::NotAVertex);
        }
        eta_interval(t, gen.p, gen.q)
    }

    /// The action of `s_{p,q}` as a permutation of vertex ids.
    pub fn cactus_table(&self, gen: CactusGenerator) -> Result<Vec<usize>> {
        self.vertices
            .par_iter()
            .map(|t| {
                let image = eta_interval(t, gen.p, gen.q)?;
                self.id_of(&image).ok_or(Error::NotAVertex)
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, t) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{}\\n{}\"];", t.reading_word(), t.weight());
        }
        for e in &self.edges {
            if e.primed {
                let _ = writeln!(s, "  v{} -> v{} [label=\"{}'\", style=dashed];", e.src, e.dst, e.color);
            } else {
                let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.src, e.dst, e.color);
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            shape: self.shape.to_string(),
            n: self.n,
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, t)| VertexDoc {
                    id,
                    word: t.reading_word().to_string(),
                    weight: t.weight().counts().to_vec(),
                })
                .collect(),
            edges: self.edges.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("graph documents serialize")
    }

    pub fn from_json(s: &str) -> Result<CrystalGraph> {
        let doc: GraphDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let shape: SkewShape = doc.shape.parse()?;
        let mut vertices = Vec::with_capacity(doc.vertices.len());
        for (k, v) in doc.vertices.iter().enumerate() {
            if v.id != k {
                return Err(Error::Parse(format!("vertex ids must be 0.., found {} at {k}", v.id)));
            }
            let t = ShiftedTableau::from_reading_word(shape.clone(), doc.n, &parse_letters(&v.word)?)?;
            if t.weight() != Weight::new(v.weight.clone()) {
                return Err(Error::Parse(format!("vertex {k} has a wrong weight")));
            }
            vertices.push(t);
        }
        if let Some(e) = doc.edges.iter().find(|e| e.src >= vertices.len() || e.dst >= vertices.len()) {
            return Err(Error::Parse(format!("edge {e:?} points outside the vertex list")));
        }
        let index = vertices.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        Ok(Self::assemble(shape, doc.n, vertices, index, doc.edges))
    }
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: usize,
    word: String,
    weight: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    shape: String,
    n: u8,
    vertices: Vec<VertexDoc>,
    edges: Vec<Edge>,
}

/// `f^λ_{μν}`: the number of LRS tableaux of shape `λ/μ` and weight `ν`.
/// Zero when `ν` is not strict or has the wrong size.
pub fn lrs_count(lambda: &StrictPartition, mu: &StrictPartition, nu: &[usize]) -> Result<usize> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let Ok(nu) = StrictPartition::new(nu.iter().copied().filter(|&x| x > 0).collect()) else {
        return Ok(0);
    };
    if nu.size() != shape.size() {
        return Ok(0);
    }
    if nu.is_empty() {
        return Ok(1);
    }
    let n = nu.len() as u8;
    let wt = Weight::new(nu.parts().to_vec());
    Ok(ShiftedTableau::enumerate(&shape, n)
        .par_iter()
        .filter(|t| t.weight() == wt && is_lrs(t))
        .count())
}

/// A generator `s_{p,q}` of the cactus group `J_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CactusGenerator {
    pub p: usize,
    pub q: usize,
}

impl CactusGenerator {
    pub fn new(p: usize, q: usize, n: u8) -> Result<Self> {
        if p < 1 || p >= q || q > n as usize {
            return Err(Error::InvalidInterval { p, q, n });
        }
        Ok(CactusGenerator { p, q })
    }

    /// Every generator of `J_n`, ordered by `(p, q)`.
    pub fn all(n: u8) -> Vec<CactusGenerator> {
        let n = n as usize;
        (1..=n)
            .flat_map(|p| (p + 1..=n).map(move |q| CactusGenerator { p, q }))
            .collect()
    }

    pub fn permutation(self) -> IntervalPermutation {
        IntervalPermutation::new(self.p, self.q)
    }

    fn contains(self, other: CactusGenerator) -> bool {
        self.p <= other.p && other.q <= self.q
    }

    fn disjoint(self, other: CactusGenerator) -> bool {
        self.q < other.p || other.q < self.p
    }
}

impl std::fmt::Display for CactusGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "s_{{{},{}}}", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// `involution`, `commute` or `conjugate`.
    pub relation: String,
    /// `[p, q]`, or `[p, q, k, l]` for relations between two generators.
    pub parameters: Vec<usize>,
    pub witness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusReport {
    pub shape: String,
    pub n: u8,
    pub vertices: usize,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl CactusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "cactus relations on B({}, {}): {} vertices, {} pointwise checks, {} violations",
            self.shape,
            self.n,
            self.vertices,
            self.checks,
            self.violations.len()
        )
    }
}

/// Checks the defining relations of `J_n` pointwise on every vertex.
pub fn verify_cactus(g: &CrystalGraph) -> Result<CactusReport> {
    let gens = CactusGenerator::all(g.n);
    let tables: HashMap<CactusGenerator, Vec<usize>> = gens
        .iter()
        .map(|&s| Ok((s, g.cactus_table(s)?)))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let mut checks = 0;
    let mut record = |relation: &str, parameters: Vec<usize>, witness: Option<usize>| {
        checks += g.len();
        if let Some(witness) = witness {
            violations.push(Violation {
                relation: relation.into(),
                parameters,
                witness,
            });
        }
    };
    for &s in &gens {
        let a = &tables[&s];
        record("involution", vec![s.p, s.q], (0..g.len()).find(|&v| a[a[v]] != v));
    }
    for &s in &gens {
        for &t in &gens {
            let (a, b) = (&tables[&s], &tables[&t]);
            if s < t && s.disjoint(t) {
                record("commute", vec![s.p, s.q, t.p, t.q], (0..g.len()).find(|&v| a[b[v]] != b[a[v]]));
            }
            if s != t && s.contains(t) {
                let c = &tables[&CactusGenerator {
                    p: s.p + s.q - t.q,
                    q: s.p + s.q - t.p,
                }];
                // s t = c s, composed right to left
                record(
                    "conjugate",
                    vec![s.p, s.q, t.p, t.q],
                    (0..g.len()).find(|&v| a[b[v]] != c[a[v]]),
                );
            }
        }
    }
    Ok(CactusReport {
        shape: g.shape.to_string(),
        n: g.n,
        vertices: g.len(),
        checks,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::eta;
    use crate::jdt::yamanouchi;

    fn graph(shape: &str, n: u8) -> CrystalGraph {
        CrystalGraph::build(&shape.parse().unwrap(), n).unwrap()
    }

    fn p(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = graph("2,1", 2);
        assert_eq!(g.len(), 2);
        assert_eq!(g.edges().len(), 1);
        assert!(g.edges()[0].primed);
        let g = graph("2", 2);
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges().iter().filter(|e| e.primed).count(), 2);
        assert_eq!(g.edges().iter().filter(|e| !e.primed).count(), 2);
        let g = graph("", 3);
        assert_eq!((g.len(), g.edges().len()), (1, 0));
    }

    #[test]
    fn straight_graph_is_connected() {
        let g = graph("2,1", 4);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        let y = yamanouchi(&p("2,1"), 4);
        assert_eq!(comps[0].highest, vec![g.id_of(&y).unwrap()]);
        assert_eq!(comps[0].lowest, vec![g.id_of(&eta(&y)).unwrap()]);
    }

    #[test]
    fn vertex_cap() {
        let shape: SkewShape = "3,1".parse().unwrap();
        assert!(matches!(
            CrystalGraph::build_with_cap(&shape, 3, 5),
            Err(Error::TooManyVertices { cap: 5, .. })
        ));
    }

    #[test]
    fn interval_subgraphs() {
        let g = graph("2,1", 4);
        assert_eq!(g.interval_subgraph(1, 4).unwrap(), g);
        let b23 = g.interval_subgraph(2, 3).unwrap();
        assert!(b23.edges().iter().all(|e| e.color == 2));
        for c in b23.components() {
            assert_eq!((c.highest.len(), c.lowest.len()), (1, 1));
            let strings = crate::crystal::string_members(g.vertex(c.vertices[0]), 2);
            assert_eq!(strings.len(), c.vertices.len());
        }
        assert!(g.interval_subgraph(2, 2).is_err());
        assert!(g.interval_subgraph(1, 5).is_err());
    }

    #[test]
    fn isomorphism_with_straight_crystal() {
        let g = graph("3,1/1", 3);
        for c in g.components() {
            let high = g.vertex(c.highest[0]);
            let (nu, _) = crate::jdt::rectify(high);
            let b = CrystalGraph::build(nu.shape(), 3).unwrap();
            let map = g
                .rooted_isomorphism(c.highest[0], &b, b.id_of(&nu).unwrap())
                .unwrap();
            assert_eq!(map.len(), c.vertices.len());
            assert_eq!(b.len(), c.vertices.len());
        }
        // different shapes never match
        let a = graph("2", 2);
        let b = graph("2,1", 2);
        assert!(a.rooted_isomorphism(0, &b, 0).is_err());
    }

    #[test]
    fn lrs_counts() {
        assert_eq!(lrs_count(&p("2,1"), &p(""), &[2, 1]).unwrap(), 1);
        assert_eq!(lrs_count(&p("3,1"), &p("1"), &[2, 1]).unwrap(), 1);
        assert_eq!(lrs_count(&p("3,1"), &p("1"), &[3]).unwrap(), 1);
        assert_eq!(lrs_count(&p("3,1"), &p("1"), &[1, 1, 1]).unwrap(), 0);
        assert_eq!(lrs_count(&p("3,1"), &p("1"), &[2]).unwrap(), 0);
        assert_eq!(lrs_count(&p("2"), &p("2"), &[]).unwrap(), 1);
        assert!(lrs_count(&p("2"), &p("3"), &[]).is_err());
        for nu in [p("3,1"), p("4"), p("2,1")] {
            assert_eq!(lrs_count(&nu, &p(""), nu.parts()).unwrap(), 1);
        }
    }

    #[test]
    fn cactus_small() {
        let g = graph("2,1", 4);
        let report = verify_cactus(&g).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        // s_{1,3} s_{1,4} = s_{1,4} s_{2,4}
        let s = |p, q| g.cactus_table(CactusGenerator::new(p, q, 4).unwrap()).unwrap();
        let (a, b, c) = (s(1, 3), s(1, 4), s(2, 4));
        for v in 0..g.len() {
            assert_eq!(a[b[v]], b[c[v]]);
        }
        let y = yamanouchi(&p("2,1"), 4);
        let full = CactusGenerator::new(1, 4, 4).unwrap();
        assert_eq!(g.cactus_act(full, &y).unwrap(), eta(&y));
        let stranger = yamanouchi(&p("2"), 4);
        assert!(matches!(g.cactus_act(full, &stranger), Err(Error::NotAVertex)));
        assert!(CactusGenerator::new(3, 3, 4).is_err());
        assert_eq!(CactusGenerator::all(4).len(), 6);
    }

    #[test]
    fn exports() {
        let g = graph("2,1", 2);
        let dot = g.to_dot();
        assert_eq!(dot.matches("style=dashed").count(), 1);
        assert!(dot.contains("label=\"2 1 1\\n(2,1)\""));
        assert!(dot.contains("label=\"1'\""));
        let g = graph("3,1/1", 3);
        let json = g.to_json();
        assert_eq!(CrystalGraph::from_json(&json).unwrap(), g);
        assert_eq!(graph("3,1/1", 3).to_json(), json);
        assert_eq!(graph("3,1/1", 3).to_dot(), g.to_dot());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["vertices"][0]["id"], 0);
        assert!(v["edges"][0]["primed"].is_boolean());
        assert!(CrystalGraph::from_json("{}").is_err());
    }
}
