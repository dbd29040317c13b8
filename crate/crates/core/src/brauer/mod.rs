//! Brauer graphs, their quivers and relations, and the associated graded
//! algebra.

mod parse;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::groebner::{complete, GroebnerBasis};
use crate::pathalg::{is_identifier, FreeElement, Path, Quiver};

pub use parse::parse_brauer;
pub use report::{invariant_report, BgaReport, Check, CheckStatus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerVertex {
    pub name: String,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerEdge {
    pub name: String,
    pub ends: [usize; 2],
}

impl BrauerEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// End `side` (0 or 1) of edge `edge`; side `s` attaches to `ends[s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: usize,
    pub side: u8,
}

/// A connected graph with vertex multiplicities and a cyclic order of the
/// half-edges at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerGraph {
    vertices: Vec<BrauerVertex>,
    edges: Vec<BrauerEdge>,
    cyclic: Vec<Vec<HalfEdge>>,
}

impl BrauerGraph {
    /// Validates and builds a graph. `cyclic[v]` may be empty when `v` has a
    /// single half-edge.
    pub fn new(vertices: Vec<BrauerVertex>, edges: Vec<BrauerEdge>, mut cyclic: Vec<Vec<HalfEdge>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidBrauerGraph(m));
        if edges.is_empty() {
            return bad("a Brauer graph needs at least one edge".into());
        }
        if cyclic.len() != vertices.len() {
            return bad("one cyclic order per vertex is required".into());
        }
        let mut names = std::collections::HashSet::new();
        for v in &vertices {
            if !is_identifier(&v.name) {
                return bad(format!("`{}` is not a valid vertex name", v.name));
            }
            if v.mult == 0 {
                return bad(format!("vertex `{}` has multiplicity 0", v.name));
            }
            if !names.insert(v.name.as_str()) {
                return bad(format!("duplicate name `{}`", v.name));
            }
        }
        for e in &edges {
            if !is_identifier(&e.name) && !e.name.bytes().all(|b| b.is_ascii_digit()) || e.name.is_empty() {
                return bad(format!("`{}` is not a valid edge name", e.name));
            }
            if !names.insert(e.name.as_str()) {
                return bad(format!("duplicate name `{}`", e.name));
            }
            if e.ends.iter().any(|&v| v >= vertices.len()) {
                return bad(format!("edge `{}` has an undeclared endpoint", e.name));
            }
        }
        let mut at: Vec<Vec<HalfEdge>> = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            for side in 0..2u8 {
                at[e.ends[side as usize]].push(HalfEdge { edge: i, side });
            }
        }
        for (v, order) in cyclic.iter_mut().enumerate() {
            if order.is_empty() && at[v].len() == 1 {
                order.push(at[v][0]);
            }
            let mut got = order.clone();
            got.sort();
            let mut want = at[v].clone();
            want.sort();
            if got != want {
                return bad(format!(
                    "the cyclic order at `{}` must list each of its half-edges exactly once",
                    vertices[v].name
                ));
            }
        }
        let g = BrauerGraph { vertices, edges, cyclic };
        if g.components(|_| true) != 1 {
            return bad("the graph is not connected".into());
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[BrauerVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[BrauerEdge] {
        &self.edges
    }

    pub fn cyclic_order(&self, v: usize) -> &[HalfEdge] {
        &self.cyclic[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.cyclic[v].len()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(BrauerEdge::is_loop)
    }

    /// `m(v) val(v) = 1`: the vertex contributes no arrows.
    pub fn is_truncated(&self, v: usize) -> bool {
        self.vertices[v].mult as usize * self.valency(v) == 1
    }

    /// A single edge with both multiplicities 1; its algebra is the field.
    pub fn is_single_trivial_edge(&self) -> bool {
        self.edges.len() == 1 && self.vertices.iter().all(|v| v.mult == 1) && !self.edges[0].is_loop()
    }

    /// Two vertices of multiplicity 1 joined by two edges (the trivial
    /// extension of the Kronecker algebra).
    pub fn is_simple_double_edge(&self) -> bool {
        self.vertices.len() == 2
            && self.edges.len() == 2
            && self.vertices.iter().all(|v| v.mult == 1)
            && self.edges.iter().all(|e| !e.is_loop())
    }

    fn other_end(&self, h: HalfEdge) -> usize {
        self.edges[h.edge].ends[1 - h.side as usize]
    }

    pub fn graded_degree(&self, v: usize) -> u32 {
        if self.is_single_trivial_edge() {
            return 1;
        }
        let own = self.vertices[v].mult * self.valency(v) as u32;
        if own > 1 {
            return own;
        }
        let w = self.other_end(self.cyclic[v][0]);
        self.vertices[w].mult * self.valency(w) as u32
    }

    pub fn is_balanced(&self, e: usize) -> bool {
        let [a, b] = self.edges[e].ends;
        self.graded_degree(a) == self.graded_degree(b)
    }

    fn components(&self, keep: impl Fn(usize) -> bool) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, e) in self.edges.iter().enumerate() {
            if keep(i) {
                let (a, b) = (find(&mut parent, e.ends[0]), find(&mut parent, e.ends[1]));
                parent[a] = b;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// `|Gamma_G|`: components left after splitting every unbalanced edge.
    pub fn balanced_components(&self) -> usize {
        self.components(|e| self.is_balanced(e))
    }

    /// Renders the graph in the text format read by [`parse_brauer`].
    pub fn to_text(&self, field: FieldSpec) -> String {
        let mut out = format!("field {field}\n");
        for v in &self.vertices {
            out += &format!("vertex {} mult {}\n", v.name, v.mult);
        }
        for e in &self.edges {
            out += &format!(
                "edge {} {} {}\n",
                e.name, self.vertices[e.ends[0]].name, self.vertices[e.ends[1]].name
            );
        }
        for (v, order) in self.cyclic.iter().enumerate() {
            if order.len() < 2 {
                continue;
            }
            let items: Vec<String> = order.iter().map(|h| self.half_edge_name(*h)).collect();
            out += &format!("cyclic {}: {}\n", self.vertices[v].name, items.join(" "));
        }
        out
    }

    fn half_edge_name(&self, h: HalfEdge) -> String {
        let e = &self.edges[h.edge];
        if e.is_loop() {
            format!("{}.{}", e.name, h.side + 1)
        } else {
            e.name.clone()
        }
    }
}

impl fmt::Display for BrauerGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, {} edges", self.vertices.len(), self.edges.len())
    }
}

/// The oriented cycle of `Q_G` given by the cyclic order at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCycle {
    pub vertex: usize,
    /// Arrows in traversal order; arrow `k` leaves the edge of half-edge `k`.
    pub arrows: Vec<usize>,
}

impl SpecialCycle {
    /// `C_v(alpha)^power` where `alpha = arrows[k]`.
    pub fn power_from(&self, k: usize, power: usize, quiver: &Quiver) -> Path {
        let n = self.arrows.len();
        let word: Vec<usize> = (0..n * power).map(|i| self.arrows[(k + i) % n]).collect();
        quiver.path(&word).expect("special cycles compose")
    }

    pub fn next(&self, k: usize) -> usize {
        (k + 1) % self.arrows.len()
    }
}

/// The quiver `Q_G` together with the special cycles and relations.
#[derive(Clone, Debug)]
pub struct BrauerQuiver {
    pub quiver: Arc<Quiver>,
    pub cycles: Vec<SpecialCycle>,
    /// Special cycle and position of each arrow.
    pub arrow_place: Vec<(usize, usize)>,
}

pub fn build_quiver_and_cycles(g: &BrauerGraph) -> BrauerQuiver {
    let mut q = Quiver::new();
    for e in &g.edges {
        q.add_vertex(&e.name).expect("edge names are valid vertex names");
    }
    let mut cycles = Vec::new();
    let mut arrow_place = Vec::new();
    for (v, vert) in g.vertices.iter().enumerate() {
        if g.is_truncated(v) {
            continue;
        }
        let order = &g.cyclic[v];
        let n = order.len();
        let mut arrows = Vec::new();
        for k in 0..n {
            let (s, t) = (order[k].edge, order[(k + 1) % n].edge);
            let a = q
                .add_arrow(&format!("{}:{}", vert.name, k), s, t)
                .expect("arrow names are unique");
            arrow_place.push((cycles.len(), k));
            arrows.push(a);
        }
        cycles.push(SpecialCycle { vertex: v, arrows });
    }
    BrauerQuiver {
        quiver: Arc::new(q),
        cycles,
        arrow_place,
    }
}

/// Relations of types I, II, III.
#[derive(Clone, Debug)]
pub struct BrauerRelations {
    pub r1: Vec<FreeElement>,
    pub r2: Vec<FreeElement>,
    pub r3: Vec<FreeElement>,
}

impl BrauerRelations {
    pub fn all(&self) -> Vec<FreeElement> {
        self.r1.iter().chain(&self.r2).chain(&self.r3).cloned().collect()
    }
}

impl BrauerQuiver {
    /// Special `i`-cycles, as `(cycle, start position)`, grouped by the quiver
    /// vertex `i` they start at.
    fn starts(&self) -> BTreeMap<usize, Vec<(usize, usize)>> {
        let mut out: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, cycle) in self.cycles.iter().enumerate() {
            for (k, &a) in cycle.arrows.iter().enumerate() {
                out.entry(self.quiver.arrow(a).source).or_default().push((c, k));
            }
        }
        out
    }

    /// Whether `beta alpha` (alpha first) is a subpath of a special cycle power.
    pub fn consecutive(&self, alpha: usize, beta: usize) -> bool {
        let (c, k) = self.arrow_place[alpha];
        self.cycles[c].arrows[self.cycles[c].next(k)] == beta
    }

    /// Whether `beta alpha` is a type III relation.
    pub fn is_type_three(&self, alpha: usize, beta: usize) -> bool {
        self.quiver.arrow(alpha).target == self.quiver.arrow(beta).source && !self.consecutive(alpha, beta)
    }

    fn cycle_power(&self, g: &BrauerGraph, c: usize, k: usize) -> Path {
        let cycle = &self.cycles[c];
        cycle.power_from(k, g.vertices[cycle.vertex].mult as usize, &self.quiver)
    }

    /// Type I relations as pairs of paths `(p, q)` standing for `p - q`.
    fn type_one_pairs(&self, g: &BrauerGraph) -> Vec<(Path, Path)> {
        let mut out = Vec::new();
        for starts in self.starts().values() {
            for i in 0..starts.len() {
                for j in i + 1..starts.len() {
                    let p = self.cycle_power(g, starts[i].0, starts[i].1);
                    let q = self.cycle_power(g, starts[j].0, starts[j].1);
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn relations(&self, g: &BrauerGraph, field: FieldSpec) -> BrauerRelations {
        let r1 = self
            .type_one_pairs(g)
            .into_iter()
            .map(|(p, q)| FreeElement::from_path(field, p).sub(&FreeElement::from_path(field, q)))
            .collect();
        let r2 = self.type_two(g, field);
        let r3 = self.type_three(field);
        BrauerRelations { r1, r2, r3 }
    }

    fn type_two(&self, g: &BrauerGraph, field: FieldSpec) -> Vec<FreeElement> {
        let mut out = Vec::new();
        for (c, cycle) in self.cycles.iter().enumerate() {
            for k in 0..cycle.arrows.len() {
                let p = self
                    .cycle_power(g, c, k)
                    .then_arrow(cycle.arrows[k], &self.quiver)
                    .expect("the cycle returns to its start");
                out.push(FreeElement::from_path(field, p));
            }
        }
        out
    }

    fn type_three(&self, field: FieldSpec) -> Vec<FreeElement> {
        let n = self.quiver.arrow_count();
        let mut out = Vec::new();
        for alpha in 0..n {
            for beta in 0..n {
                if self.is_type_three(alpha, beta) {
                    let p = self.quiver.path(&[alpha, beta]).expect("composable");
                    out.push(FreeElement::from_path(field, p));
                }
            }
        }
        out
    }

    /// Relations of `gr(A)`: each type I relation `p - q` becomes itself when
    /// both sides have equal length, and otherwise its shorter side.
    pub fn gr_relations(&self, g: &BrauerGraph, field: FieldSpec) -> BrauerRelations {
        let r1 = self
            .type_one_pairs(g)
            .into_iter()
            .map(|(p, q)| match p.len().cmp(&q.len()) {
                std::cmp::Ordering::Equal => FreeElement::from_path(field, p).sub(&FreeElement::from_path(field, q)),
                std::cmp::Ordering::Greater => FreeElement::from_path(field, q),
                std::cmp::Ordering::Less => FreeElement::from_path(field, p),
            })
            .collect();
        BrauerRelations {
            r1,
            r2: self.type_two(g, field),
            r3: self.type_three(field),
        }
    }

    /// Unordered pairs of arrows `{alpha, beta}` from special cycles at
    /// distinct vertices, running in opposite directions between the same
    /// two quiver vertices, with `alpha beta` and `beta alpha` both of type III.
    pub fn count_s2(&self) -> usize {
        let n = self.quiver.arrow_count();
        let mut count = 0;
        for alpha in 0..n {
            for beta in alpha + 1..n {
                let (ca, cb) = (self.arrow_place[alpha].0, self.arrow_place[beta].0);
                if self.cycles[ca].vertex == self.cycles[cb].vertex {
                    continue;
                }
                let (a, b) = (self.quiver.arrow(alpha), self.quiver.arrow(beta));
                if a.source == b.target
                    && a.target == b.source
                    && self.is_type_three(alpha, beta)
                    && self.is_type_three(beta, alpha)
                {
                    count += 1;
                }
            }
        }
        count
    }
}

/// `|S_2|` of a Brauer graph.
pub fn count_s2(g: &BrauerGraph) -> usize {
    build_quiver_and_cycles(g).count_s2()
}

/// Completes the relations of the Brauer graph algebra (or of `gr(A)` when
/// `graded` is set).
pub fn brauer_groebner(g: &BrauerGraph, field: FieldSpec, graded: bool, max_tip_length: usize) -> Result<GroebnerBasis> {
    let bq = build_quiver_and_cycles(g);
    let rels = if graded {
        bq.gr_relations(g, field)
    } else {
        bq.relations(g, field)
    };
    complete(bq.quiver.clone(), field, &rels.all(), max_tip_length)
}
