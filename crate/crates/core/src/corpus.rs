//! Seeded random Brauer graphs for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brauer::{BrauerEdge, BrauerGraph, BrauerVertex, HalfEdge};

#[derive(Clone, Copy, Debug)]
pub struct CorpusOptions {
    pub count: usize,
    pub seed: u64,
    pub max_edges: usize,
    pub max_mult: u32,
    /// Upper bound on `dim A`; larger graphs are redrawn.
    pub max_dim: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            count: 24,
            seed: 2024,
            max_edges: 6,
            max_mult: 3,
            max_dim: 36,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Tree,
    WithLoop,
    WithMultiEdge,
    Any,
}

/// `dim A = 2|E| + sum_v val(v) (m(v) val(v) - 1)` for a Brauer graph algebra.
pub fn brauer_dimension(g: &BrauerGraph) -> usize {
    let e = g.edges().len();
    2 * e
        + (0..g.vertices().len())
            .map(|v| {
                let val = g.valency(v);
                val * (g.vertices()[v].mult as usize * val - 1)
            })
            .sum::<usize>()
}

fn draw(rng: &mut ChaCha8Rng, shape: Shape, opts: &CorpusOptions) -> Option<BrauerGraph> {
    let edges_n = rng.gen_range(1..=opts.max_edges);
    let (verts_n, extra) = match shape {
        Shape::Tree => (edges_n + 1, 0),
        Shape::WithLoop | Shape::WithMultiEdge => {
            let v = rng.gen_range(1..=edges_n);
            (v, edges_n + 1 - v)
        }
        Shape::Any => {
            let v = rng.gen_range(1..=edges_n + 1);
            (v, edges_n + 1 - v)
        }
    };
    let vertices: Vec<BrauerVertex> = (0..verts_n)
        .map(|i| BrauerVertex {
            name: format!("v{i}"),
            mult: rng.gen_range(1..=opts.max_mult),
        })
        .collect();
    let mut ends: Vec<[usize; 2]> = (1..verts_n).map(|i| [rng.gen_range(0..i), i]).collect();
    for k in 0..extra {
        let a = rng.gen_range(0..verts_n);
        let b = match (shape, k) {
            (Shape::WithLoop, 0) => a,
            (Shape::WithMultiEdge, 0) if !ends.is_empty() => {
                let e = ends[rng.gen_range(0..ends.len())];
                ends.push(e);
                continue;
            }
            _ => rng.gen_range(0..verts_n),
        };
        ends.push([a, b]);
    }
    let edges: Vec<BrauerEdge> = ends
        .iter()
        .enumerate()
        .map(|(i, &ends)| BrauerEdge {
            name: format!("e{i}"),
            ends,
        })
        .collect();
    let mut cyclic: Vec<Vec<HalfEdge>> = vec![Vec::new(); verts_n];
    for (i, e) in edges.iter().enumerate() {
        for side in 0..2u8 {
            cyclic[e.ends[side as usize]].push(HalfEdge { edge: i, side });
        }
    }
    for order in &mut cyclic {
        order.shuffle(rng);
    }
    let g = BrauerGraph::new(vertices, edges, cyclic).ok()?;
    let ok = match shape {
        Shape::WithLoop => g.has_loops(),
        Shape::WithMultiEdge => has_multi_edge(&g),
        _ => true,
    };
    (ok && !g.is_single_trivial_edge() && brauer_dimension(&g) <= opts.max_dim).then_some(g)
}

pub fn has_multi_edge(g: &BrauerGraph) -> bool {
    let mut seen = std::collections::HashSet::new();
    g.edges().iter().any(|e| {
        let mut k = e.ends;
        k.sort();
        !seen.insert(k)
    })
}

/// A deterministic list of connected Brauer graphs cycling through trees,
/// graphs with a loop, graphs with a multiple edge, and unconstrained draws.
/// The single edge with both multiplicities 1 is never produced.
pub fn random_corpus(opts: &CorpusOptions) -> Vec<BrauerGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let shapes = [Shape::Tree, Shape::WithLoop, Shape::WithMultiEdge, Shape::Any];
    (0..opts.count)
        .map(|i| {
            let shape = shapes[i % shapes.len()];
            loop {
                if let Some(g) = draw(&mut rng, shape, opts) {
                    break g;
                }
            }
        })
        .collect()
}
