use std::collections::HashMap;

use super::GroebnerBasis;
use crate::pathalg::Path;

/// A chain `[w1|...|wk]`, listed in written order.
pub type Chain = Vec<Path>;

/// The Ufnarovskii graph of a reduced Gröbner basis. Vertices are the trivial
/// paths, the arrows, and the proper nontrivial written suffixes of tips.
#[derive(Clone, Debug)]
pub struct UfGraph {
    pub vertices: Vec<Path>,
    /// `edges[i]` lists the targets `j` of edges `vertices[i] -> vertices[j]`.
    pub edges: Vec<Vec<usize>>,
}

impl UfGraph {
    pub fn build(g: &GroebnerBasis) -> UfGraph {
        let quiver = g.quiver();
        let mut vertices: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
        vertices.extend((0..quiver.arrow_count()).map(|a| quiver.arrow_path(a)));
        for tip in g.tips() {
            for k in 1..tip.len() {
                vertices.push(tip.slice(0, k, quiver));
            }
        }
        vertices.sort();
        vertices.dedup();
        let index: HashMap<Path, usize> = vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut edges = vec![Vec::new(); vertices.len()];
        for (i, u) in vertices.iter().enumerate() {
            if u.is_trivial() {
                for a in quiver.arrows_into(u.start()) {
                    edges[i].push(index[&quiver.arrow_path(a)]);
                }
                continue;
            }
            for (j, v) in vertices.iter().enumerate() {
                if v.is_trivial() {
                    continue;
                }
                let Some(uv) = u.compose(v) else { continue };
                // uv must contain a tip, and its longest proper written prefix must not.
                if g.is_nontip(&uv) {
                    continue;
                }
                let prefix = uv.slice(1, uv.len(), quiver);
                if g.is_nontip(&prefix) {
                    edges[i].push(j);
                }
            }
        }
        UfGraph { vertices, edges }
    }
}

/// Chain sets `W^(-1), W^(0), ..., W^(n)`; entry `i` of the result is
/// `W^(i-1)`. `W^(-1)` lists each vertex as a one-element chain.
pub fn uf_chains(g: &GroebnerBasis, n: usize) -> Vec<Vec<Chain>> {
    let graph = UfGraph::build(g);
    let vcount = g.quiver().vertex_count();
    let mut out: Vec<Vec<Chain>> = vec![(0..vcount).map(|v| vec![Path::trivial(v)]).collect()];
    // Frontier holds (last graph vertex, chain) pairs for the current degree.
    let mut frontier: Vec<(usize, Chain)> = Vec::new();
    for (i, p) in graph.vertices.iter().enumerate() {
        if p.is_trivial() {
            for &j in &graph.edges[i] {
                frontier.push((j, vec![graph.vertices[j].clone()]));
            }
        }
    }
    for _ in 0..=n {
        frontier.sort_by(|a, b| a.1.cmp(&b.1));
        out.push(frontier.iter().map(|(_, c)| c.clone()).collect());
        let mut next = Vec::new();
        for (last, chain) in &frontier {
            for &j in &graph.edges[*last] {
                let mut c = chain.clone();
                c.push(graph.vertices[j].clone());
                next.push((j, c));
            }
        }
        frontier = next;
    }
    out
}
