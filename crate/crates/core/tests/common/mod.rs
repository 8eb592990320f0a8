#![allow(dead_code)]

use lpa_core::{Graph, Path, VertexId, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn graph_from(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut b = Graph::builder();
    for i in 0..n {
        b.vertex(&format!("v{i}")).unwrap();
    }
    for (j, &(s, r)) in edges.iter().enumerate() {
        b.edge(&format!("e{j}"), &format!("v{s}"), &format!("v{r}")).unwrap();
    }
    b.build()
}

pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    graph_from(n, &edges)
}

pub fn random_graphs(seed: u64, count: usize, max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng, max_vertices, max_edges)).collect()
}

/// Every multigraph on `1..=max_vertices` vertices whose edge list is a
/// sorted multiset of at most `max_edges` ordered pairs.
pub fn all_small_graphs(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    fn extend(n: usize, left: usize, from: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        out.push(graph_from(n, acc));
        if left == 0 {
            return;
        }
        for k in from..n * n {
            acc.push((k / n, k % n));
            extend(n, left - 1, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        extend(n, max_edges, 0, &mut Vec::new(), &mut out);
    }
    out
}

pub fn subsets(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let vs: Vec<VertexId> = g.vertices().collect();
    (0u32..(1 << n)).map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).map(|i| vs[i]).collect()).collect()
}

/// All paths of length exactly `len`, by explicit extension.
pub fn paths_of_len(g: &Graph, len: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = g.vertices().map(Path::vertex).collect();
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|p| {
                g.edges()
                    .filter(|&e| g.source(e) == p.range())
                    .map(|e| p.concat(&Path::edge(g, e)).unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    layer
}

pub fn paths_up_to(g: &Graph, max_len: usize) -> Vec<Path> {
    (0..=max_len).flat_map(|l| paths_of_len(g, l)).collect()
}

/// Reachability by path enumeration up to `|V|` edges.
pub fn brute_reaches(g: &Graph, from: VertexId, to: &VertexSet) -> bool {
    paths_up_to(g, g.vertex_count()).iter().any(|p| p.source() == from && to.contains(p.range()))
}

pub fn brute_is_hereditary(g: &Graph, w: &VertexSet) -> bool {
    g.edges().all(|e| !w.contains(g.source(e)) || w.contains(g.range(e)))
}

pub fn brute_perp(g: &Graph, w: &VertexSet) -> VertexSet {
    g.vertices().filter(|&v| !brute_reaches(g, v, w)).collect()
}

pub fn is_arrival(g: &Graph, p: &Path, w: &VertexSet) -> bool {
    w.contains(p.range()) && p.edges().iter().all(|&e| !w.contains(g.source(e)))
}

/// Suffixes of arrival paths arrive too, so `Arr(W)` is infinite iff an
/// arrival path of length `|V|` exists (its sources repeat a vertex).
pub fn brute_is_finitary(g: &Graph, w: &VertexSet) -> bool {
    !paths_of_len(g, g.vertex_count()).iter().any(|p| is_arrival(g, p, w))
}

pub fn brute_minimal_sets(g: &Graph) -> Vec<VertexSet> {
    let hereditary: Vec<VertexSet> =
        subsets(g).into_iter().filter(|w| !w.is_empty() && brute_is_hereditary(g, w)).collect();
    let mut minimal: Vec<VertexSet> =
        hereditary.iter().filter(|w| !hereditary.iter().any(|u| u != *w && u.is_subset(w))).cloned().collect();
    minimal.sort_by_key(|s| s.first());
    minimal
}
