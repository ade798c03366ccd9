//! Inputs shared by the benchmarks in `benches/`.

use kdecomp::{Graph, Vertex, VertexSet};

/// Circulant graph on `n` vertices joining `i` and `i ± o` for each offset `o`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let edges = (0..n).flat_map(|i| offsets.iter().map(move |&o| (i as Vertex, ((i + o) % n) as Vertex)));
    Graph::from_edges(VertexSet::range(n).expect("at most 64 vertices"), edges.filter(|(a, b)| a != b))
        .expect("vertices in range")
}
