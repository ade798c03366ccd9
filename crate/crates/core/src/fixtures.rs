//! Small named complexes and a compact digit notation for writing them.
//!
//! In the digit notation every character `0`-`9` is one vertex, so `"123 134"`
//! is the complex with facets `{1,2,3}` and `{1,3,4}`.

use crate::complex::Complex;
use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet};

/// Parses one digit-string face, e.g. `"1245"`.
pub fn face(digits: &str) -> VertexSet {
    digits.chars().map(|c| c.to_digit(10).unwrap_or_else(|| panic!("bad vertex digit {c:?}")) as Vertex).collect()
}

/// Parses whitespace-separated digit-string faces, keeping their order.
pub fn facets(text: &str) -> Vec<VertexSet> {
    text.split_whitespace().map(face).collect()
}

/// Complex whose ground set equals its vertex set. Panics on invalid input.
pub fn complex(text: &str) -> Complex {
    Complex::from_facets(facets(text)).expect("fixture complex")
}

/// Graph on the digit vertices of `vertices` with digit-pair edges.
pub fn graph(vertices: &str, edges: &str) -> Graph {
    let mut g = Graph::new(face(vertices));
    for e in facets(edges) {
        let (a, b) = (e.min().unwrap(), e.max().unwrap());
        g.add_edge(a, b);
    }
    g
}

/// The 2-dimensional complex on six vertices with ten facets that is
/// shellable and 1-decomposable but not vertex decomposable.
pub fn v6f10_6() -> Complex {
    complex("123 124 125 134 136 245 256 346 356 456")
}

/// Complex used to illustrate the deletion-first ordering (shedding face 45).
pub fn ordering_example() -> Complex {
    complex("123 234 134 135 145 245")
}

/// Complex used to illustrate skeleta of deletion and link (shedding face 5).
pub fn skeleton_example() -> Complex {
    complex("123 134 145 345")
}

/// Input of the two-dimensional extension-to-full illustration.
pub fn full_2d_example() -> Complex {
    complex("124 145 123 345")
}

/// Facets that illustration adds, in its stated order.
pub fn full_2d_example_added() -> Vec<VertexSet> {
    facets("245 234 134 135")
}

/// Three-dimensional input of the coned-closure illustration (shedding face 23, cone vertex 8).
pub fn cocl_example() -> Complex {
    complex("1234 1245 1345 2345 1246 1256 1237 1247 1347 3457")
}

/// Coned closure of the deletion of 23 from [`cocl_example`] (35 facets).
pub fn cocl_example_deletion_closure() -> Vec<VertexSet> {
    facets(
        "1245 1246 1247 1248 1256 1257 1258 1268 1278 1345 1347 1348 \
         1357 1358 1378 1456 1457 1458 1468 1478 1568 1578 \
         2456 2457 2458 2468 2478 2568 2578 3457 3458 3478 \
         3578 4568 4578",
    )
}

/// The star facets through 23 of the coned closure (10 facets).
pub fn cocl_example_star() -> Vec<VertexSet> {
    facets("1234 2345 1237 1238 2348 2358 2378 1235 2347 2357")
}

/// Fully coned complex with respect to `{8}` (45 facets) whose skeleton misses 67.
pub fn missing_edge_example() -> Complex {
    complex(
        "1234 1235 1237 1238 1245 1246 1247 1248 1256 1257 1258 1268 1278 \
         1345 1347 1348 1357 1358 1378 1456 1457 1458 1468 1478 1568 1578 \
         2345 2347 2348 2357 2358 2378 2456 2457 2458 2468 2478 2568 2578 \
         3457 3458 3478 3578 4568 4578",
    )
}

/// Facets added when the edge 67 is inserted into [`missing_edge_example`].
pub fn missing_edge_added() -> Vec<VertexSet> {
    facets("1267 1467 1567 1678 2467 2567 2678 4567 4678 5678")
}

/// The d-skeleton of the simplex on `vertices`.
pub fn simplex_skeleton(vertices: VertexSet, d: usize) -> Complex {
    Complex::from_sorted(vertices, vertices.subsets_of_size(d + 1).collect())
}
