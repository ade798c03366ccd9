//! Graphs on the vertex universe and the clique machinery built on them.

use std::fmt;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

/// A simple undirected graph; isolated vertices are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    adj: [VertexSet; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `vertices`.
    pub fn new(vertices: VertexSet) -> Self {
        Graph { vertices, adj: [VertexSet::EMPTY; MAX_VERTICES] }
    }

    pub fn complete(vertices: VertexSet) -> Self {
        let mut g = Graph::new(vertices);
        for v in vertices {
            g.adj[v as usize] = vertices.without(v);
        }
        g
    }

    pub fn from_edges<I>(vertices: VertexSet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(vertices);
        for (a, b) in edges {
            if a == b {
                return Err(Error::NotApplicable(format!("loop edge at {a}")));
            }
            for v in [a, b] {
                if !vertices.contains(v) {
                    return Err(Error::OutsideGround { vertex: v });
                }
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v as usize]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a as usize].contains(b)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.vertices = self.vertices.with(v);
    }

    /// Adds the edge and both endpoints.
    pub fn add_edge(&mut self, a: Vertex, b: Vertex) {
        debug_assert_ne!(a, b);
        self.vertices = self.vertices.with(a).with(b);
        self.adj[a as usize] = self.adj[a as usize].with(b);
        self.adj[b as usize] = self.adj[b as usize].with(a);
    }

    pub fn remove_edge(&mut self, a: Vertex, b: Vertex) {
        self.adj[a as usize] = self.adj[a as usize].without(b);
        self.adj[b as usize] = self.adj[b as usize].without(a);
    }

    /// Sorted list of edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in self.vertices {
            for b in self.adj[a as usize] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Edges as two-element vertex sets, lexicographically sorted.
    pub fn edge_sets(&self) -> Vec<VertexSet> {
        self.edges().into_iter().map(|(a, b)| VertexSet::pair(a, b)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.adj[v as usize].len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.vertices.iter().all(|v| self.adj[v as usize] == self.vertices.without(v))
    }

    /// Induced subgraph on `keep ∩ vertices`.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let vertices = self.vertices.intersection(keep);
        let mut g = Graph::new(vertices);
        for v in vertices {
            g.adj[v as usize] = self.adj[v as usize].intersection(vertices);
        }
        g
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        self.induced(self.vertices.without(v))
    }

    /// Vertices adjacent to every member of `set` (excluding `set` itself).
    pub fn common_neighbors(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(self.vertices, |acc, v| acc.intersection(self.adj[v as usize])).difference(set)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ vertices: {:?}, edges: [", self.vertices)?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "] }}")
    }
}

/// Connectivity; isolated vertices count as components.
pub fn connected(g: &Graph) -> Result<bool> {
    let start = g.vertices.min().ok_or(Error::EmptyGraph)?;
    Ok(component_of(g, start) == g.vertices)
}

pub(crate) fn component_of(g: &Graph, start: Vertex) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.adj[v as usize]);
        }
        frontier = next.difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// All cliques with exactly `size` vertices, in lexicographic order.
pub fn cliques(g: &Graph, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    extend_cliques(g, VertexSet::EMPTY, g.vertices, size, &mut out);
    out
}

fn extend_cliques(g: &Graph, current: VertexSet, candidates: VertexSet, remaining: usize, out: &mut Vec<VertexSet>) {
    if remaining == 0 {
        out.push(current);
        return;
    }
    if candidates.len() < remaining {
        return;
    }
    let mut rest = candidates;
    while let Some(v) = rest.min() {
        rest = rest.without(v);
        if rest.len() + 1 < remaining {
            break;
        }
        extend_cliques(g, current.with(v), rest.intersection(g.adj[v as usize]), remaining - 1, out);
    }
}

/// Whether `within` contains a clique of the given size.
pub(crate) fn has_clique(g: &Graph, within: VertexSet, size: usize) -> bool {
    fn go(g: &Graph, candidates: VertexSet, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut rest = candidates;
        while let Some(v) = rest.min() {
            if rest.len() < remaining {
                return false;
            }
            rest = rest.without(v);
            if go(g, rest.intersection(g.adj[v as usize]), remaining - 1) {
                return true;
            }
        }
        false
    }
    go(g, within.intersection(g.vertices), size)
}

/// `full^d(G)`: the pure complex generated by all `(d+1)`-cliques. Returns the
/// void complex when `G` has no such clique.
pub fn full_d(g: &Graph, d: usize) -> Complex {
    Complex::from_sorted(g.vertices, cliques(g, d + 1))
}

/// `G^H`: joins every vertex of `H` to every other vertex of `V ∪ H`.
pub fn cone(g: &Graph, h: VertexSet) -> Result<Graph> {
    if !g.vertices.is_disjoint(h) {
        return Err(Error::NotDisjoint(format!(
            "cone vertices {} meet the graph",
            g.vertices.intersection(h).to_list_string()
        )));
    }
    let mut out = g.clone();
    out.vertices = g.vertices.union(h);
    for x in h {
        out.adj[x as usize] = out.vertices.without(x);
    }
    for v in g.vertices {
        out.adj[v as usize] = out.adj[v as usize].union(h);
    }
    Ok(out)
}

/// Every `h ∈ H` is adjacent to all other vertices of the skeleton, and every
/// `(d+1)`-clique of the skeleton is a facet.
///
/// Returns `false` for complexes of dimension below 2 or when `H` is not a
/// subset of the vertex set.
pub fn is_fully_coned(c: &Complex, h: VertexSet) -> bool {
    let Some(dim) = c.dimension() else { return false };
    if dim < 2 || !c.is_pure() || !h.is_subset(c.vertices()) {
        return false;
    }
    let g = c.skeleton_graph();
    coned_skeleton(&g, h) && cliques(&g, dim as usize + 1).iter().all(|&q| c.is_facet(q))
}

pub(crate) fn coned_skeleton(g: &Graph, h: VertexSet) -> bool {
    h.iter().all(|x| g.neighbors(x) == g.vertices().without(x))
}

/// Non-edges `uv` such that `G + uv` has a `(d+1)`-clique through `uv`,
/// sorted lexicographically.
pub fn clique_completing_edges(g: &Graph, d: usize) -> Vec<VertexSet> {
    if d == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for u in g.vertices {
        for v in g.vertices.difference(g.neighbors(u)) {
            if v <= u {
                continue;
            }
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if has_clique(g, common, d - 1) {
                out.push(VertexSet::pair(u, v));
            }
        }
    }
    out
}

/// Non-adjacent pairs at distance two, sorted lexicographically.
pub fn distance_two_pairs(g: &Graph) -> Vec<VertexSet> {
    clique_completing_edges(g, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complex, face, facets, graph};

    #[test]
    fn connectivity() {
        assert!(connected(&graph("123", "12 13")).unwrap());
        assert!(!connected(&graph("1234", "12 34")).unwrap());
        assert!(!connected(&graph("123", "12")).unwrap());
        assert!(matches!(connected(&Graph::new(VertexSet::EMPTY)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn clique_examples() {
        let k4 = Graph::complete(face("1234"));
        assert_eq!(cliques(&k4, 3), facets("123 124 134 234"));
        let g = complex("123 134 124").skeleton().unwrap();
        assert_eq!(cliques(&g, 3), facets("123 124 134 234"));
        assert!(cliques(&graph("123", "12 23"), 3).is_empty());
        assert_eq!(cliques(&k4, 1), facets("1 2 3 4"));
        assert_eq!(cliques(&k4, 5), Vec::<VertexSet>::new());
    }

    #[test]
    fn full_examples() {
        let g = complex("123 134 124").skeleton().unwrap();
        assert_eq!(full_d(&g, 2), complex("123 134 124 234"));
        let k4 = Graph::complete(face("1234"));
        assert_eq!(full_d(&k4, 2), complex("123 124 134 234"));
        assert!(full_d(&graph("12", "12"), 2).is_void());
    }

    #[test]
    fn full_of_cone_example() {
        // a = 6, b = 7
        let g = graph("12345", "12 34");
        let coned = cone(&g, face("67")).unwrap();
        let expected = complex("671 672 673 674 675 612 712 634 734");
        assert_eq!(full_d(&coned, 2).facets(), expected.facets());
    }

    #[test]
    fn cone_examples() {
        let g = graph("12345", "12 34");
        let coned = cone(&g, face("67")).unwrap();
        assert!(coned.has_edge(1, 2) && coned.has_edge(3, 4) && !coned.has_edge(1, 3));
        for x in face("67") {
            assert_eq!(coned.neighbors(x), face("1234567").without(x));
        }
        assert_eq!(cone(&g, VertexSet::EMPTY).unwrap(), g);
        assert_eq!(cone(&graph("1", ""), face("9")).unwrap().edge_sets(), facets("19"));
        assert!(matches!(cone(&g, face("5")), Err(Error::NotDisjoint(_))));
    }

    #[test]
    fn fully_coned_examples() {
        let simplex_skel = full_d(&Graph::complete(face("123456")), 3);
        assert!(is_fully_coned(&simplex_skel, face("16")));
        assert!(is_fully_coned(&simplex_skel, VertexSet::EMPTY));
        assert!(!is_fully_coned(&complex("123 134 124"), VertexSet::EMPTY));
        assert!(is_fully_coned(&complex("123 134 124 234"), VertexSet::EMPTY));
        assert!(is_fully_coned(&crate::fixtures::missing_edge_example(), face("8")));
    }

    #[test]
    fn completing_edge_examples() {
        let g = graph("12345", "12 13 14 15 23 34 45");
        assert!(clique_completing_edges(&g, 2).contains(&face("25")));
        let g = crate::fixtures::missing_edge_example().skeleton().unwrap();
        assert!(clique_completing_edges(&g, 3).contains(&face("67")));
        assert!(clique_completing_edges(&g, 2).contains(&face("67")));
        assert!(clique_completing_edges(&Graph::complete(face("1234")), 2).is_empty());
    }
}
