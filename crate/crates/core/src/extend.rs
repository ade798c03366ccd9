//! Facet-by-facet extensions that keep every intermediate complex
//! 1-decomposable.
//!
//! The pipeline for a pure d-dimensional complex `C` on `n` vertices first grows
//! `C` to its coned clique closure `full^d(skel(C)^H)` with `d − 2` fresh cone
//! vertices `H`, then inserts missing base edges one at a time until every
//! `(d+1)`-subset of the `n + d − 2` labels is a facet.

use crate::complex::{Complex, Kind};
use crate::decomp::{certify_trace, Decider, DecompositionTree, ExtensionTrace, TraceStep, Verdict};
use crate::error::{Error, Result};
use crate::graph::{cone, connected, distance_two_pairs, full_d, has_clique, is_fully_coned, Graph};
use crate::vertex_set::{binomial, Facet, Vertex, VertexSet, MAX_VERTICES};

/// Base vertices, cone vertices and dimension of one pipeline run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeContext {
    pub base: VertexSet,
    pub cone: VertexSet,
    pub dim: usize,
}

impl ConeContext {
    /// Context for the main pipeline: `d − 2` fresh labels directly above the
    /// largest label in use.
    pub fn fresh(c: &Complex) -> Result<ConeContext> {
        let dim = proper_dimension(c)?;
        let used = c.ground().union(c.vertices());
        let first = used.max().map_or(0, |m| m as usize + 1);
        let count = dim.saturating_sub(2);
        if first + count > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(first + count));
        }
        let cone = (first..first + count).map(|v| v as Vertex).collect();
        Ok(ConeContext { base: c.vertices(), cone, dim })
    }

    pub fn universe(&self) -> VertexSet {
        self.base.union(self.cone)
    }
}

/// Extension routines sharing one memoised decider.
#[derive(Default)]
pub struct Extender {
    decider: Decider,
}

impl Extender {
    pub fn new() -> Self {
        Extender { decider: Decider::new() }
    }

    pub fn with_decider(decider: Decider) -> Self {
        Extender { decider }
    }

    pub fn decider_mut(&mut self) -> &mut Decider {
        &mut self.decider
    }

    fn witness(&mut self, c: &Complex) -> Result<DecompositionTree> {
        match self.decider.decide(c, 1) {
            Verdict::Decomposable(t) => Ok(t),
            Verdict::Inconclusive => Err(Error::Inconclusive(self.decider.budget().unwrap_or(0))),
            Verdict::NotDecomposable => {
                let report = certify_trace(&ExtensionTrace::new(c.clone()), 1, &mut self.decider);
                Err(Error::NotDecomposable { k: 1, report: Box::new(report) })
            }
        }
    }

    /// Adds the triangle `e ∪ {c}` for the smallest common neighbour `c` of the
    /// missing edge `e`, shedding `e`.
    pub fn extend_edge_2d(&mut self, c: &Complex, e: VertexSet) -> Result<ExtensionTrace> {
        if proper_dimension(c)? != 2 {
            return Err(Error::NotApplicable("complex must be 2-dimensional".into()));
        }
        let g = c.skeleton_graph();
        check_missing_edge(&g, e)?;
        let apex = g
            .common_neighbors(e)
            .min()
            .ok_or_else(|| Error::NotApplicable(format!("{} completes no triangle", e.to_list_string())))?;
        self.witness(c)?;
        let mut trace = ExtensionTrace::new(c.clone());
        trace.push(e.with(apex), Some(e));
        Ok(trace)
    }

    /// Grows a 2-dimensional complex to `full(C)` without changing its skeleton.
    pub fn extend_to_full_2d(&mut self, c: &Complex) -> Result<ExtensionTrace> {
        if proper_dimension(c)? != 2 {
            return Err(Error::NotApplicable("complex must be 2-dimensional".into()));
        }
        let tree = self.witness(c)?;
        let added = to_cocl(c, &tree, VertexSet::EMPTY)?;
        let trace = annotated(c, added, tree.root_face());
        let target = full_d(&c.skeleton_graph(), 2);
        ensure_reaches(&trace, &target)?;
        Ok(trace)
    }

    /// Inserts the missing edge `e` into a complex fully coned with respect to
    /// `h`, adding every new `(d+1)`-clique through `e`.
    pub fn extend_clique_edge(&mut self, c: &Complex, h: VertexSet, e: VertexSet) -> Result<ExtensionTrace> {
        let d = proper_dimension(c)?;
        if d < 2 || h.len() + 2 < d {
            return Err(Error::NotApplicable(format!("needs d >= 2 and |H| >= d - 2, got d = {d}, |H| = {}", h.len())));
        }
        if !is_fully_coned(c, h) {
            return Err(Error::NotApplicable(format!("not fully coned with respect to {}", h.to_list_string())));
        }
        let g = c.skeleton_graph();
        check_missing_edge(&g, e)?;
        if !has_clique(&g, g.common_neighbors(e), d - 1) {
            return Err(Error::NotApplicable(format!("{} completes no {}-clique", e.to_list_string(), d + 1)));
        }
        self.witness(c)?;
        let mut trace = ExtensionTrace::new(c.clone());
        for f in clique_edge_facets(&g, h, e, d) {
            trace.push(f, Some(e));
        }
        if !is_fully_coned(&trace.final_complex()?, h) {
            return Err(Error::Internal("clique-edge extension is not fully coned".into()));
        }
        Ok(trace)
    }

    /// Grows `C` to `full^d(skel(C)^H)`.
    pub fn extend_to_cocl(&mut self, c: &Complex, h: VertexSet) -> Result<ExtensionTrace> {
        let d = proper_dimension(c)?;
        if d < 2 || h.len() + 2 < d {
            return Err(Error::NotApplicable(format!("needs d >= 2 and |H| >= d - 2, got d = {d}, |H| = {}", h.len())));
        }
        if !h.is_disjoint(c.ground().union(c.vertices())) {
            return Err(Error::NotDisjoint(format!("cone vertices {} are in use", h.to_list_string())));
        }
        let tree = self.witness(c)?;
        let added = to_cocl(c, &tree, h)?;
        let trace = annotated(c, added, tree.root_face());
        ensure_reaches(&trace, &cocl(c, h)?)?;
        Ok(trace)
    }

    /// Grows a complex fully coned with respect to `h` (`|h| = d − 2`) to the
    /// d-skeleton of the simplex on all its vertices.
    pub fn extend_cocl_to_skeleton(&mut self, c: &Complex, h: VertexSet) -> Result<ExtensionTrace> {
        let d = proper_dimension(c)?;
        if d < 2 || h.len() + 2 != d {
            return Err(Error::NotApplicable(format!("needs d >= 2 and |H| = d - 2, got d = {d}, |H| = {}", h.len())));
        }
        if !is_fully_coned(c, h) {
            return Err(Error::NotApplicable(format!("not fully coned with respect to {}", h.to_list_string())));
        }
        let base = c.vertices().difference(h);
        if base.is_empty() || !connected(&c.skeleton_graph().induced(base))? {
            return Err(Error::DisconnectedBase);
        }
        self.witness(c)?;
        let mut trace = ExtensionTrace::new(c.clone());
        trace.extend(skeleton_fill(c, h, d));
        ensure_reaches(&trace, &simplex_skeleton(c.vertices(), d))?;
        Ok(trace)
    }

    /// Full pipeline to the d-skeleton of the simplex on `n + d − 2` labels.
    ///
    /// Graphs grow to the complete graph on their vertices and 0-dimensional
    /// complexes give an empty trace.
    pub fn extend_main(&mut self, c: &Complex) -> Result<ExtensionTrace> {
        let ctx = ConeContext::fresh(c)?;
        let tree = self.witness(c)?;
        let d = ctx.dim;
        let mut trace = ExtensionTrace::new(c.clone());
        match d {
            0 => return Ok(trace),
            1 => trace.extend(complete_graph_order(c).into_iter().map(|f| TraceStep { facet: f, shedding: None })),
            _ => {
                let added = to_cocl(c, &tree, ctx.cone)?;
                let mut facets = c.facets().to_vec();
                facets.extend(&added);
                let mid = Complex::new(ctx.universe(), facets)?;
                trace = annotated(c, added, tree.root_face());
                trace.extend(skeleton_fill(&mid, ctx.cone, d));
            }
        }
        let target = simplex_skeleton(ctx.universe(), d);
        let expected = binomial(ctx.universe().len(), d + 1) - c.num_facets();
        if trace.len() != expected {
            return Err(Error::Internal(format!("pipeline added {} facets, expected {expected}", trace.len())));
        }
        ensure_reaches(&trace, &target)?;
        Ok(trace)
    }
}

fn proper_dimension(c: &Complex) -> Result<usize> {
    match c.kind() {
        Kind::Proper => Ok(c.max_facet_size() - 1),
        _ => Err(Error::NotApplicable("complex has no facets".into())),
    }
}

fn check_missing_edge(g: &Graph, e: VertexSet) -> Result<()> {
    let (Some(a), Some(b)) = (e.min(), e.max()) else {
        return Err(Error::NotApplicable("edge must have two vertices".into()));
    };
    if e.len() != 2 || !e.is_subset(g.vertices()) {
        return Err(Error::NotApplicable(format!("{} is not a pair of vertices", e.to_list_string())));
    }
    if g.has_edge(a, b) {
        return Err(Error::NotApplicable(format!("{} is already an edge", e.to_list_string())));
    }
    Ok(())
}

fn annotated(start: &Complex, added: Vec<Facet>, face: Option<VertexSet>) -> ExtensionTrace {
    let steps = added.into_iter().map(|facet| TraceStep { facet, shedding: face }).collect();
    ExtensionTrace::from_steps(start.clone(), steps)
}

fn ensure_reaches(trace: &ExtensionTrace, target: &Complex) -> Result<()> {
    trace.validate()?;
    let reached = trace.final_complex()?;
    if reached.facets() != target.facets() {
        return Err(Error::Internal(format!(
            "extension ended with {} facets instead of the {} target facets",
            reached.num_facets(),
            target.num_facets()
        )));
    }
    Ok(())
}

/// `full^d(skel(C)^H)`.
pub fn cocl(c: &Complex, h: VertexSet) -> Result<Complex> {
    let d = proper_dimension(c)?;
    let coned = cone(&c.skeleton_graph(), h)?;
    Ok(full_d(&coned, d))
}

fn simplex_skeleton(vertices: VertexSet, d: usize) -> Complex {
    Complex::from_sorted(vertices, vertices.subsets_of_size(d + 1).collect())
}

/// Extends `⟨F⟩` to the `(|F|−1)`-skeleton of the simplex on `universe`.
///
/// Vertices of `F` are ranked first and the remaining subsets follow in
/// lexicographic order of ranks, so every prefix is a shifted complex and
/// hence vertex decomposable.
pub fn extend_simplex_base(f: Facet, universe: VertexSet) -> Result<ExtensionTrace> {
    if f.is_empty() || !f.is_subset(universe) {
        return Err(Error::NotApplicable(format!(
            "{} is not a nonempty subset of {}",
            f.to_list_string(),
            universe.to_list_string()
        )));
    }
    let start = Complex::new(universe, [f])?;
    let mut trace = ExtensionTrace::new(start);
    for facet in simplex_base_order(f, universe).into_iter().skip(1) {
        trace.push(facet, None);
    }
    Ok(trace)
}

fn simplex_base_order(f: Facet, universe: VertexSet) -> Vec<Facet> {
    let ranked: Vec<Vertex> = f.iter().chain(universe.difference(f).iter()).collect();
    let positions = VertexSet::from_bits(if ranked.len() == 64 { u64::MAX } else { (1u64 << ranked.len()) - 1 });
    positions.subsets_of_size(f.len()).map(|s| s.map(&ranked)).collect()
}

/// Facets of `full^{size−1}(G^H)` ordered so that every prefix is
/// 1-decomposable when `|H| ≥ size − 1`.
///
/// With `v` the smallest vertex of `G`, the facets avoiding `v` come first
/// (recursively on `G − v`), followed by `v` joined to the order for the
/// neighbourhood of `v`. Size 0 yields the single empty set.
pub fn cone_full_order(g: &Graph, h: VertexSet, size: usize) -> Vec<Facet> {
    if size == 0 {
        return vec![VertexSet::EMPTY];
    }
    let Some(v) = g.vertices().min() else {
        return h.subsets_of_size(size).collect();
    };
    let mut out = cone_full_order(&g.without_vertex(v), h, size);
    let link = g.induced(g.neighbors(v));
    out.extend(cone_full_order(&link, h, size - 1).into_iter().map(|y| y.with(v)));
    out
}

/// New facets through the missing edge `e` of a skeleton coned over `h`.
fn clique_edge_facets(g: &Graph, h: VertexSet, e: VertexSet, d: usize) -> Vec<Facet> {
    let base = g.common_neighbors(e).difference(h);
    cone_full_order(&g.induced(base), h.intersection(g.common_neighbors(e)), d - 1)
        .into_iter()
        .map(|y| y.union(e))
        .collect()
}

/// Repeatedly inserts the lexicographically smallest base pair at distance two.
fn skeleton_fill(c: &Complex, h: VertexSet, d: usize) -> Vec<TraceStep> {
    let base = c.vertices().difference(h);
    let mut g = c.skeleton_graph();
    let mut steps = Vec::new();
    while let Some(&e) = distance_two_pairs(&g.induced(base)).first() {
        for facet in clique_edge_facets(&g, h, e, d) {
            steps.push(TraceStep { facet, shedding: Some(e) });
        }
        let (a, b) = (e.min().unwrap(), e.max().unwrap());
        g.add_edge(a, b);
    }
    steps
}

/// Missing edges of the complete graph, each touching the part already
/// covered by edges so the edge set stays connected.
fn complete_graph_order(c: &Complex) -> Vec<Facet> {
    let vertices = c.vertices();
    let mut g = c.skeleton_graph();
    let mut covered = c.facets().iter().filter(|f| f.len() == 2).fold(VertexSet::EMPTY, |s, &f| s.union(f));
    let mut out = Vec::new();
    loop {
        let next = vertices.iter().find_map(|u| {
            vertices
                .difference(g.neighbors(u))
                .iter()
                .find(|&v| v > u && (covered.contains(u) || covered.contains(v) || covered.is_empty()))
                .map(|v| (u, v))
        });
        let Some((u, v)) = next else { break };
        g.add_edge(u, v);
        covered = covered.with(u).with(v);
        out.push(VertexSet::pair(u, v));
    }
    out
}

/// Facets taking `c` to `full^d(skel(c)^H)`, following its witness: the
/// deletion is closed first, then the link is closed and its missing vertices
/// and edges are filled in, joined to the shedding face.
fn to_cocl(c: &Complex, tree: &DecompositionTree, h: VertexSet) -> Result<Vec<Facet>> {
    if c.kind() != Kind::Proper {
        return Ok(Vec::new());
    }
    let d = c.max_facet_size() - 1;
    let g = c.skeleton_graph();
    if d == 0 {
        return Ok(h.iter().map(VertexSet::singleton).collect());
    }
    if d == 1 {
        let mut out = Vec::new();
        let mut seen = VertexSet::EMPTY;
        for x in h {
            out.extend(g.vertices().union(seen).iter().map(|y| VertexSet::pair(x, y)));
            seen = seen.with(x);
        }
        return Ok(out);
    }
    match tree {
        DecompositionTree::Simplex | DecompositionTree::Trivial => {
            if !c.is_simplex() {
                return Err(Error::BadWitness(format!("leaf on {c:?}")));
            }
            let f = c.facets()[0];
            Ok(simplex_base_order(f, f.union(h)).into_iter().skip(1).collect())
        }
        DecompositionTree::Shed { face, deletion, link } => {
            let mut out = to_cocl(&c.deletion(*face), deletion, h)?;
            let lk = c.link_unchecked(*face);
            let lk_dim = d - face.len();
            let mut local = to_cocl(&lk, link, h)?;
            let mut s = Graph::new(lk.vertices().union(h));
            for &f in lk.facets().iter().chain(&local) {
                add_clique(&mut s, f);
            }
            let target = g.common_neighbors(*face);
            for v in target.difference(s.vertices()) {
                s.add_vertex(v);
                for y in h.subsets_of_size(lk_dim) {
                    let f = y.with(v);
                    add_clique(&mut s, f);
                    local.push(f);
                }
            }
            if lk_dim >= 1 {
                for u in target {
                    for v in target.intersection(g.neighbors(u)) {
                        if v <= u || s.has_edge(u, v) {
                            continue;
                        }
                        let e = VertexSet::pair(u, v);
                        local.extend(clique_edge_facets(&s, h, e, lk_dim));
                        s.add_edge(u, v);
                    }
                }
            }
            out.extend(local.into_iter().map(|f| f.union(*face)));
            Ok(out)
        }
    }
}

fn add_clique(g: &mut Graph, f: Facet) {
    for a in f {
        g.add_vertex(a);
        for b in f {
            if a < b {
                g.add_edge(a, b);
            }
        }
    }
}
