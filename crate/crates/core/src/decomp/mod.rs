//! Shedding faces, k-decomposability and shellability.
//!
//! [`Decider`] runs a memoised search over shedding faces. Candidates are tried
//! by dimension, then lexicographically, and results are cached under a dense
//! relabelling of the complex so repeated deletions and links are decided once.

mod certify;
mod shelling;
mod trace;
mod tree;

use std::collections::HashMap;

use crate::complex::{Complex, Kind};
use crate::error::{Error, Result};
use crate::vertex_set::{Facet, Vertex, VertexSet, MAX_VERTICES};

pub use certify::{certify_trace, CertifyReport, PrefixEntry, PrefixStatus};
pub use shelling::{is_shellable, Sheller, ShellingVerdict};
pub use trace::{ExtensionTrace, TraceStep};
pub use tree::DecompositionTree;

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Decomposable(DecompositionTree),
    NotDecomposable,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

impl Verdict {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Verdict::Decomposable(_))
    }

    pub fn tree(self) -> Option<DecompositionTree> {
        match self {
            Verdict::Decomposable(t) => Some(t),
            _ => None,
        }
    }

    /// `Some(true/false)` when conclusive.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Decomposable(_) => Some(true),
            Verdict::NotDecomposable => Some(false),
            Verdict::Inconclusive => None,
        }
    }
}

/// Gluing criterion: for every facet `H ⊇ F` and every `f ∈ F` some other facet
/// contains `H ∖ {f}`. Assumes `c` is pure.
pub(crate) fn gluing(c: &Complex, f: VertexSet) -> bool {
    if f.is_empty() {
        return false;
    }
    let facets = c.facets();
    facets.iter().filter(|&&h| f.is_subset(h)).all(|&h| {
        f.iter().all(|v| {
            let rest = h.without(v);
            facets.iter().any(|&g| g != h && rest.is_subset(g))
        })
    })
}

fn require_pure_face(c: &Complex, f: VertexSet) -> Result<bool> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if c.kind() != Kind::Proper || f.is_empty() {
        return Ok(false);
    }
    if !c.has_face(f) {
        return Err(Error::NotAFace(f.to_list_string()));
    }
    Ok(true)
}

/// Shedding test through the gluing criterion.
pub fn is_shedding_face(c: &Complex, f: VertexSet) -> Result<bool> {
    Ok(require_pure_face(c, f)? && gluing(c, f))
}

/// Shedding test straight from the definition: the deletion is pure and keeps
/// the dimension of `c`.
pub fn is_shedding_face_direct(c: &Complex, f: VertexSet) -> Result<bool> {
    if !require_pure_face(c, f)? {
        return Ok(false);
    }
    let del = c.deletion(f);
    Ok(del.kind() == Kind::Proper && del.is_pure() && del.max_facet_size() == c.max_facet_size())
}

/// Unbounded k-decomposability search; `None` when no witness exists.
pub fn is_k_decomposable(c: &Complex, k: usize) -> Option<DecompositionTree> {
    Decider::new().decide(c, k).tree()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct MemoKey {
    k: u8,
    facets: Vec<u64>,
}

struct Exhausted;

/// Memoised k-decomposability search with an optional node budget.
///
/// The memo persists across calls, so deciding many related complexes with
/// the same `Decider` (for instance every prefix of an extension) is cheap.
pub struct Decider {
    budget: Option<u64>,
    spent: u64,
    memo: HashMap<MemoKey, Option<DecompositionTree>>,
}

impl Default for Decider {
    fn default() -> Self {
        Decider::new()
    }
}

impl Decider {
    pub fn new() -> Self {
        Decider { budget: None, spent: 0, memo: HashMap::new() }
    }

    /// Caps the number of search nodes expanded per top-level call.
    pub fn with_budget(budget: u64) -> Self {
        Decider { budget: Some(budget), ..Decider::new() }
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear_memo(&mut self) {
        self.memo.clear();
    }

    /// Decides whether `c` is k-decomposable, returning a witness when it is.
    ///
    /// Void, empty, single-facet and 0-dimensional complexes succeed without
    /// search. Isolated vertices of an impure graph are stripped first; impure
    /// complexes of dimension two or more are never decomposable.
    pub fn decide(&mut self, c: &Complex, k: usize) -> Verdict {
        let Some(c) = normalize(c) else { return Verdict::NotDecomposable };
        self.spent = 0;
        match self.search(&c, k) {
            Ok(Some(t)) => Verdict::Decomposable(t),
            Ok(None) => Verdict::NotDecomposable,
            Err(Exhausted) => Verdict::Inconclusive,
        }
    }

    /// Like [`Decider::decide`] but insists on `face` as the root shedding face.
    pub fn decide_with_root(&mut self, c: &Complex, k: usize, face: VertexSet) -> Verdict {
        if !c.is_pure() || c.kind() != Kind::Proper || face.is_empty() || face.len() > k + 1 {
            return Verdict::NotDecomposable;
        }
        if !c.has_face(face) || !gluing(c, face) {
            return Verdict::NotDecomposable;
        }
        self.spent = 0;
        let attempt = (|| -> std::result::Result<Option<DecompositionTree>, Exhausted> {
            let Some(link) = self.search(&c.link_unchecked(face), k)? else { return Ok(None) };
            let Some(deletion) = self.search(&c.deletion(face), k)? else { return Ok(None) };
            Ok(Some(DecompositionTree::Shed { face, deletion: Box::new(deletion), link: Box::new(link) }))
        })();
        match attempt {
            Ok(Some(t)) => Verdict::Decomposable(t),
            Ok(None) => Verdict::NotDecomposable,
            Err(Exhausted) => Verdict::Inconclusive,
        }
    }

    fn search(&mut self, c: &Complex, k: usize) -> std::result::Result<Option<DecompositionTree>, Exhausted> {
        match c.kind() {
            Kind::Void | Kind::Empty => return Ok(Some(DecompositionTree::Trivial)),
            Kind::Proper => {}
        }
        let size = c.max_facet_size();
        if size == 1 {
            return Ok(Some(DecompositionTree::Trivial));
        }
        if c.is_simplex() {
            return Ok(Some(DecompositionTree::Simplex));
        }
        let k = k.min(size - 1);
        let (key, vertices) = memo_key(c, k);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.as_ref().map(|t| t.relabel(&from_dense(&vertices))));
        }
        self.spent += 1;
        if self.budget.is_some_and(|b| self.spent > b) {
            return Err(Exhausted);
        }
        let found = self.search_faces(c, k)?;
        let stored = found.as_ref().map(|t| t.relabel(&to_dense(&vertices)));
        self.memo.insert(key, stored);
        Ok(found)
    }

    fn search_faces(&mut self, c: &Complex, k: usize) -> std::result::Result<Option<DecompositionTree>, Exhausted> {
        // k-decomposable complexes are shellable, hence strongly connected
        if !dual_graph_connected(c) {
            return Ok(None);
        }
        for face in candidate_faces(c, k) {
            if !gluing(c, face) {
                continue;
            }
            let Some(link) = self.search(&c.link_unchecked(face), k)? else { continue };
            let del = c.deletion(face);
            debug_assert!(del.is_pure() && del.max_facet_size() == c.max_facet_size());
            let Some(deletion) = self.search(&del, k)? else { continue };
            return Ok(Some(DecompositionTree::Shed { face, deletion: Box::new(deletion), link: Box::new(link) }));
        }
        Ok(None)
    }
}

fn normalize(c: &Complex) -> Option<std::borrow::Cow<'_, Complex>> {
    if c.is_pure() {
        return Some(std::borrow::Cow::Borrowed(c));
    }
    if c.max_facet_size() > 2 {
        return None;
    }
    let edges: Vec<Facet> = c.facets().iter().copied().filter(|f| f.len() == 2).collect();
    Some(std::borrow::Cow::Owned(Complex::from_sorted(c.ground(), edges)))
}

/// Faces of dimension at most `k`, ordered by dimension then lexicographically.
pub(crate) fn candidate_faces(c: &Complex, k: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = c.vertices().iter().map(VertexSet::singleton).collect();
    for size in 2..=(k + 1).min(c.max_facet_size()) {
        let mut layer: Vec<VertexSet> = c.facets().iter().flat_map(|f| f.subsets_of_size(size)).collect();
        layer.sort();
        layer.dedup();
        out.extend(layer);
    }
    out
}

/// Connectivity of the graph on facets joined when they share all but one vertex.
pub(crate) fn dual_graph_connected(c: &Complex) -> bool {
    let facets = c.facets();
    let n = facets.len();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        let a = facets[i];
        for (j, &b) in facets.iter().enumerate() {
            if !seen[j] && a.intersection(b).len() + 1 == a.len() {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

fn memo_key(c: &Complex, k: usize) -> (MemoKey, Vec<Vertex>) {
    let vertices: Vec<Vertex> = c.vertices().iter().collect();
    let map = to_dense(&vertices);
    let mut facets: Vec<u64> = c.facets().iter().map(|f| f.map(&map).bits()).collect();
    facets.sort_unstable();
    (MemoKey { k: k as u8, facets }, vertices)
}

fn to_dense(vertices: &[Vertex]) -> [Vertex; MAX_VERTICES] {
    let mut map = [0; MAX_VERTICES];
    for (i, &v) in vertices.iter().enumerate() {
        map[v as usize] = i as Vertex;
    }
    map
}

fn from_dense(vertices: &[Vertex]) -> [Vertex; MAX_VERTICES] {
    let mut map = [0; MAX_VERTICES];
    for (i, &v) in vertices.iter().enumerate() {
        map[i] = v;
    }
    map
}

/// Facet order whose every prefix is k-decomposable, built from a witness by
/// listing the deletion's facets before the star's.
pub fn decomposable_order(c: &Complex, k: usize, tree: &DecompositionTree) -> Result<Vec<Facet>> {
    tree.verify(c, k)?;
    let mut out = Vec::with_capacity(c.num_facets());
    order_into(c, tree, VertexSet::EMPTY, &mut out);
    out.retain(|f| !f.is_empty());
    Ok(out)
}

fn order_into(c: &Complex, tree: &DecompositionTree, pad: VertexSet, out: &mut Vec<Facet>) {
    match tree {
        DecompositionTree::Shed { face, deletion, link } => {
            order_into(&c.deletion(*face), deletion, pad, out);
            order_into(&c.link_unchecked(*face), link, pad.union(*face), out);
        }
        _ if c.is_empty_complex() => out.push(pad),
        _ => out.extend(c.facets().iter().map(|f| f.union(pad))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complex, face, facets, v6f10_6};

    #[test]
    fn shedding_examples_agree() {
        let cases = [
            // 25 lies only in 245, so deleting 45 leaves 25 maximal
            (complex("123 234 134 135 145 245"), face("45"), false),
            (complex("123 234 134 135 145 245"), face("25"), true),
            (v6f10_6(), face("15"), true),
            (complex("123"), face("1"), false),
            (complex("123 134 145 345"), face("5"), true),
            (complex("123 145"), face("5"), false),
        ];
        for (c, f, expected) in cases {
            assert_eq!(is_shedding_face(&c, f).unwrap(), expected, "gluing {f:?} in {c:?}");
            assert_eq!(is_shedding_face_direct(&c, f).unwrap(), expected, "direct {f:?} in {c:?}");
        }
    }

    #[test]
    fn shedding_errors() {
        let impure = Complex::from_facets(facets("12 3")).unwrap();
        assert!(matches!(is_shedding_face(&impure, face("3")), Err(Error::NotPure)));
        assert!(matches!(is_shedding_face(&complex("123"), face("4")), Err(Error::NotAFace(_))));
    }

    #[test]
    fn v6f10_6_is_one_but_not_zero_decomposable() {
        let c = v6f10_6();
        assert_eq!(Decider::new().decide(&c, 0), Verdict::NotDecomposable);
        let tree = is_k_decomposable(&c, 1).expect("1-decomposable");
        tree.verify(&c, 1).unwrap();
        assert!(Decider::new().decide_with_root(&c, 1, face("15")).is_decomposable());
    }

    #[test]
    fn trivial_cases() {
        for text in ["123", "1 2 3", "1234"] {
            for k in 0..3 {
                assert!(is_k_decomposable(&complex(text), k).is_some());
            }
        }
        assert!(is_k_decomposable(&Complex::void(VertexSet::EMPTY), 0).is_some());
        assert!(is_k_decomposable(&Complex::empty(VertexSet::EMPTY), 0).is_some());
    }

    #[test]
    fn graphs_are_decomposable_iff_connected() {
        assert!(is_k_decomposable(&complex("12 23 34 14 13"), 1).is_some());
        assert!(is_k_decomposable(&complex("12 34"), 1).is_none());
        // isolated vertices are stripped
        let with_isolated = Complex::from_facets(facets("12 23 5")).unwrap();
        assert!(is_k_decomposable(&with_isolated, 1).is_some());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let mut d = Decider::with_budget(1);
        assert_eq!(d.decide(&v6f10_6(), 0), Verdict::Inconclusive);
        // an unbounded decider on the same instance is conclusive
        assert_eq!(Decider::new().decide(&v6f10_6(), 0), Verdict::NotDecomposable);
    }

    #[test]
    fn ordering_example_keeps_star_last() {
        let c = complex("123 234 134 135 145 245");
        let mut decider = Decider::new();
        let stated = facets("123 234 134 135 145 245");
        for i in 1..=stated.len() {
            let prefix = Complex::from_facets(stated[..i].iter().copied()).unwrap();
            assert!(decider.decide(&prefix, 1).is_decomposable(), "prefix {i}");
        }
        // shedding 25 and then 45 in the deletion reproduces that order
        let tree = DecompositionTree::Shed {
            face: face("25"),
            deletion: Box::new(DecompositionTree::Shed {
                face: face("45"),
                deletion: Box::new(is_k_decomposable(&complex("123 234 134 135"), 1).unwrap()),
                link: Box::new(DecompositionTree::Simplex),
            }),
            link: Box::new(DecompositionTree::Simplex),
        };
        let order = decomposable_order(&c, 1, &tree).unwrap();
        let mut head = order[..4].to_vec();
        head.sort();
        assert_eq!(head, facets("123 134 135 234"));
        assert_eq!(&order[4..], facets("145 245").as_slice());
        let found = decider.decide(&c, 1).tree().unwrap();
        let order = decomposable_order(&c, 1, &found).unwrap();
        for i in 1..=order.len() {
            let prefix = Complex::from_facets(order[..i].iter().copied()).unwrap();
            assert!(decider.decide(&prefix, 1).is_decomposable(), "prefix {i}");
        }
    }

    #[test]
    fn order_of_single_facet() {
        let c = complex("123");
        let t = is_k_decomposable(&c, 1).unwrap();
        assert_eq!(decomposable_order(&c, 1, &t).unwrap(), facets("123"));
        assert!(matches!(
            decomposable_order(&complex("123 124"), 1, &DecompositionTree::Simplex),
            Err(Error::BadWitness(_))
        ));
    }

    #[test]
    fn candidate_order_is_by_dimension_then_lex() {
        let c = complex("123 124");
        assert_eq!(candidate_faces(&c, 1), facets("1 2 3 4 12 13 14 23 24"));
    }
}
