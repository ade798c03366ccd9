//! Simplicial complexes given by their facets.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{Facet, Vertex, VertexSet};

/// Distinguishes the void complex (no faces at all) from the empty complex
/// (only the empty face) and from complexes with at least one facet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Void,
    Empty,
    Proper,
}

/// A simplicial complex on an explicit ground set.
///
/// Facets are stored sorted lexicographically and form an antichain. Ground
/// elements that lie in no facet are loops. Complexes built through
/// [`Complex::new`] of dimension two or more are pure; [`Complex::deletion`]
/// by a face that is not shedding can produce an impure result, which is how
/// the direct shedding test observes failure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    ground: VertexSet,
    facets: Vec<Facet>,
    kind: Kind,
}

impl Complex {
    pub fn void(ground: VertexSet) -> Self {
        Complex { ground, facets: Vec::new(), kind: Kind::Void }
    }

    pub fn empty(ground: VertexSet) -> Self {
        Complex { ground, facets: Vec::new(), kind: Kind::Empty }
    }

    /// Validating constructor. Duplicate facets are merged; zero facets give the
    /// void complex.
    pub fn new<I>(ground: VertexSet, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Facet>,
    {
        let mut facets: Vec<Facet> = facets.into_iter().collect();
        facets.sort();
        facets.dedup();
        for &f in &facets {
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            if let Some(v) = f.difference(ground).min() {
                return Err(Error::OutsideGround { vertex: v });
            }
        }
        check_antichain(&facets)?;
        let c = Complex::from_sorted(ground, facets);
        if c.dimension().unwrap_or(0) >= 2 && !c.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(c)
    }

    /// Like [`Complex::new`] with the ground set equal to the vertex set.
    pub fn from_facets<I>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Facet>,
    {
        let facets: Vec<Facet> = facets.into_iter().collect();
        let ground = facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f));
        Complex::new(ground, facets)
    }

    /// Complex generated by arbitrary sets: keeps the inclusion-maximal ones.
    /// Only the empty set (or nothing nonempty) yields the empty complex.
    pub fn generated<I>(ground: VertexSet, sets: I) -> Self
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        let any = !sets.is_empty();
        sets.retain(|s| !s.is_empty());
        let facets = maximal_sets(sets);
        if facets.is_empty() {
            return if any { Complex::empty(ground) } else { Complex::void(ground) };
        }
        Complex::from_sorted(ground, facets)
    }

    /// `facets` must be sorted, deduplicated, nonempty sets forming an antichain.
    pub(crate) fn from_sorted(ground: VertexSet, facets: Vec<Facet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        let kind = if facets.is_empty() { Kind::Void } else { Kind::Proper };
        Complex { ground, facets, kind }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_void(&self) -> bool {
        self.kind == Kind::Void
    }

    pub fn is_empty_complex(&self) -> bool {
        self.kind == Kind::Empty
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Union of all facets (excludes loops).
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    pub fn loops(&self) -> VertexSet {
        self.ground.difference(self.vertices())
    }

    /// `None` for the void complex, `Some(-1)` for the empty complex.
    pub fn dimension(&self) -> Option<isize> {
        match self.kind {
            Kind::Void => None,
            Kind::Empty => Some(-1),
            Kind::Proper => Some(self.max_facet_size() as isize - 1),
        }
    }

    pub(crate) fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_facet(&self, f: Facet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    pub fn has_face(&self, f: VertexSet) -> bool {
        match self.kind {
            Kind::Void => false,
            Kind::Empty => f.is_empty(),
            Kind::Proper => self.facets.iter().any(|&g| f.is_subset(g)),
        }
    }

    fn require_face(&self, f: VertexSet) -> Result<()> {
        if self.has_face(f) {
            Ok(())
        } else {
            Err(Error::NotAFace(f.to_list_string()))
        }
    }

    /// `{G : G ∩ F = ∅, G ∪ F ∈ C}` on ground set `V ∖ F`.
    pub fn link(&self, f: VertexSet) -> Result<Complex> {
        self.require_face(f)?;
        Ok(self.link_unchecked(f))
    }

    pub(crate) fn link_unchecked(&self, f: VertexSet) -> Complex {
        let ground = self.ground.difference(f);
        let mut facets: Vec<Facet> =
            self.facets.iter().filter(|&&h| f.is_subset(h)).map(|&h| h.difference(f)).collect();
        if facets.iter().any(|g| g.is_empty()) {
            return Complex::empty(ground);
        }
        if facets.is_empty() {
            return Complex::void(ground);
        }
        facets.sort();
        Complex::from_sorted(ground, facets)
    }

    /// Sub-complex generated by the facets containing `f`; same ground set.
    pub fn star(&self, f: VertexSet) -> Result<Complex> {
        self.require_face(f)?;
        Ok(self.star_unchecked(f))
    }

    pub(crate) fn star_unchecked(&self, f: VertexSet) -> Complex {
        let facets = self.facets.iter().copied().filter(|&h| f.is_subset(h)).collect();
        Complex::from_sorted(self.ground, facets)
    }

    /// Faces not containing `f`. A vertex deletion also drops the vertex from the
    /// ground set; larger faces leave the ground set unchanged.
    pub fn deletion(&self, f: VertexSet) -> Complex {
        let ground = if f.len() == 1 { self.ground.difference(f) } else { self.ground };
        match self.kind {
            Kind::Void => return Complex::void(ground),
            Kind::Empty => return Complex::empty(ground),
            Kind::Proper => {}
        }
        if f.is_empty() {
            // every face contains the empty set
            return Complex::void(ground);
        }
        let mut sets = Vec::with_capacity(self.facets.len());
        for &h in &self.facets {
            if f.is_subset(h) {
                sets.extend(f.iter().map(|v| h.without(v)));
            } else {
                sets.push(h);
            }
        }
        Complex::generated(ground, sets)
    }

    /// The 1-skeleton as a graph on the vertices of the complex.
    pub fn skeleton(&self) -> Result<Graph> {
        let dim = self.dimension().unwrap_or(isize::MIN);
        if dim < 1 {
            return Err(Error::DimensionTooLow { needed: 1, actual: dim.max(-2) });
        }
        Ok(self.skeleton_graph())
    }

    /// 1-skeleton for any dimension; 0-dimensional complexes give an edgeless graph.
    pub(crate) fn skeleton_graph(&self) -> Graph {
        let mut g = Graph::new(self.vertices());
        for &f in &self.facets {
            let vs: Vec<Vertex> = f.iter().collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// `C + F`. Adding an existing facet returns the complex unchanged.
    pub fn add_facet(&self, f: Facet) -> Result<Complex> {
        if f.is_empty() {
            return Err(Error::EmptyFacet);
        }
        if self.kind == Kind::Proper {
            let expected = self.max_facet_size();
            if f.len() != expected {
                return Err(Error::DimensionMismatch { expected, actual: f.len() });
            }
        }
        let mut facets = self.facets.clone();
        if let Err(pos) = facets.binary_search(&f) {
            facets.insert(pos, f);
        }
        Ok(Complex::from_sorted(self.ground.union(f), facets))
    }

    /// `C + D` for complexes of equal dimension with no shared facet.
    pub fn union(&self, other: &Complex) -> Result<Complex> {
        self.require_same_dimension(other)?;
        if let Some(shared) = self.facets.iter().find(|f| other.is_facet(**f)) {
            return Err(Error::Overlap(shared.to_list_string()));
        }
        let mut facets: Vec<Facet> = self.facets.iter().chain(&other.facets).copied().collect();
        facets.sort();
        Ok(Complex::from_sorted(self.ground.union(other.ground), facets))
    }

    /// `C ∖ D`: generated by the facets of `C` that are not facets of `D`.
    pub fn minus(&self, other: &Complex) -> Result<Complex> {
        self.require_same_dimension(other)?;
        let facets = self.facets.iter().copied().filter(|f| !other.is_facet(*f)).collect();
        Ok(Complex::from_sorted(self.ground, facets))
    }

    fn require_same_dimension(&self, other: &Complex) -> Result<()> {
        let (a, b) = (self.max_facet_size(), other.max_facet_size());
        if self.kind == Kind::Proper && other.kind == Kind::Proper && a != b {
            return Err(Error::DimensionMismatch { expected: a, actual: b });
        }
        Ok(())
    }

    /// Replaces every facet `F` by `F ∪ H`; `H` must avoid the vertex set.
    pub fn pad(&self, h: VertexSet) -> Result<Complex> {
        let overlap = h.intersection(self.vertices());
        if !overlap.is_empty() {
            return Err(Error::NotDisjoint(format!(
                "padding set shares {} with the vertex set",
                overlap.to_list_string()
            )));
        }
        Ok(match self.kind {
            Kind::Void => Complex::void(self.ground.union(h)),
            Kind::Empty if h.is_empty() => self.clone(),
            Kind::Empty => Complex::from_sorted(self.ground.union(h), vec![h]),
            Kind::Proper => {
                let mut facets: Vec<Facet> = self.facets.iter().map(|f| f.union(h)).collect();
                facets.sort();
                Complex::from_sorted(self.ground.union(h), facets)
            }
        })
    }

    /// Inverse of [`Complex::pad`]: removes `h` from every facet.
    pub fn unpad(&self, h: VertexSet) -> Result<Complex> {
        if !self.facets.iter().all(|f| h.is_subset(*f)) {
            return Err(Error::NotApplicable(format!("{} is not contained in every facet", h.to_list_string())));
        }
        let ground = self.ground.difference(h);
        let facets: Vec<Facet> = self.facets.iter().map(|f| f.difference(h)).collect();
        if facets.iter().any(|f| f.is_empty()) {
            return Ok(Complex::empty(ground));
        }
        Ok(Complex::from_sorted(ground, facets))
    }

    /// Applies a vertex relabelling (`map[v]` is the new label of `v`).
    /// The map must be injective on the ground set.
    pub fn relabel(&self, map: &[Vertex]) -> Complex {
        let mut facets: Vec<Facet> = self.facets.iter().map(|f| f.map(map)).collect();
        facets.sort();
        Complex { ground: self.ground.map(map), facets, kind: self.kind }
    }
}

/// Adjacency of two equal-size facets: they share all but one vertex.
pub fn facets_adjacent(a: Facet, b: Facet) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    Ok(a.intersection(b).len() + 1 == a.len())
}

fn check_antichain(sorted: &[Facet]) -> Result<()> {
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if a.is_subset(b) {
                return Err(Error::NotAnAntichain { inner: a.to_list_string(), outer: b.to_list_string() });
            }
            if b.is_subset(a) {
                return Err(Error::NotAnAntichain { inner: b.to_list_string(), outer: a.to_list_string() });
            }
        }
    }
    Ok(())
}

/// Inclusion-maximal members of `sets`, sorted and deduplicated.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    // larger sets first so each candidate only needs checking against kept ones
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Void => write!(f, "void"),
            Kind::Empty => write!(f, "{{∅}}"),
            Kind::Proper => {
                write!(f, "<")?;
                for (i, facet) in self.facets.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{facet:?}")?;
                }
                write!(f, ">")?;
                if !self.loops().is_empty() {
                    write!(f, " loops {:?}", self.loops())?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complex, face, facets};

    #[test]
    fn dimension_and_purity() {
        assert_eq!(complex("123 124").dimension(), Some(2));
        assert_eq!(complex("123 134 145 345").dimension(), Some(2));
        assert_eq!(Complex::empty(VertexSet::EMPTY).dimension(), Some(-1));
        assert_eq!(Complex::void(VertexSet::EMPTY).dimension(), None);
        assert!(complex("123 124").is_pure());
        let graph = Complex::from_facets(facets("12 3")).unwrap();
        assert!(!graph.is_pure());
        assert!(Complex::void(VertexSet::EMPTY).is_pure());
        assert!(Complex::empty(VertexSet::EMPTY).is_pure());
    }

    #[test]
    fn impure_high_dimension_is_rejected() {
        assert!(matches!(Complex::from_facets(facets("123 45")), Err(Error::NotPure)));
    }

    #[test]
    fn constructor_rejects_containment_and_foreign_vertices() {
        assert!(matches!(Complex::from_facets(facets("123 12")), Err(Error::NotAnAntichain { .. })));
        assert!(matches!(Complex::new(face("12"), facets("123")), Err(Error::OutsideGround { vertex: 3 })));
        let with_loop = Complex::new(face("1239"), facets("123")).unwrap();
        assert_eq!(with_loop.loops(), face("9"));
    }

    #[test]
    fn link_examples() {
        let c = complex("123 134 145 345");
        assert_eq!(c.link(face("5")).unwrap().facets(), facets("14 34").as_slice());
        assert!(complex("123").link(face("123")).unwrap().is_empty_complex());
        assert!(matches!(c.link(face("25")), Err(Error::NotAFace(_))));
        assert_eq!(c.link(face("5")).unwrap().ground(), face("1234"));
    }

    #[test]
    fn star_examples() {
        let c = complex("123 134 145 345");
        assert_eq!(c.star(face("5")).unwrap().facets(), facets("145 345").as_slice());
        assert_eq!(complex("123").star(face("1")).unwrap(), complex("123"));
        let c = complex("123 234 134 135 145 245");
        assert_eq!(c.star(face("45")).unwrap().facets(), facets("145 245").as_slice());
        assert!(c.star(face("26")).is_err());
    }

    #[test]
    fn deletion_examples() {
        let c = complex("123 134 145 345");
        let d = c.deletion(face("5"));
        assert_eq!(d.facets(), facets("123 134").as_slice());
        assert_eq!(d.ground(), face("1234"));
        assert_eq!(complex("123").deletion(face("4")), complex("123"));
        // an edge deletion keeps the ground set
        let e = c.deletion(face("45"));
        assert_eq!(e.ground(), face("12345"));
        // non-shedding deletions may be impure
        let impure = complex("123 145").deletion(face("5"));
        assert_eq!(impure.facets(), facets("123 14").as_slice());
        assert!(!impure.is_pure());
        // deleting the only vertex of a point leaves the empty face
        assert!(complex("1").deletion(face("1")).is_empty_complex());
        assert_eq!(complex("123").deletion(face("123")).facets(), facets("12 13 23").as_slice());
    }

    #[test]
    fn skeleton_examples() {
        let g = complex("123 134 145 345").skeleton().unwrap();
        assert_eq!(g.edge_sets(), facets("12 13 14 15 23 34 35 45"));
        let g = complex("123 134 124").skeleton().unwrap();
        assert_eq!(g.edge_sets(), facets("12 13 14 23 24 34"));
        assert_eq!(complex("12").skeleton().unwrap().edge_sets(), facets("12"));
        assert!(matches!(complex("1 2").skeleton(), Err(Error::DimensionTooLow { .. })));
    }

    #[test]
    fn adjacency() {
        assert!(facets_adjacent(face("123"), face("124")).unwrap());
        assert!(!facets_adjacent(face("123"), face("145")).unwrap());
        // 1234 and 2345 share 234
        assert!(facets_adjacent(face("1234"), face("2345")).unwrap());
        assert!(facets_adjacent(face("1234"), face("1235")).unwrap());
        assert!(matches!(facets_adjacent(face("12"), face("123")), Err(Error::SizeMismatch(2, 3))));
    }

    #[test]
    fn facet_algebra() {
        let c = complex("123 134 145").add_facet(face("125")).unwrap();
        assert_eq!(c, complex("123 134 145 125"));
        assert_eq!(c.add_facet(face("125")).unwrap(), c);
        assert!(matches!(c.add_facet(face("12")), Err(Error::DimensionMismatch { .. })));
        let m = complex("123 124").minus(&complex("124")).unwrap();
        assert_eq!(m.facets(), facets("123").as_slice());
        assert!(matches!(complex("123 124").union(&complex("124")), Err(Error::Overlap(_))));
        assert_eq!(complex("123").union(&complex("234")).unwrap(), complex("123 234"));
    }

    #[test]
    fn pad_examples() {
        let c = complex("14 45 17 18 48 58 78 15 47 57");
        let p = c.pad(face("23")).unwrap();
        assert_eq!(p, complex("1234 2345 1237 1238 2348 2358 2378 1235 2347 2357"));
        assert_eq!(complex("12").pad(VertexSet::EMPTY).unwrap(), complex("12"));
        assert_eq!(complex("1 2").pad(face("9")).unwrap(), complex("19 29"));
        assert!(matches!(complex("12").pad(face("2")), Err(Error::NotDisjoint(_))));
        assert_eq!(p.unpad(face("23")).unwrap().facets(), c.facets());
    }
}
