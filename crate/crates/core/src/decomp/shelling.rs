use std::collections::HashSet;

use crate::complex::{Complex, Kind};
use crate::vertex_set::{Facet, VertexSet};

use super::dual_graph_connected;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingVerdict {
    Shellable(Vec<Facet>),
    NotShellable,
    Inconclusive,
}

impl ShellingVerdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            ShellingVerdict::Shellable(_) => Some(true),
            ShellingVerdict::NotShellable => Some(false),
            ShellingVerdict::Inconclusive => None,
        }
    }
}

/// Unbounded shellability test.
pub fn is_shellable(c: &Complex) -> bool {
    matches!(Sheller::new().shell(c), ShellingVerdict::Shellable(_))
}

/// Backtracking search for a shelling order.
///
/// A facet `G` extends a prefix when every earlier facet meets `G` inside some
/// codimension-one face of `G` already covered by the prefix. Sets of facets
/// that cannot be completed are remembered, and at each step facets with the
/// most neighbours in the prefix are tried first.
#[derive(Clone, Debug, Default)]
pub struct Sheller {
    budget: Option<u64>,
}

struct Search<'a> {
    facets: &'a [Facet],
    adjacent: Vec<Vec<usize>>,
    dead: HashSet<Vec<u64>>,
    budget: Option<u64>,
    spent: u64,
}

struct Exhausted;

impl Sheller {
    pub fn new() -> Self {
        Sheller { budget: None }
    }

    pub fn with_budget(budget: u64) -> Self {
        Sheller { budget: Some(budget) }
    }

    /// Pure complexes only; impure input is reported as not shellable.
    pub fn shell(&self, c: &Complex) -> ShellingVerdict {
        if c.kind() != Kind::Proper {
            return ShellingVerdict::Shellable(Vec::new());
        }
        if !c.is_pure() {
            return ShellingVerdict::NotShellable;
        }
        let facets = c.facets();
        if c.max_facet_size() > 1 && !dual_graph_connected(c) {
            return ShellingVerdict::NotShellable;
        }
        let adjacent = facets
            .iter()
            .map(|&a| (0..facets.len()).filter(|&j| a.intersection(facets[j]).len() + 1 == a.len()).collect())
            .collect();
        let mut search = Search { facets, adjacent, dead: HashSet::new(), budget: self.budget, spent: 0 };
        let mut used = vec![0u64; facets.len().div_ceil(64)];
        let mut order = Vec::with_capacity(facets.len());
        for first in 0..facets.len() {
            set(&mut used, first);
            order.push(first);
            match search.extend(&mut used, &mut order) {
                Ok(true) => return ShellingVerdict::Shellable(order.iter().map(|&i| facets[i]).collect()),
                Ok(false) => {}
                Err(Exhausted) => return ShellingVerdict::Inconclusive,
            }
            order.pop();
            clear(&mut used, first);
        }
        ShellingVerdict::NotShellable
    }
}

fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

fn test(bits: &[u64], i: usize) -> bool {
    bits[i / 64] & (1 << (i % 64)) != 0
}

impl Search<'_> {
    fn extend(&mut self, used: &mut Vec<u64>, order: &mut Vec<usize>) -> Result<bool, Exhausted> {
        if order.len() == self.facets.len() {
            return Ok(true);
        }
        if self.dead.contains(used.as_slice()) {
            return Ok(false);
        }
        self.spent += 1;
        if self.budget.is_some_and(|b| self.spent > b) {
            return Err(Exhausted);
        }
        let mut candidates: Vec<(usize, usize)> = (0..self.facets.len())
            .filter(|&g| !test(used, g))
            .filter_map(|g| {
                let touching = self.adjacent[g].iter().filter(|&&j| test(used, j)).count();
                (touching > 0 && self.feasible(used, order, g)).then_some((touching, g))
            })
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, g) in candidates {
            set(used, g);
            order.push(g);
            if self.extend(used, order)? {
                return Ok(true);
            }
            order.pop();
            clear(used, g);
        }
        self.dead.insert(used.clone());
        Ok(false)
    }

    fn feasible(&self, used: &[u64], order: &[usize], g: usize) -> bool {
        let facet = self.facets[g];
        let covered = self.adjacent[g]
            .iter()
            .filter(|&&j| test(used, j))
            .fold(VertexSet::EMPTY, |m, &j| m.union(facet.difference(self.facets[j])));
        order.iter().all(|&j| !facet.difference(self.facets[j]).is_disjoint(covered))
    }
}
