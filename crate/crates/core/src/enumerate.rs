//! Small-case scans over subcomplexes of the d-skeleton of a simplex.
//!
//! Complexes are compared up to vertex relabelling through [`canonical_form`],
//! which refines vertex colours until stable and then minimises over the
//! relabellings that respect the colour classes.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::decomp::{Decider, Sheller, Verdict};
use crate::error::{Error, Result};
use crate::vertex_set::{Facet, Vertex, VertexSet, MAX_VERTICES};

/// Facet bitsets after canonical relabelling, sorted.
pub type CanonicalForm = Vec<u64>;

/// Canonical form of a facet list on vertices `0..n` under vertex permutation.
pub fn canonical_form(n: usize, facets: &[Facet]) -> CanonicalForm {
    let colours = refine(n, facets);
    let mut cells: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (v, &colour) in colours.iter().enumerate().take(n) {
        cells.entry(colour).or_default().push(v as Vertex);
    }
    let cells: Vec<Vec<Vertex>> = cells.into_values().collect();
    let mut best: Option<CanonicalForm> = None;
    let mut map = [0 as Vertex; MAX_VERTICES];
    assign(&cells, 0, 0, &mut map, &mut vec![false; n], facets, &mut best);
    best.unwrap_or_default()
}

/// Minimum over all `n!` relabellings; the reference for [`canonical_form`].
pub fn brute_force_form(n: usize, facets: &[Facet]) -> CanonicalForm {
    let cells = vec![(0..n as Vertex).collect::<Vec<_>>()];
    let mut best = None;
    let mut map = [0 as Vertex; MAX_VERTICES];
    assign(&cells, 0, 0, &mut map, &mut vec![false; n], facets, &mut best);
    best.unwrap_or_default()
}

fn relabelled(facets: &[Facet], map: &[Vertex]) -> CanonicalForm {
    let mut out: Vec<u64> = facets.iter().map(|f| f.map(map).bits()).collect();
    out.sort_unstable();
    out
}

/// Maps the vertices of each cell, in every order, onto consecutive positions.
fn assign(
    cells: &[Vec<Vertex>],
    cell: usize,
    position: usize,
    map: &mut [Vertex; MAX_VERTICES],
    used: &mut Vec<bool>,
    facets: &[Facet],
    best: &mut Option<CanonicalForm>,
) {
    let Some(members) = cells.get(cell) else {
        let form = relabelled(facets, map);
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    };
    let offset = position - cells[..cell].iter().map(Vec::len).sum::<usize>();
    if offset == members.len() {
        assign(cells, cell + 1, position, map, used, facets, best);
        return;
    }
    for &v in members {
        if used[v as usize] {
            continue;
        }
        used[v as usize] = true;
        map[v as usize] = position as Vertex;
        assign(cells, cell, position + 1, map, used, facets, best);
        used[v as usize] = false;
    }
}

/// Stable colouring: each round a vertex is recoloured by its colour and the
/// multiset of colour multisets of its facets with the vertex removed.
fn refine(n: usize, facets: &[Facet]) -> Vec<usize> {
    let mut colours = vec![0usize; n];
    let mut classes = 1;
    loop {
        let signatures: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = facets
                    .iter()
                    .filter(|f| f.contains(v as Vertex))
                    .map(|f| {
                        let mut c: Vec<usize> = f.without(v as Vertex).iter().map(|u| colours[u as usize]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort();
                (colours[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<Vec<usize>>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures.iter().map(|s| distinct.binary_search(&s).unwrap()).collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colours = next;
    }
}

fn universe_facets(n: usize, d: usize) -> Result<Vec<Facet>> {
    let universe = VertexSet::range(n)?;
    if d + 1 > n {
        return Err(Error::NotApplicable(format!("no {}-subsets of {n} vertices", d + 1)));
    }
    Ok(universe.subsets_of_size(d + 1).collect())
}

fn complex_of(n: usize, facets: &[Facet]) -> Complex {
    Complex::new(VertexSet::range(n).expect("checked universe"), facets.iter().copied()).expect("facets of one size")
}

/// One row of a scan: statistics for complexes with a given facet count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelRow {
    pub facets: usize,
    pub classes: usize,
    pub dead_ends: usize,
    pub zero_decomposable: usize,
    pub one_decomposable: usize,
    pub shellable: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Extendability,
    Thresholds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub d: usize,
    pub mode: ScanMode,
    pub rows: Vec<LevelRow>,
    /// Representatives of 1-decomposable complexes with no 1-decomposable
    /// one-facet extension, short of the full skeleton.
    pub dead_ends: Vec<Vec<Facet>>,
    /// Set when the class cap stopped the scan early.
    pub truncated: bool,
}

impl ScanReport {
    pub fn total_dead_ends(&self) -> usize {
        self.rows.iter().map(|r| r.dead_ends).sum()
    }

    pub fn total_inconclusive(&self) -> usize {
        self.rows.iter().map(|r| r.inconclusive).sum()
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            ScanMode::Extendability => {
                writeln!(f, "extendability scan, n = {}, d = {}", self.n, self.d)?;
                writeln!(f, "{:>7} {:>9} {:>10} {:>13}", "facets", "classes", "dead-ends", "inconclusive")?;
                for r in &self.rows {
                    writeln!(f, "{:>7} {:>9} {:>10} {:>13}", r.facets, r.classes, r.dead_ends, r.inconclusive)?;
                }
            }
            ScanMode::Thresholds => {
                writeln!(f, "threshold scan, n = {}, d = {}", self.n, self.d)?;
                writeln!(
                    f,
                    "{:>7} {:>9} {:>7} {:>7} {:>10} {:>13}",
                    "facets", "classes", "0-dec", "1-dec", "shellable", "inconclusive"
                )?;
                for r in &self.rows {
                    writeln!(
                        f,
                        "{:>7} {:>9} {:>7} {:>7} {:>10} {:>13}",
                        r.facets, r.classes, r.zero_decomposable, r.one_decomposable, r.shellable, r.inconclusive
                    )?;
                }
            }
        }
        if self.truncated {
            writeln!(f, "truncated at the class limit")?;
        }
        let verdict = match self.mode {
            ScanMode::Extendability if self.total_dead_ends() == 0 && !self.truncated => "every class extends",
            ScanMode::Extendability => "dead ends or gaps found",
            ScanMode::Thresholds => "done",
        };
        write!(f, "{verdict}")
    }
}

/// Options shared by the scans.
#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Node budget per decision; `None` is unbounded.
    pub budget: Option<u64>,
    /// Stop once a level holds this many classes.
    pub max_classes: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: None, max_classes: 200_000 }
    }
}

fn decider(options: &ScanOptions) -> Decider {
    options.budget.map_or_else(Decider::new, Decider::with_budget)
}

/// Breadth-first walk over isomorphism classes of 1-decomposable
/// subcomplexes of the d-skeleton of the simplex on `n` vertices, growing one
/// facet at a time from a single facet. Counts classes with no
/// 1-decomposable one-facet extension.
pub fn extendability_scan(n: usize, d: usize, options: &ScanOptions) -> Result<ScanReport> {
    let all = universe_facets(n, d)?;
    let mut decider = decider(options);
    let mut level: Vec<Vec<Facet>> = vec![vec![all[0]]];
    let mut report =
        ScanReport { n, d, mode: ScanMode::Extendability, rows: Vec::new(), dead_ends: Vec::new(), truncated: false };
    for size in 1..=all.len() {
        let mut row = LevelRow { facets: size, classes: level.len(), ..LevelRow::default() };
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for facets in &level {
            let mut extends = false;
            for &f in all.iter().filter(|f| !facets.contains(f)) {
                let mut grown = facets.clone();
                grown.push(f);
                match decider.decide(&complex_of(n, &grown), 1) {
                    Verdict::Decomposable(_) => {
                        extends = true;
                        if seen.insert(canonical_form(n, &grown)) {
                            next.push(grown);
                        }
                    }
                    Verdict::NotDecomposable => {}
                    Verdict::Inconclusive => row.inconclusive += 1,
                }
            }
            if !extends && size < all.len() {
                row.dead_ends += 1;
                report.dead_ends.push(facets.clone());
            }
        }
        report.rows.push(row);
        if next.len() > options.max_classes {
            report.truncated = true;
            break;
        }
        level = next;
        if level.is_empty() {
            break;
        }
    }
    Ok(report)
}

/// For each facet count, the isomorphism classes of pure d-dimensional
/// subcomplexes of the simplex skeleton, with how many are 0-decomposable,
/// 1-decomposable and shellable.
pub fn threshold_scan(n: usize, d: usize, options: &ScanOptions) -> Result<ScanReport> {
    let all = universe_facets(n, d)?;
    let mut decider = decider(options);
    let sheller = options.budget.map_or_else(Sheller::new, Sheller::with_budget);
    let mut level: Vec<Vec<Facet>> = vec![vec![all[0]]];
    let mut report =
        ScanReport { n, d, mode: ScanMode::Thresholds, rows: Vec::new(), dead_ends: Vec::new(), truncated: false };
    for size in 1..=all.len() {
        let mut row = LevelRow { facets: size, classes: level.len(), ..LevelRow::default() };
        for facets in &level {
            let c = complex_of(n, facets);
            let mut tally = |v: Option<bool>, count: &mut usize| match v {
                Some(true) => *count += 1,
                Some(false) => {}
                None => row.inconclusive += 1,
            };
            let mut zero = 0;
            let mut one = 0;
            let mut shell = 0;
            tally(decider.decide(&c, 0).as_bool(), &mut zero);
            tally(decider.decide(&c, 1).as_bool(), &mut one);
            tally(sheller.shell(&c).as_bool(), &mut shell);
            row.zero_decomposable += zero;
            row.one_decomposable += one;
            row.shellable += shell;
        }
        report.rows.push(row);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for facets in &level {
            for &f in all.iter().filter(|f| !facets.contains(f)) {
                let mut grown = facets.clone();
                grown.push(f);
                if seen.insert(canonical_form(n, &grown)) {
                    next.push(grown);
                }
            }
        }
        if next.len() > options.max_classes {
            report.truncated = true;
            break;
        }
        level = next;
        if level.is_empty() {
            break;
        }
    }
    Ok(report)
}

/// Outcome of one random walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub order: Vec<Facet>,
    pub completed: bool,
}

/// Seeded random walks: from a random facet, repeatedly add a uniformly chosen
/// facet that keeps the complex 1-decomposable.
pub fn random_walks(n: usize, d: usize, samples: usize, seed: u64, options: &ScanOptions) -> Result<Vec<Walk>> {
    let all = universe_facets(n, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut decider = decider(options);
    let mut walks = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut order = vec![*all.choose(&mut rng).expect("nonempty")];
        loop {
            let options: Vec<Facet> = all
                .iter()
                .copied()
                .filter(|f| !order.contains(f))
                .filter(|&f| {
                    let mut grown = order.clone();
                    grown.push(f);
                    decider.decide(&complex_of(n, &grown), 1).is_decomposable()
                })
                .collect();
            match options.choose(&mut rng) {
                Some(&f) => order.push(f),
                None => break,
            }
        }
        let completed = order.len() == all.len();
        walks.push(Walk { order, completed });
    }
    Ok(walks)
}
