//! Text formats for complexes and extension traces.
//!
//! A complex file lists one facet per line as whitespace-separated labels. An
//! optional `ground:` header adds loops, `#` starts a comment, a `{}` line
//! denotes the empty complex and a file without facets is the void complex.
//!
//! A trace file starts with `k: <int>`, then a `START` block in complex-file
//! syntax, then one `ADD <labels> [SHED <labels>]` line per step.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::complex::{Complex, Kind};
use crate::decomp::{ExtensionTrace, TraceStep};
use crate::error::{Error, Result};
use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

/// Bidirectional map between external labels and vertex ids.
///
/// When every label is an integer below 64 the label is its own id, so numeric
/// files keep their numbering. Otherwise labels are numbered densely, integers
/// first in numeric order and then the rest lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    names: Vec<String>,
    ids: HashMap<String, Vertex>,
    numeric: bool,
}

impl Labels {
    pub fn from_tokens<'a, I>(tokens: I) -> Result<Labels>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let distinct: BTreeSet<&str> = tokens.into_iter().collect();
        let small: Option<Vec<usize>> = distinct.iter().map(|t| small_integer(t)).collect();
        if let Some(values) = small {
            let len = values.iter().max().map_or(0, |m| m + 1);
            return Ok(Labels::numeric(len));
        }
        let mut sorted: Vec<&str> = distinct.into_iter().collect();
        sorted.sort_by(|a, b| label_order(a, b));
        if sorted.len() > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(sorted.len()));
        }
        let names: Vec<String> = sorted.into_iter().map(str::to_string).collect();
        let ids = names.iter().enumerate().map(|(i, n)| (n.clone(), i as Vertex)).collect();
        Ok(Labels { names, ids, numeric: false })
    }

    /// Labels `0..len` named by their own number.
    pub fn numeric(len: usize) -> Labels {
        let names: Vec<String> = (0..len).map(|i| i.to_string()).collect();
        let ids = names.iter().enumerate().map(|(i, n)| (n.clone(), i as Vertex)).collect();
        Labels { names, ids, numeric: true }
    }

    /// Numeric labels covering every vertex mentioned by `c`.
    pub fn covering(c: &Complex) -> Labels {
        let used = c.ground().union(c.vertices());
        Labels::numeric(used.max().map_or(0, |m| m as usize + 1))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, label: &str) -> Option<Vertex> {
        self.ids.get(label).copied()
    }

    pub fn name(&self, v: Vertex) -> String {
        self.names.get(v as usize).cloned().unwrap_or_else(|| format!("#{v}"))
    }

    pub fn set<'a, I>(&self, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .map(|l| self.id(l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<Vertex>>>()
            .map(|vs| vs.into_iter().collect())
    }

    pub fn render(&self, s: VertexSet) -> String {
        s.iter().map(|v| self.name(v)).collect::<Vec<_>>().join(" ")
    }

    /// Appends one label with the given name and returns its id.
    pub fn push(&mut self, name: &str) -> Result<Vertex> {
        if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
            return Err(Error::UnknownLabel(name.to_string()));
        }
        if self.ids.contains_key(name) {
            return Err(Error::NotDisjoint(format!("label {name} is in use")));
        }
        if self.names.len() >= MAX_VERTICES {
            return Err(Error::UniverseTooLarge(self.names.len() + 1));
        }
        let id = self.names.len() as Vertex;
        self.numeric &= name == id.to_string();
        self.ids.insert(name.to_string(), id);
        self.names.push(name.to_string());
        Ok(id)
    }

    /// Appends `count` new labels and returns their ids. Numeric tables
    /// continue counting; others use `c1`, `c2`, … skipping names in use.
    pub fn add_fresh(&mut self, count: usize) -> Result<VertexSet> {
        if self.names.len() + count > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(self.names.len() + count));
        }
        let mut out = VertexSet::EMPTY;
        let mut suffix = 1;
        for _ in 0..count {
            let id = self.names.len() as Vertex;
            let name = if self.numeric {
                id.to_string()
            } else {
                while self.ids.contains_key(&format!("c{suffix}")) {
                    suffix += 1;
                }
                format!("c{suffix}")
            };
            self.ids.insert(name.clone(), id);
            self.names.push(name);
            out = out.with(id);
        }
        Ok(out)
    }
}

fn small_integer(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) || (token.len() > 1 && token.starts_with('0')) {
        return None;
    }
    token.parse::<usize>().ok().filter(|&v| v < MAX_VERTICES)
}

fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    let num = |s: &str| s.parse::<u128>().ok().filter(|_| s.bytes().all(|c| c.is_ascii_digit()));
    match (num(a), num(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then(a.cmp(b)),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

/// A parsed complex together with its label table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDocument {
    pub complex: Complex,
    pub labels: Labels,
}

/// A parsed trace: the decomposability level it claims and its steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceDocument {
    pub k: usize,
    pub trace: ExtensionTrace,
    pub labels: Labels,
}

#[derive(Default)]
struct RawComplex<'a> {
    ground: Option<(usize, Vec<&'a str>)>,
    facets: Vec<(usize, Vec<&'a str>)>,
    empty: bool,
}

impl<'a> RawComplex<'a> {
    fn tokens(&self) -> impl Iterator<Item = &'a str> + '_ {
        let ground = self.ground.iter().flat_map(|(_, t)| t.iter().copied());
        ground.chain(self.facets.iter().flat_map(|(_, t)| t.iter().copied()))
    }

    fn accept(&mut self, number: usize, line: &'a str) -> Result<()> {
        if let Some(rest) = line.strip_prefix("ground:") {
            if self.ground.is_some() {
                return Err(parse_error(number, "repeated ground header"));
            }
            self.ground = Some((number, rest.split_whitespace().collect()));
        } else if line == "{}" {
            self.empty = true;
        } else {
            self.facets.push((number, line.split_whitespace().collect()));
        }
        Ok(())
    }

    fn build(&self, labels: &Labels) -> Result<Complex> {
        let mut sets = Vec::with_capacity(self.facets.len());
        for (number, tokens) in &self.facets {
            sets.push((*number, labelled_set(labels, *number, tokens)?));
        }
        for (i, &(_, a)) in sets.iter().enumerate() {
            for &(_, b) in &sets[i + 1..] {
                let (inner, outer) = if a.is_subset(b) { (a, b) } else { (b, a) };
                if inner != outer && inner.is_subset(outer) {
                    return Err(Error::NotAnAntichain { inner: labels.render(inner), outer: labels.render(outer) });
                }
            }
        }
        let mut ground = sets.iter().fold(VertexSet::EMPTY, |g, &(_, s)| g.union(s));
        if let Some((number, tokens)) = &self.ground {
            let declared = labelled_set(labels, *number, tokens)?;
            if !ground.is_subset(declared) {
                return Err(parse_error(*number, "ground set misses facet vertices"));
            }
            ground = declared;
        }
        if self.empty {
            if !sets.is_empty() {
                return Err(parse_error(sets[0].0, "the empty complex has no facets"));
            }
            return Ok(Complex::empty(ground));
        }
        Complex::new(ground, sets.into_iter().map(|(_, s)| s))
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn labelled_set(labels: &Labels, line: usize, tokens: &[&str]) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for t in tokens {
        let v = labels.id(t).ok_or_else(|| Error::UnknownLabel(t.to_string()))?;
        if s.contains(v) {
            return Err(parse_error(line, format!("label {t} repeated")));
        }
        s = s.with(v);
    }
    Ok(s)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_complex(text: &str) -> Result<ComplexDocument> {
    let mut raw = RawComplex::default();
    for (number, line) in content_lines(text) {
        raw.accept(number, line)?;
    }
    let labels = Labels::from_tokens(raw.tokens())?;
    let complex = raw.build(&labels)?;
    Ok(ComplexDocument { complex, labels })
}

fn write_complex(out: &mut String, c: &Complex, labels: &Labels) {
    if c.ground() != c.vertices() {
        let _ = writeln!(out, "ground: {}", labels.render(c.ground()));
    }
    if c.kind() == Kind::Empty {
        out.push_str("{}\n");
    }
    for &f in c.facets() {
        let _ = writeln!(out, "{}", labels.render(f));
    }
}

pub fn serialize_complex(c: &Complex, labels: &Labels) -> String {
    let mut out = String::new();
    write_complex(&mut out, c, labels);
    out
}

/// Line number, facet labels and optional shedding labels of one `ADD` line.
type RawStep<'a> = (usize, Vec<&'a str>, Option<Vec<&'a str>>);

pub fn parse_trace(text: &str) -> Result<TraceDocument> {
    let mut lines = content_lines(text);
    let (number, first) = lines.next().ok_or_else(|| parse_error(1, "missing k header"))?;
    let k = first
        .strip_prefix("k:")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| parse_error(number, "expected `k: <int>`"))?;
    match lines.next() {
        Some((_, "START")) => {}
        Some((number, _)) => return Err(parse_error(number, "expected START")),
        None => return Err(parse_error(number + 1, "expected START")),
    }
    let mut start = RawComplex::default();
    let mut steps: Vec<RawStep> = Vec::new();
    for (number, line) in lines {
        if let Some(rest) = line.strip_prefix("ADD") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return Err(parse_error(number, "malformed ADD line"));
            }
            let mut parts = rest.split_whitespace();
            let facet: Vec<&str> = parts.by_ref().take_while(|&t| t != "SHED").collect();
            let shed: Vec<&str> = parts.collect();
            let annotated = rest.split_whitespace().any(|t| t == "SHED");
            if facet.is_empty() || (annotated && shed.is_empty()) {
                return Err(parse_error(number, "malformed ADD line"));
            }
            steps.push((number, facet, annotated.then_some(shed)));
        } else if !steps.is_empty() {
            return Err(parse_error(number, "expected ADD"));
        } else {
            start.accept(number, line)?;
        }
    }
    let step_tokens = steps.iter().flat_map(|(_, f, s)| f.iter().chain(s.iter().flatten()).copied());
    let labels = Labels::from_tokens(start.tokens().chain(step_tokens))?;
    let complex = start.build(&labels)?;
    let mut trace = ExtensionTrace::new(complex);
    for (number, facet, shed) in &steps {
        let facet = labelled_set(&labels, *number, facet)?;
        let shed = shed.as_ref().map(|s| labelled_set(&labels, *number, s)).transpose()?;
        trace.push(facet, shed);
    }
    Ok(TraceDocument { k, trace, labels })
}

pub fn serialize_trace(trace: &ExtensionTrace, k: usize, labels: &Labels) -> String {
    let mut out = format!("k: {k}\nSTART\n");
    write_complex(&mut out, trace.start(), labels);
    for TraceStep { facet, shedding } in trace.steps() {
        let _ = write!(out, "ADD {}", labels.render(*facet));
        if let Some(f) = shedding {
            let _ = write!(out, " SHED {}", labels.render(*f));
        }
        out.push('\n');
    }
    out
}
