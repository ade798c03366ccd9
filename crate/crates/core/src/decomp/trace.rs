use crate::complex::{Complex, Kind};
use crate::error::{Error, Result};
use crate::vertex_set::{Facet, VertexSet};

/// One added facet, optionally annotated with the face that sheds it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub facet: Facet,
    pub shedding: Option<VertexSet>,
}

/// A start complex and the facets added to it, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTrace {
    start: Complex,
    steps: Vec<TraceStep>,
}

impl ExtensionTrace {
    pub fn new(start: Complex) -> Self {
        ExtensionTrace { start, steps: Vec::new() }
    }

    pub fn from_steps(start: Complex, steps: Vec<TraceStep>) -> Self {
        ExtensionTrace { start, steps }
    }

    pub fn push(&mut self, facet: Facet, shedding: Option<VertexSet>) {
        self.steps.push(TraceStep { facet, shedding });
    }

    pub fn extend(&mut self, steps: impl IntoIterator<Item = TraceStep>) {
        self.steps.extend(steps);
    }

    pub fn start(&self) -> &Complex {
        &self.start
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<TraceStep> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn added_facets(&self) -> Vec<Facet> {
        self.steps.iter().map(|s| s.facet).collect()
    }

    /// Start plus the first `i` added facets. The ground set grows to cover new
    /// vertices.
    pub fn prefix(&self, i: usize) -> Result<Complex> {
        let added = &self.steps[..i];
        let ground = added.iter().fold(self.start.ground(), |g, s| g.union(s.facet));
        if added.is_empty() {
            return Ok(self.start.clone());
        }
        let facets = self.start.facets().iter().copied().chain(added.iter().map(|s| s.facet));
        Complex::new(ground, facets)
    }

    pub fn final_complex(&self) -> Result<Complex> {
        self.prefix(self.steps.len())
    }

    /// Checks that added facets are new, pairwise distinct and of the start's
    /// facet size.
    pub fn validate(&self) -> Result<()> {
        let size = match self.start.kind() {
            Kind::Proper => Some(self.start.max_facet_size()),
            _ => self.steps.first().map(|s| s.facet.len()),
        };
        let mut seen = std::collections::HashSet::new();
        for (i, s) in self.steps.iter().enumerate() {
            if Some(s.facet.len()) != size {
                return Err(Error::DimensionMismatch { expected: size.unwrap_or(0), actual: s.facet.len() });
            }
            if self.start.is_facet(s.facet) || !seen.insert(s.facet) {
                return Err(Error::Overlap(format!("step {} repeats {}", i + 1, s.facet.to_list_string())));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complex, face};

    #[test]
    fn prefixes_and_validation() {
        let mut t = ExtensionTrace::new(complex("123"));
        t.push(face("124"), None);
        t.push(face("125"), Some(face("5")));
        assert_eq!(t.prefix(1).unwrap(), complex("123 124"));
        assert_eq!(t.final_complex().unwrap(), complex("123 124 125"));
        assert!(t.validate().is_ok());
        t.push(face("124"), None);
        assert!(matches!(t.validate(), Err(Error::Overlap(_))));
        let mut bad = ExtensionTrace::new(complex("123"));
        bad.push(face("45"), None);
        assert!(matches!(bad.validate(), Err(Error::DimensionMismatch { .. })));
    }
}
