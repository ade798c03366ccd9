use std::fmt;

use crate::complex::{Complex, Kind};
use crate::error::{Error, Result};
use crate::vertex_set::{Vertex, VertexSet};

use super::gluing;

/// Witness that a complex is k-decomposable.
///
/// Internal nodes name a shedding face; the children certify the deletion and
/// the link of that face. `Simplex` marks a single-facet complex and `Trivial`
/// a void, empty or 0-dimensional one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionTree {
    Simplex,
    Trivial,
    Shed { face: VertexSet, deletion: Box<DecompositionTree>, link: Box<DecompositionTree> },
}

impl DecompositionTree {
    pub fn root_face(&self) -> Option<VertexSet> {
        match self {
            DecompositionTree::Shed { face, .. } => Some(*face),
            _ => None,
        }
    }

    /// Largest shedding-face dimension used anywhere in the tree.
    pub fn max_face_dimension(&self) -> Option<usize> {
        match self {
            DecompositionTree::Shed { face, deletion, link } => {
                let here = face.len() - 1;
                Some(
                    [Some(here), deletion.max_face_dimension(), link.max_face_dimension()]
                        .into_iter()
                        .flatten()
                        .max()
                        .unwrap_or(here),
                )
            }
            _ => None,
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            DecompositionTree::Shed { deletion, link, .. } => 1 + deletion.internal_nodes() + link.internal_nodes(),
            _ => 0,
        }
    }

    pub(crate) fn relabel(&self, map: &[Vertex]) -> DecompositionTree {
        match self {
            DecompositionTree::Shed { face, deletion, link } => DecompositionTree::Shed {
                face: face.map(map),
                deletion: Box::new(deletion.relabel(map)),
                link: Box::new(link.relabel(map)),
            },
            leaf => leaf.clone(),
        }
    }

    /// Replays the tree on `c`: every face must have dimension at most `k` and
    /// satisfy the gluing criterion on its node's complex, and every leaf must
    /// match its complex.
    pub fn verify(&self, c: &Complex, k: usize) -> Result<()> {
        match self {
            DecompositionTree::Simplex => {
                if c.is_simplex() {
                    Ok(())
                } else {
                    Err(Error::BadWitness(format!("simplex leaf on {c:?}")))
                }
            }
            DecompositionTree::Trivial => match c.kind() {
                Kind::Void | Kind::Empty => Ok(()),
                Kind::Proper if c.max_facet_size() == 1 => Ok(()),
                Kind::Proper => Err(Error::BadWitness(format!("trivial leaf on {c:?}"))),
            },
            DecompositionTree::Shed { face, deletion, link } => {
                if face.is_empty() || face.len() > k + 1 {
                    return Err(Error::BadWitness(format!("face {face:?} exceeds dimension {k}")));
                }
                if !c.is_pure() || !c.has_face(*face) || !gluing(c, *face) {
                    return Err(Error::BadWitness(format!("{face:?} is not a shedding face of {c:?}")));
                }
                deletion.verify(&c.deletion(*face), k)?;
                link.verify(&c.link_unchecked(*face), k)
            }
        }
    }

    /// Parenthesised rendering: `(shed [1 5] (del …) (lk …))`, leaves
    /// `simplex` and `trivial`.
    pub fn render<F>(&self, label: &F) -> String
    where
        F: Fn(Vertex) -> String,
    {
        let mut out = String::new();
        self.render_into(label, &mut out);
        out
    }

    fn render_into<F>(&self, label: &F, out: &mut String)
    where
        F: Fn(Vertex) -> String,
    {
        match self {
            DecompositionTree::Simplex => out.push_str("simplex"),
            DecompositionTree::Trivial => out.push_str("trivial"),
            DecompositionTree::Shed { face, deletion, link } => {
                let names: Vec<String> = face.iter().map(label).collect();
                out.push_str("(shed [");
                out.push_str(&names.join(" "));
                out.push_str("] (del ");
                deletion.render_into(label, out);
                out.push_str(") (lk ");
                link.render_into(label, out);
                out.push_str("))");
            }
        }
    }
}

impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|v: Vertex| v.to_string()))
    }
}
