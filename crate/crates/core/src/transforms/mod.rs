//! Elementary and tie transformations of Dynkin graphs.
//!
//! Both transformations start from the extended graph [`extend`]`(g)`. Vertex
//! ids in the choice types refer to the ordering documented on
//! [`ExtendedGraph`], so a stored choice replays identically on every run.
//!
//! Choices are totally ordered ([`StepKind`]'s `Ord`): elementary before tie,
//! then vertex sets in colexicographic order (the set whose largest element of
//! the symmetric difference is smaller comes first), `A` before `B`. The
//! `*_all` enumerators keep the minimal choice per distinct output.

mod enumerate;

pub use enumerate::{elementary_all, tie_all, MAX_COMPONENT_VERTICES};

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::graph::{
    classify, extend, ComponentType, DynkinGraph, ExtendedGraph, LabeledGraph, NotADynkinGraph,
    Norm,
};
use crate::rational::Rational;

/// Vertices removed by an elementary transformation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementaryChoice {
    /// Sorted extended-graph vertex ids.
    pub removed: Vec<usize>,
}

/// The sets `A` (removed) and `B` (joined to the new vertex) of a tie
/// transformation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TieChoice {
    /// Sorted extended-graph vertex ids.
    pub a: Vec<usize>,
    /// Sorted extended-graph vertex ids.
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StepKind {
    Elementary(ElementaryChoice),
    Tie(TieChoice),
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::Elementary(_) => "elementary",
            StepKind::Tie(_) => "tie",
        }
    }
}

/// One applied transformation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransformStep {
    pub kind: StepKind,
    pub input: DynkinGraph,
    pub output: DynkinGraph,
}

impl TransformStep {
    /// Re-applies the choice to `input` and checks that `output` comes out.
    pub fn replay(&self) -> Result<(), TransformError> {
        let got = apply(&self.input, &self.kind)?;
        if got == self.output {
            Ok(())
        } else {
            Err(TransformError::ReplayMismatch {
                expected: self.output.canonical_name(),
                got: got.canonical_name(),
            })
        }
    }
}

impl fmt::Display for TransformStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: &DynkinGraph| {
            if g.is_empty() {
                "(empty)".to_string()
            } else {
                g.canonical_name()
            }
        };
        write!(f, "{} {} -> {}", self.kind.name(), show(&self.input), show(&self.output))
    }
}

/// Distinct output of an enumeration with its minimal choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome<C> {
    pub graph: DynkinGraph,
    pub choice: C,
}

/// Colexicographic comparison of two sorted vertex sets.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let mut ia = a.iter().rev();
    let mut ib = b.iter().rev();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x != y => return x.cmp(y),
            _ => {}
        }
    }
}

impl Ord for ElementaryChoice {
    fn cmp(&self, other: &Self) -> Ordering {
        colex_cmp(&self.removed, &other.removed)
    }
}

impl PartialOrd for ElementaryChoice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TieChoice {
    fn cmp(&self, other: &Self) -> Ordering {
        colex_cmp(&self.a, &other.a).then_with(|| colex_cmp(&self.b, &other.b))
    }
}

impl PartialOrd for TieChoice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StepKind {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (StepKind::Elementary(a), StepKind::Elementary(b)) => a.cmp(b),
            (StepKind::Tie(a), StepKind::Tie(b)) => a.cmp(b),
            (StepKind::Elementary(_), StepKind::Tie(_)) => Ordering::Less,
            (StepKind::Tie(_), StepKind::Elementary(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for StepKind {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A choice violating the constraints of its transformation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvalidChoice {
    #[error("vertex {vertex} does not exist (extended graph has {len} vertices)")]
    UnknownVertex { vertex: usize, len: usize },
    #[error("vertex {0} is listed twice")]
    Duplicate(usize),
    #[error("component {index} ({ty}) has no removed vertex; at least one vertex per component is required")]
    NothingRemoved { index: usize, ty: ComponentType },
    #[error("condition <a> violated: A and B share vertex {0}")]
    Overlap(usize),
    #[error("#B = {0} exceeds the bound 0 <= #B <= 3")]
    TooManyB(usize),
    #[error("component {index} ({ty}) has no vertex in A; l = #(V ∩ A) >= 1 is required")]
    EmptyA { index: usize, ty: ComponentType },
    #[error("condition <b> violated on component {index} ({ty}): gcd(N, n_1, ..., n_l) = {gcd}")]
    Gcd {
        index: usize,
        ty: ComponentType,
        gcd: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("invalid choice: {0}")]
    InvalidChoice(#[from] InvalidChoice),
    #[error(transparent)]
    NotADynkinGraph(#[from] NotADynkinGraph),
    #[error("component {ty} has {vertices} extended vertices; exhaustive enumeration supports at most {limit}")]
    TooLarge {
        ty: ComponentType,
        vertices: usize,
        limit: usize,
    },
    #[error("replay produced {got:?}, witness records {expected:?}")]
    ReplayMismatch { expected: String, got: String },
}

fn check_ids(x: &ExtendedGraph, ids: &[usize]) -> Result<(), InvalidChoice> {
    let mut seen = vec![false; x.len()];
    for &v in ids {
        if v >= x.len() {
            return Err(InvalidChoice::UnknownVertex { vertex: v, len: x.len() });
        }
        if seen[v] {
            return Err(InvalidChoice::Duplicate(v));
        }
        seen[v] = true;
    }
    Ok(())
}

pub fn validate_elementary(x: &ExtendedGraph, choice: &ElementaryChoice) -> Result<(), InvalidChoice> {
    check_ids(x, &choice.removed)?;
    for (index, comp) in x.components().iter().enumerate() {
        if !choice.removed.iter().any(|v| comp.vertices.contains(v)) {
            return Err(InvalidChoice::NothingRemoved { index, ty: comp.ty });
        }
    }
    Ok(())
}

pub fn validate_tie(x: &ExtendedGraph, choice: &TieChoice) -> Result<(), InvalidChoice> {
    check_ids(x, &choice.a)?;
    check_ids(x, &choice.b)?;
    if let Some(&v) = choice.a.iter().find(|v| choice.b.contains(v)) {
        return Err(InvalidChoice::Overlap(v));
    }
    if choice.b.len() > 3 {
        return Err(InvalidChoice::TooManyB(choice.b.len()));
    }
    for (index, comp) in x.components().iter().enumerate() {
        let in_a: Vec<u32> = choice
            .a
            .iter()
            .filter(|v| comp.vertices.contains(v))
            .map(|&v| x.coefficient(v))
            .collect();
        if in_a.is_empty() {
            return Err(InvalidChoice::EmptyA { index, ty: comp.ty });
        }
        let n: u32 = choice
            .b
            .iter()
            .filter(|v| comp.vertices.contains(v))
            .map(|&v| x.coefficient(v))
            .sum();
        let gcd = in_a.iter().fold(n, |acc, &c| acc.gcd(&c));
        if gcd != 1 {
            return Err(InvalidChoice::Gcd { index, ty: comp.ty, gcd });
        }
    }
    Ok(())
}

/// Extended graph minus `removed`, surviving vertices in their original order.
pub fn elementary_residual(x: &ExtendedGraph, removed: &[usize]) -> LabeledGraph {
    let keep: Vec<usize> = (0..x.len()).filter(|v| !removed.contains(v)).collect();
    x.graph().induced(&keep)
}

/// Extended graph minus `A`, plus a new ○ (the last vertex) joined to every
/// vertex of `B` by an edge of inner product -1.
pub fn tie_residual(x: &ExtendedGraph, a: &[usize], b: &[usize]) -> LabeledGraph {
    let keep: Vec<usize> = (0..x.len()).filter(|v| !a.contains(v)).collect();
    let mut g = x.graph().induced(&keep);
    let new = g.add_vertex(Norm::Long);
    for v in b {
        let pos = keep.iter().position(|k| k == v).expect("B is disjoint from A");
        g.set_edge(pos, new, Rational::from_integer(-1));
    }
    g
}

/// Applies a single transformation with the given choice.
pub fn apply(g: &DynkinGraph, kind: &StepKind) -> Result<DynkinGraph, TransformError> {
    let x = extend(g);
    let raw = match kind {
        StepKind::Elementary(c) => {
            validate_elementary(&x, c)?;
            elementary_residual(&x, &c.removed)
        }
        StepKind::Tie(c) => {
            validate_tie(&x, c)?;
            tie_residual(&x, &c.a, &c.b)
        }
    };
    Ok(classify(&raw)?)
}
