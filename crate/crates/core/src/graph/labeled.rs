use std::collections::BTreeMap;
use std::fmt;

use crate::rational::{Matrix, Rational};

/// Norm (self inner product) of a root basis vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Norm {
    /// α² = 2, drawn ○.
    Long,
    /// δ² = 1/2, drawn ⊗.
    Half,
    /// γ² = 2/3, drawn ●.
    TwoThirds,
}

impl Norm {
    pub fn value(self) -> Rational {
        match self {
            Norm::Long => Rational::from_integer(2),
            Norm::Half => Rational::new(1, 2),
            Norm::TwoThirds => Rational::new(2, 3),
        }
    }

    pub fn from_value(value: Rational) -> Option<Norm> {
        [Norm::Long, Norm::Half, Norm::TwoThirds]
            .into_iter()
            .find(|n| n.value() == value)
    }

    pub fn glyph(self) -> char {
        match self {
            Norm::Long => '○',
            Norm::Half => '⊗',
            Norm::TwoThirds => '●',
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.glyph())
    }
}

/// A graph whose vertices are roots and whose edges carry nonzero inner
/// products. Vertex ids are positions in [`LabeledGraph::norms`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    norms: Vec<Norm>,
    edges: BTreeMap<(usize, usize), Rational>,
}

impl LabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, norm: Norm) -> usize {
        self.norms.push(norm);
        self.norms.len() - 1
    }

    /// Sets the inner product between two distinct vertices. A zero label
    /// removes the edge.
    ///
    /// Panics on a self edge or an unknown vertex.
    pub fn set_edge(&mut self, a: usize, b: usize, label: Rational) {
        assert!(a != b, "self edge on vertex {a}");
        assert!(a < self.len() && b < self.len(), "edge ({a}, {b}) out of range");
        let key = (a.min(b), a.max(b));
        if label == Rational::from_integer(0) {
            self.edges.remove(&key);
        } else {
            self.edges.insert(key, label);
        }
    }

    pub fn len(&self) -> usize {
        self.norms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.norms.is_empty()
    }

    pub fn norms(&self) -> &[Norm] {
        &self.norms
    }

    pub fn norm(&self, v: usize) -> Norm {
        self.norms[v]
    }

    /// Edges as `((a, b), label)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), Rational)> + '_ {
        self.edges.iter().map(|(&k, &v)| (k, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn inner_product(&self, a: usize, b: usize) -> Rational {
        if a == b {
            return self.norms[a].value();
        }
        self.edges
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or_else(|| Rational::from_integer(0))
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (&(a, b), &label) in &self.edges {
            adj[a].push((b, label));
            adj[b].push((a, label));
        }
        adj
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> LabeledGraph {
        let mut sub = LabeledGraph::new();
        for &v in vertices {
            sub.add_vertex(self.norms[v]);
        }
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                let ip = self.inner_product(a, b);
                if ip != Rational::from_integer(0) {
                    sub.set_edge(i, j, ip);
                }
            }
        }
        sub
    }

    /// Appends a copy of `other`; returns the id offset of the copied vertices.
    pub fn append(&mut self, other: &LabeledGraph) -> usize {
        let offset = self.len();
        self.norms.extend_from_slice(&other.norms);
        for (&(a, b), &label) in &other.edges {
            self.edges.insert((a + offset, b + offset), label);
        }
        offset
    }

    /// Gram matrix in vertex order.
    pub fn gram(&self) -> Matrix {
        let n = self.len();
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.inner_product(i, j);
            }
        }
        m
    }
}
