use std::ops::Range;

use super::{realize_component, ComponentType, DynkinGraph, Kind, LabeledGraph, Norm};
use crate::rational::Rational;

/// How one component type is extended by the vertex for `-η`, `η` the
/// maximal root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionData {
    /// Maximal-root coefficients in the vertex order of [`realize_component`].
    pub coefficients: Vec<u32>,
    pub added_norm: Norm,
    /// `(base vertex, inner product with -η)` for every nonzero pairing.
    pub attachments: Vec<(usize, Rational)>,
}

/// Default extension table.
pub fn extension_data(ty: ComponentType) -> ExtensionData {
    let m1 = Rational::from_integer(-1);
    let (coefficients, added_norm, attachments) = match ty.kind() {
        Kind::A(1) => (vec![1], Norm::Long, vec![(0, Rational::from_integer(-2))]),
        Kind::A(k) => (vec![1; k as usize], Norm::Long, vec![(0, m1), (k as usize - 1, m1)]),
        Kind::D(l) => {
            let l = l as usize;
            let mut c = vec![2; l];
            c[0] = 1;
            c[l - 2] = 1;
            c[l - 1] = 1;
            (c, Norm::Long, vec![(1, m1)])
        }
        Kind::E(6) => (vec![1, 2, 3, 2, 1, 2], Norm::Long, vec![(5, m1)]),
        Kind::E(7) => (vec![2, 3, 4, 3, 2, 1, 2], Norm::Long, vec![(0, m1)]),
        Kind::E(8) => (vec![2, 4, 6, 5, 4, 3, 2, 3], Norm::Long, vec![(6, m1)]),
        Kind::E(n) => unreachable!("E{n} is not constructible"),
        Kind::G2 => (vec![2, 3], Norm::Long, vec![(0, m1)]),
        Kind::G1 => (vec![1], Norm::TwoThirds, vec![(0, Rational::new(-2, 3))]),
        Kind::BC1 => (vec![2], Norm::Long, vec![(0, m1)]),
    };
    ExtensionData {
        coefficients,
        added_norm,
        attachments,
    }
}

/// The extension table disagrees with `-η = -Σ nᵢ αᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtensionError {
    #[error("{ty}: expected {expected} coefficients, table has {found}")]
    Shape {
        ty: ComponentType,
        expected: usize,
        found: usize,
    },
    #[error("{ty}: coefficient vector is not in the kernel of the extended Gram matrix (row {row} gives {value})")]
    Identity {
        ty: ComponentType,
        row: usize,
        value: Rational,
    },
}

/// Extended graph of a single component: base vertices followed by the added
/// vertex.
fn extended_component(ty: ComponentType, data: &ExtensionData) -> LabeledGraph {
    let mut g = realize_component(ty);
    let added = g.add_vertex(data.added_norm);
    for &(v, label) in &data.attachments {
        g.set_edge(v, added, label);
    }
    g
}

/// Checks that the added vertex realizes `-η`: with coefficient 1 on the added
/// vertex, the full coefficient vector lies in the kernel of the extended
/// Gram matrix. Row `i < rank` says `(-η, αᵢ) = -Σⱼ nⱼ (αⱼ, αᵢ)`; the last row
/// says `(-η)² = η²`.
pub fn check_extension(ty: ComponentType, data: &ExtensionData) -> Result<(), ExtensionError> {
    let rank = ty.vertex_count();
    if data.coefficients.len() != rank || data.attachments.iter().any(|&(v, _)| v >= rank) {
        return Err(ExtensionError::Shape {
            ty,
            expected: rank,
            found: data.coefficients.len(),
        });
    }
    let g = extended_component(ty, data);
    let n: Vec<Rational> = data
        .coefficients
        .iter()
        .map(|&c| Rational::from_integer(c.into()))
        .chain(std::iter::once(Rational::from_integer(1)))
        .collect();
    for (row, value) in g.gram().mul_vec(&n).into_iter().enumerate() {
        if value != Rational::from_integer(0) {
            return Err(ExtensionError::Identity { ty, row, value });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedComponent {
    pub ty: ComponentType,
    /// Global ids of the component, base vertices first; the last one is the
    /// added vertex.
    pub vertices: Range<usize>,
}

impl ExtendedComponent {
    pub fn added(&self) -> usize {
        self.vertices.end - 1
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Extended Dynkin graph with maximal-root coefficients.
///
/// Vertex ordering: components in canonical order; inside each component the
/// base vertices in [`realize_component`] order, then the added vertex. Witness
/// indices refer to this ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedGraph {
    graph: LabeledGraph,
    coefficients: Vec<u32>,
    components: Vec<ExtendedComponent>,
    component_of: Vec<usize>,
}

impl ExtendedGraph {
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coefficients
    }

    pub fn coefficient(&self, v: usize) -> u32 {
        self.coefficients[v]
    }

    pub fn components(&self) -> &[ExtendedComponent] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn added(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.added()).collect()
    }

    pub fn is_added(&self, v: usize) -> bool {
        self.components[self.component_of[v]].added() == v
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// e.g. `#9 E7[7] ○ n=1` or `#7 E7[added] ○ n=1`.
    pub fn describe_vertex(&self, v: usize) -> String {
        let comp = &self.components[self.component_of[v]];
        let local = if comp.added() == v {
            "added".to_string()
        } else {
            (v - comp.vertices.start).to_string()
        };
        format!(
            "#{v} {}[{local}] {} n={}",
            comp.ty,
            self.graph.norm(v),
            self.coefficients[v]
        )
    }
}

/// Extends every component with the default table.
pub fn extend(g: &DynkinGraph) -> ExtendedGraph {
    extend_with(g, extension_data).expect("built-in extension table satisfies the -η identity")
}

/// Extends every component with a caller-supplied table, validating each
/// entry first.
pub fn extend_with(
    g: &DynkinGraph,
    table: impl Fn(ComponentType) -> ExtensionData,
) -> Result<ExtendedGraph, ExtensionError> {
    let mut graph = LabeledGraph::new();
    let mut coefficients = Vec::new();
    let mut components = Vec::new();
    let mut component_of = Vec::new();
    for (i, &ty) in g.components().iter().enumerate() {
        let data = table(ty);
        check_extension(ty, &data)?;
        let piece = extended_component(ty, &data);
        let start = graph.append(&piece);
        coefficients.extend_from_slice(&data.coefficients);
        coefficients.push(1);
        component_of.extend(std::iter::repeat_n(i, piece.len()));
        components.push(ExtendedComponent {
            ty,
            vertices: start..start + piece.len(),
        });
    }
    Ok(ExtendedGraph {
        graph,
        coefficients,
        components,
        component_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_name;

    #[test]
    fn bc1_and_g1() {
        let x = extend(&parse_name("BC1").unwrap());
        assert_eq!(x.graph().norms(), [Norm::Half, Norm::Long]);
        assert_eq!(x.coefficients(), [2, 1]);
        assert_eq!(x.graph().inner_product(0, 1), Rational::from_integer(-1));

        let x = extend(&parse_name("G1").unwrap());
        assert_eq!(x.graph().norms(), [Norm::TwoThirds, Norm::TwoThirds]);
        assert_eq!(x.coefficients(), [1, 1]);
        assert_eq!(x.graph().inner_product(0, 1), Rational::new(-2, 3));
    }

    #[test]
    fn a1_is_doubled_edge() {
        let x = extend(&parse_name("A1").unwrap());
        assert_eq!(x.coefficients(), [1, 1]);
        assert_eq!(x.graph().inner_product(0, 1), Rational::from_integer(-2));
    }

    #[test]
    fn e8_coefficients() {
        let x = extend(&parse_name("E8").unwrap());
        assert_eq!(x.len(), 9);
        let mut base: Vec<u32> = x.coefficients()[..8].to_vec();
        base.sort_unstable();
        assert_eq!(base, [2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(x.coefficient(8), 1);
    }

    #[test]
    fn ordering_and_components() {
        let x = extend(&parse_name("G2+E7").unwrap());
        assert_eq!(x.components()[0].ty, ComponentType::E7);
        assert_eq!(x.components()[0].vertices, 0..8);
        assert_eq!(x.components()[1].vertices, 8..11);
        assert_eq!(x.added(), [7, 10]);
        assert!(x.is_added(7) && !x.is_added(6));
        assert_eq!(x.describe_vertex(7), "#7 E7[added] ○ n=1");
        assert_eq!(x.describe_vertex(9), "#9 G2[1] ● n=3");
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let g = parse_name("E7").unwrap();
        let err = extend_with(&g, |ty| {
            let mut d = extension_data(ty);
            d.coefficients[3] += 1;
            d
        })
        .unwrap_err();
        assert!(matches!(err, ExtensionError::Identity { .. }), "{err}");

        let err = extend_with(&g, |ty| {
            let mut d = extension_data(ty);
            d.coefficients.pop();
            d
        })
        .unwrap_err();
        assert!(matches!(err, ExtensionError::Shape { .. }));
    }
}
