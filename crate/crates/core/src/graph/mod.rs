//! Dynkin graphs as multisets of typed components, and their labeled
//! realizations.
//!
//! A [`DynkinGraph`] only records which connected types occur. The concrete
//! root basis lives in a [`LabeledGraph`]: vertices carry root norms and edges
//! carry the (nonzero) inner products between roots.

mod classify;
mod extend;
mod labeled;
mod name;
mod realize;

pub use classify::{classify, classify_component, NotADynkinGraph};
pub use extend::{
    check_extension, extend, extend_with, extension_data, ExtendedComponent, ExtendedGraph,
    ExtensionData, ExtensionError,
};
pub use labeled::{LabeledGraph, Norm};
pub use name::ParseError;
pub use realize::{gram, realize, realize_component};

use std::cmp::Ordering;
use std::fmt;

/// Read-only view of a component's type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    A(u32),
    D(u32),
    E(u32),
    G2,
    G1,
    BC1,
}

/// Type of a connected Dynkin graph: `A_k` (k ≥ 1), `D_l` (l ≥ 4), `E_6`, `E_7`,
/// `E_8`, `G_2`, `G_1` or `BC_1`.
///
/// The subscript ranges are enforced by the constructors, so `D_3` or `E_9`
/// cannot be built. `Ord` follows the canonical naming order (E before D before
/// A before G2, G1, BC1; larger subscripts first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentType(Kind);

/// Subscript outside the range allowed for a type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{letter}{subscript} is not a valid component type")]
pub struct RangeError {
    pub letter: char,
    pub subscript: u32,
}

impl ComponentType {
    pub const E6: Self = Self(Kind::E(6));
    pub const E7: Self = Self(Kind::E(7));
    pub const E8: Self = Self(Kind::E(8));
    pub const G2: Self = Self(Kind::G2);
    pub const G1: Self = Self(Kind::G1);
    pub const BC1: Self = Self(Kind::BC1);

    pub fn a(k: u32) -> Result<Self, RangeError> {
        if k >= 1 {
            Ok(Self(Kind::A(k)))
        } else {
            Err(RangeError { letter: 'A', subscript: k })
        }
    }

    pub fn d(l: u32) -> Result<Self, RangeError> {
        if l >= 4 {
            Ok(Self(Kind::D(l)))
        } else {
            Err(RangeError { letter: 'D', subscript: l })
        }
    }

    pub fn e(n: u32) -> Result<Self, RangeError> {
        if (6..=8).contains(&n) {
            Ok(Self(Kind::E(n)))
        } else {
            Err(RangeError { letter: 'E', subscript: n })
        }
    }

    pub fn kind(self) -> Kind {
        self.0
    }

    pub fn vertex_count(self) -> usize {
        match self.0 {
            Kind::A(n) | Kind::D(n) | Kind::E(n) => n as usize,
            Kind::G2 => 2,
            Kind::G1 | Kind::BC1 => 1,
        }
    }

    /// True for the simply-laced types A, D and E.
    pub fn is_ade(self) -> bool {
        matches!(self.0, Kind::A(_) | Kind::D(_) | Kind::E(_))
    }

    /// Every allowed type with exactly `n` vertices, in canonical order.
    pub fn with_vertex_count(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let Ok(m) = u32::try_from(n) else {
            return out;
        };
        for ty in [Self::e(m), Self::d(m), Self::a(m)].into_iter().flatten() {
            out.push(ty);
        }
        match n {
            2 => out.push(Self::G2),
            1 => out.extend([Self::G1, Self::BC1]),
            _ => {}
        }
        out
    }

    fn sort_key(self) -> (u8, std::cmp::Reverse<u32>) {
        use std::cmp::Reverse;
        match self.0 {
            Kind::E(n) => (0, Reverse(n)),
            Kind::D(n) => (1, Reverse(n)),
            Kind::A(n) => (2, Reverse(n)),
            Kind::G2 => (3, Reverse(0)),
            Kind::G1 => (4, Reverse(0)),
            Kind::BC1 => (5, Reverse(0)),
        }
    }
}

impl Ord for ComponentType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ComponentType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::A(n) => write!(f, "A{n}"),
            Kind::D(n) => write!(f, "D{n}"),
            Kind::E(n) => write!(f, "E{n}"),
            Kind::G2 => f.write_str("G2"),
            Kind::G1 => f.write_str("G1"),
            Kind::BC1 => f.write_str("BC1"),
        }
    }
}

/// A Dynkin graph, up to isomorphism: the multiset of its component types.
///
/// Components are kept in canonical order, so structural equality is multiset
/// equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DynkinGraph {
    components: Vec<ComponentType>,
}

impl DynkinGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(components: impl IntoIterator<Item = ComponentType>) -> Self {
        let mut components: Vec<_> = components.into_iter().collect();
        components.sort();
        Self { components }
    }

    pub fn components(&self) -> &[ComponentType] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn total_vertices(&self) -> usize {
        self.components.iter().map(|c| c.vertex_count()).sum()
    }

    pub fn is_ade(&self) -> bool {
        self.components.iter().all(|c| c.is_ade())
    }

    /// Disjoint union.
    pub fn union(&self, other: &DynkinGraph) -> DynkinGraph {
        Self::new(self.components.iter().chain(&other.components).copied())
    }

    /// Canonical name: components in canonical order joined by `+`, with
    /// repeated components written out (`A3+A3`). The empty graph is `""`.
    pub fn canonical_name(&self) -> String {
        self.to_string()
    }
}

impl FromIterator<ComponentType> for DynkinGraph {
    fn from_iter<I: IntoIterator<Item = ComponentType>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl fmt::Display for DynkinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for DynkinGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        name::parse_name(s)
    }
}

/// Parses names such as `A7+A4`, `E8 + G2` or `2A1+D4`.
pub fn parse_name(text: &str) -> Result<DynkinGraph, ParseError> {
    name::parse_name(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert!(ComponentType::a(0).is_err());
        assert!(ComponentType::d(3).is_err());
        assert!(ComponentType::e(5).is_err());
        assert!(ComponentType::e(9).is_err());
        assert_eq!(ComponentType::d(4).unwrap().vertex_count(), 4);
        assert_eq!(ComponentType::G2.vertex_count(), 2);
        assert_eq!(ComponentType::BC1.vertex_count(), 1);
    }

    #[test]
    fn canonical_order() {
        let g = DynkinGraph::new([
            ComponentType::a(4).unwrap(),
            ComponentType::BC1,
            ComponentType::a(7).unwrap(),
            ComponentType::G1,
            ComponentType::G2,
            ComponentType::d(5).unwrap(),
            ComponentType::E6,
            ComponentType::E8,
        ]);
        assert_eq!(g.canonical_name(), "E8+E6+D5+A7+A4+G2+G1+BC1");
        assert_eq!(g.total_vertices(), 8 + 6 + 5 + 7 + 4 + 2 + 1 + 1);
        assert_eq!(DynkinGraph::empty().canonical_name(), "");
    }

    #[test]
    fn types_by_vertex_count() {
        let names = |n| {
            ComponentType::with_vertex_count(n)
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(1), ["A1", "G1", "BC1"]);
        assert_eq!(names(2), ["A2", "G2"]);
        assert_eq!(names(4), ["D4", "A4"]);
        assert_eq!(names(7), ["E7", "D7", "A7"]);
        assert_eq!(names(9), ["D9", "A9"]);
    }
}
