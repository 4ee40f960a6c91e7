use std::fmt;
use std::str::FromStr;

use crate::graph::{ComponentType, DynkinGraph};

/// The nine triangle singularities handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SingularityClass {
    E12,
    Z11,
    Q10,
    E13,
    Z12,
    Q11,
    E14,
    Z13,
    Q12,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown singularity class {given:?}; valid symbols: {}", SingularityClass::symbols())]
pub struct UnknownClass {
    pub given: String,
}

impl SingularityClass {
    pub const ALL: [SingularityClass; 9] = [
        Self::E12,
        Self::Z11,
        Self::Q10,
        Self::E13,
        Self::Z12,
        Self::Q11,
        Self::E14,
        Self::Z13,
        Self::Q12,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Self::E12 => "E12",
            Self::Z11 => "Z11",
            Self::Q10 => "Q10",
            Self::E13 => "E13",
            Self::Z12 => "Z12",
            Self::Q11 => "Q11",
            Self::E14 => "E14",
            Self::Z13 => "Z13",
            Self::Q12 => "Q12",
        }
    }

    /// Milnor number, the numeric suffix of the symbol.
    pub fn milnor(self) -> u32 {
        self.symbol()[1..].parse().expect("symbol suffix is numeric")
    }

    /// The essential basic graph.
    pub fn basic(self) -> DynkinGraph {
        let e = match self.symbol().as_bytes()[0] {
            b'E' => ComponentType::E8,
            b'Z' => ComponentType::E7,
            _ => ComponentType::E6,
        };
        let extra = match self {
            Self::E12 | Self::Z11 | Self::Q10 => None,
            Self::E13 | Self::Z12 | Self::Q11 => Some(ComponentType::BC1),
            Self::E14 | Self::Z13 | Self::Q12 => Some(ComponentType::G2),
        };
        DynkinGraph::new(std::iter::once(e).chain(extra))
    }

    fn symbols() -> String {
        Self::ALL.map(Self::symbol).join(", ")
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SingularityClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        Self::ALL
            .into_iter()
            .find(|c| c.symbol().eq_ignore_ascii_case(t))
            .ok_or_else(|| UnknownClass { given: s.to_string() })
    }
}
