//! JSON catalog files.
//!
//! ```json
//! {
//!   "class": "Z13",
//!   "milnor": 13,
//!   "basic": "E7+G2",
//!   "engine_version": "…",
//!   "members": [
//!     { "name": "A7+A4",
//!       "witness": [
//!         { "kind": "tie", "input": "E7+G2", "output": "E8+G2", "a": [..], "b": [..] },
//!         { "kind": "tie", "input": "E8+G2", "output": "A7+A4", "a": [..], "b": [..] } ] }
//!   ]
//! }
//! ```
//!
//! Members are sorted by name. Vertex ids refer to the extended graph of the
//! step's input. The empty graph is written as `""`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Catalog, Member, SingularityClass, UnknownClass};
use crate::graph::{extension_data, parse_name, ComponentType, DynkinGraph, ParseError};
use crate::transforms::{ElementaryChoice, StepKind, TieChoice, TransformStep, MAX_COMPONENT_VERTICES};

/// Bumped whenever the file layout or the enumeration semantics change.
pub const FORMAT_REVISION: u32 = 1;

/// Short hash of everything that determines catalog contents: crate version,
/// format revision, extension tables and the per-component size limit.
pub fn engine_version() -> String {
    let mut h = Sha256::new();
    h.update(format!("dynkin-core {}\n", env!("CARGO_PKG_VERSION")));
    h.update(format!("format {FORMAT_REVISION}\nlimit {MAX_COMPONENT_VERTICES}\n"));
    let mut types = vec![ComponentType::G2, ComponentType::G1, ComponentType::BC1];
    types.extend([ComponentType::E6, ComponentType::E7, ComponentType::E8]);
    types.extend((1..=4).map(|k| ComponentType::a(k).expect("valid")));
    types.extend((4..=6).map(|l| ComponentType::d(l).expect("valid")));
    for ty in types {
        h.update(format!("{ty} {:?}\n", extension_data(ty)));
    }
    h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Class(#[from] UnknownClass),
    #[error("bad graph name {name:?}: {source}")]
    Name {
        name: String,
        #[source]
        source: ParseError,
    },
    #[error("{field} is {found}, expected {expected} for this class")]
    Mismatch {
        field: &'static str,
        found: String,
        expected: String,
    },
    #[error("members are not strictly sorted by name at {0:?}")]
    Unsorted(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileCatalog {
    class: String,
    milnor: u32,
    basic: String,
    engine_version: String,
    members: Vec<FileMember>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileMember {
    name: String,
    witness: [FileStep; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum FileStep {
    Elementary {
        input: String,
        output: String,
        removed: Vec<usize>,
    },
    Tie {
        input: String,
        output: String,
        a: Vec<usize>,
        b: Vec<usize>,
    },
}

fn to_file_step(s: &TransformStep) -> FileStep {
    let input = s.input.canonical_name();
    let output = s.output.canonical_name();
    match &s.kind {
        StepKind::Elementary(c) => FileStep::Elementary {
            input,
            output,
            removed: c.removed.clone(),
        },
        StepKind::Tie(c) => FileStep::Tie {
            input,
            output,
            a: c.a.clone(),
            b: c.b.clone(),
        },
    }
}

/// One step in the catalog-file encoding.
pub fn step_json(s: &TransformStep) -> serde_json::Value {
    serde_json::to_value(to_file_step(s)).expect("step serializes")
}

fn graph(name: &str) -> Result<DynkinGraph, FormatError> {
    parse_name(name).map_err(|source| FormatError::Name {
        name: name.to_string(),
        source,
    })
}

fn from_file_step(s: FileStep) -> Result<TransformStep, FormatError> {
    Ok(match s {
        FileStep::Elementary { input, output, removed } => TransformStep {
            kind: StepKind::Elementary(ElementaryChoice { removed }),
            input: graph(&input)?,
            output: graph(&output)?,
        },
        FileStep::Tie { input, output, a, b } => TransformStep {
            kind: StepKind::Tie(TieChoice { a, b }),
            input: graph(&input)?,
            output: graph(&output)?,
        },
    })
}

impl Catalog {
    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let file = FileCatalog {
            class: self.class.to_string(),
            milnor: self.class.milnor(),
            basic: self.class.basic().canonical_name(),
            engine_version: engine_version(),
            members: self
                .members()
                .map(|m| FileMember {
                    name: m.graph.canonical_name(),
                    witness: [to_file_step(&m.witness[0]), to_file_step(&m.witness[1])],
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("catalog serializes");
        s.push('\n');
        s
    }

    /// Parses a catalog file and returns it with its recorded engine
    /// version. Structure is checked here; witnesses are replayed by
    /// [`Catalog::validate`].
    pub fn from_json(text: &str) -> Result<(Catalog, String), FormatError> {
        let file: FileCatalog = serde_json::from_str(text)?;
        let class: SingularityClass = file.class.parse()?;
        let mismatch = |field, found: String, expected: String| {
            Err(FormatError::Mismatch { field, found, expected })
        };
        if file.milnor != class.milnor() {
            return mismatch("milnor", file.milnor.to_string(), class.milnor().to_string());
        }
        if graph(&file.basic)? != class.basic() {
            return mismatch("basic", file.basic, class.basic().canonical_name());
        }
        let mut members = Vec::with_capacity(file.members.len());
        let mut previous: Option<String> = None;
        for m in file.members {
            let g = graph(&m.name)?;
            let name = g.canonical_name();
            if name != m.name {
                return mismatch("member name", m.name, name);
            }
            if previous.as_ref().is_some_and(|p| *p >= name) {
                return Err(FormatError::Unsorted(name));
            }
            previous = Some(name);
            let [s1, s2] = m.witness;
            members.push(Member {
                graph: g,
                witness: [from_file_step(s1)?, from_file_step(s2)?],
            });
        }
        Ok((Catalog::from_members(class, members), file.engine_version))
    }
}
