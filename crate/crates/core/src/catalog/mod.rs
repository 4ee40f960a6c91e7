//! Two-step catalogs of the essential basic graphs.
//!
//! The catalog of a class holds every graph with only `A`, `D`, `E`
//! components that arises from the class's basic graph by exactly two
//! transformations, each of which may be elementary or tie. Intermediate
//! graphs are not filtered. Each member keeps the smallest witness in the
//! order (first step, second step), steps compared as in
//! [`StepKind`]'s `Ord`.

mod cache;
mod class;
mod format;

pub use cache::{cache_dir_from_env, CatalogCache, CACHE_DIR_VAR};
pub use class::{SingularityClass, UnknownClass};
pub use format::{engine_version, step_json, FormatError, FORMAT_REVISION};

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::graph::DynkinGraph;
use crate::transforms::{elementary_all, tie_all, StepKind, TransformError, TransformStep};

/// Two steps leading from the basic graph to a member.
pub type Witness = [TransformStep; 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub graph: DynkinGraph,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    class: SingularityClass,
    /// Keyed by canonical name.
    members: BTreeMap<String, Member>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Yes(Witness),
    No,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} has a component of type G2, G1 or BC1; only A/D/E graphs can be members")]
pub struct QueryNotAde(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub class: SingularityClass,
    pub bound: usize,
    /// Largest vertex count among members, `None` for an empty catalog.
    pub max_vertices: Option<usize>,
    /// Vertex count to number of members.
    pub histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{class}: members exceed r <= {bound}: {}", offending.join(", "))]
pub struct BoundViolation {
    pub class: SingularityClass,
    pub bound: usize,
    pub offending: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvalidCatalog {
    #[error("member {name:?} is stored under a different name than its graph {actual:?}")]
    Name { name: String, actual: String },
    #[error("member {0:?} has a non-A/D/E component")]
    NotAde(String),
    #[error("witness for {name:?} does not chain from {basic} to the member")]
    Chain { name: String, basic: String },
    #[error("witness for {name:?} fails to replay: {source}")]
    Replay {
        name: String,
        #[source]
        source: TransformError,
    },
}

fn expect_enumeration<T>(g: &DynkinGraph, r: Result<T, TransformError>) -> T {
    r.unwrap_or_else(|e| panic!("enumeration from {g} failed: {e}"))
}

/// All single steps from `g`, one minimal choice per output.
fn one_step(g: &DynkinGraph) -> Vec<TransformStep> {
    let step = |kind, output| TransformStep {
        kind,
        input: g.clone(),
        output,
    };
    let mut best: HashMap<DynkinGraph, StepKind> = HashMap::new();
    let elementary = expect_enumeration(g, elementary_all(g));
    let tie = expect_enumeration(g, tie_all(g));
    let candidates = elementary
        .into_iter()
        .map(|o| (o.graph, StepKind::Elementary(o.choice)))
        .chain(tie.into_iter().map(|o| (o.graph, StepKind::Tie(o.choice))));
    for (out, kind) in candidates {
        match best.get(&out) {
            Some(old) if *old <= kind => {}
            _ => {
                best.insert(out, kind);
            }
        }
    }
    let mut steps: Vec<TransformStep> = best.into_iter().map(|(out, k)| step(k, out)).collect();
    steps.sort_by_cached_key(|s| s.output.canonical_name());
    steps
}

fn witness_less(a: &Witness, b: &Witness) -> bool {
    (&a[0].kind, &a[1].kind) < (&b[0].kind, &b[1].kind)
}

/// Computes the catalog of `class` from scratch.
pub fn compute_pc_bar(class: SingularityClass) -> Catalog {
    let basic = class.basic();
    let first = one_step(&basic);
    let partial: Vec<BTreeMap<String, Member>> = first
        .par_iter()
        .map(|s1| {
            one_step(&s1.output)
                .into_iter()
                .filter(|s2| s2.output.is_ade())
                .map(|s2| {
                    let graph = s2.output.clone();
                    (graph.canonical_name(), Member { graph, witness: [s1.clone(), s2] })
                })
                .collect()
        })
        .collect();
    let mut members: BTreeMap<String, Member> = BTreeMap::new();
    for part in partial {
        for (name, m) in part {
            match members.get(&name) {
                Some(old) if !witness_less(&m.witness, &old.witness) => {}
                _ => {
                    members.insert(name, m);
                }
            }
        }
    }
    Catalog { class, members }
}

impl Catalog {
    pub fn class(&self) -> SingularityClass {
        self.class
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical-name order.
    pub fn members(&self) -> impl Iterator<Item = &Member> {
        self.members.values()
    }

    pub fn get(&self, g: &DynkinGraph) -> Option<&Member> {
        self.members.get(&g.canonical_name())
    }

    pub fn membership(&self, g: &DynkinGraph) -> Result<Membership, QueryNotAde> {
        if !g.is_ade() {
            return Err(QueryNotAde(g.canonical_name()));
        }
        Ok(match self.get(g) {
            Some(m) => Membership::Yes(m.witness.clone()),
            None => Membership::No,
        })
    }

    /// Checks names, the A/D/E filter, the chain basic -> intermediate ->
    /// member, and replays both steps of every witness.
    pub fn validate(&self) -> Result<(), InvalidCatalog> {
        let basic = self.class.basic();
        for (name, m) in &self.members {
            let actual = m.graph.canonical_name();
            if *name != actual {
                return Err(InvalidCatalog::Name { name: name.clone(), actual });
            }
            if !m.graph.is_ade() {
                return Err(InvalidCatalog::NotAde(name.clone()));
            }
            let [s1, s2] = &m.witness;
            if s1.input != basic || s1.output != s2.input || s2.output != m.graph {
                return Err(InvalidCatalog::Chain {
                    name: name.clone(),
                    basic: basic.canonical_name(),
                });
            }
            for s in &m.witness {
                s.replay().map_err(|source| InvalidCatalog::Replay { name: name.clone(), source })?;
            }
        }
        Ok(())
    }

    fn from_members(class: SingularityClass, members: impl IntoIterator<Item = Member>) -> Self {
        Catalog {
            class,
            members: members.into_iter().map(|m| (m.graph.canonical_name(), m)).collect(),
        }
    }
}

/// Checks `r <= milnor - 2` for every member.
pub fn milnor_bound_check(catalog: &Catalog) -> Result<BoundReport, BoundViolation> {
    let bound = catalog.class.milnor() as usize - 2;
    let mut histogram = BTreeMap::new();
    let mut offending = Vec::new();
    for (name, m) in &catalog.members {
        let r = m.graph.total_vertices();
        *histogram.entry(r).or_insert(0) += 1;
        if r > bound {
            offending.push(name.clone());
        }
    }
    if !offending.is_empty() {
        return Err(BoundViolation { class: catalog.class, bound, offending });
    }
    Ok(BoundReport {
        class: catalog.class,
        bound,
        max_vertices: histogram.keys().next_back().copied(),
        histogram,
    })
}
