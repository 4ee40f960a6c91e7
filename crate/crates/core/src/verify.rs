//! End-to-end regression checks behind the `verify` command.
//!
//! Each check reports a name, pass or fail, and a one-line detail. Details
//! contain no timings, so repeated runs print identical text.

use std::collections::BTreeMap;

use crate::catalog::{compute_pc_bar, milnor_bound_check, Catalog, Membership, SingularityClass};
use crate::graph::{check_extension, classify, extend, ComponentType, DynkinGraph, ExtensionData};
use crate::lattice::{root_lattice, short_vectors};
use crate::oracle::classify_labeled;
use crate::parse_name;
use crate::transforms::{elementary_all, elementary_residual, tie_all, tie_residual, StepKind};

/// Member counts per class, frozen from the first verified computation.
pub const GOLDEN_MEMBER_COUNTS: [(SingularityClass, usize); 9] = [
    (SingularityClass::E12, 165),
    (SingularityClass::Z11, 120),
    (SingularityClass::Q10, 73),
    (SingularityClass::E13, 255),
    (SingularityClass::Z12, 186),
    (SingularityClass::Q11, 111),
    (SingularityClass::E14, 343),
    (SingularityClass::Z13, 251),
    (SingularityClass::Q12, 154),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, outcome: Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Self { name, passed, detail }
    }

    /// `PASS name: detail` or `FAIL name: detail`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(name: &str) -> DynkinGraph {
    parse_name(name).expect("fixed graph name")
}

/// Z13 contains A7+A4 (two ties through E8+G2) and D8+A2, with replayable
/// witnesses.
pub fn check_z13_example(z13: &Catalog) -> Result<String, String> {
    let mut parts = Vec::new();
    for name in ["A7+A4", "D8+A2"] {
        let Ok(Membership::Yes(w)) = z13.membership(&g(name)) else {
            return Err(format!("{name} is not a member of Z13"));
        };
        for s in &w {
            s.replay().map_err(|e| format!("{name}: {e}"))?;
        }
        ensure(w[0].input == z13.class().basic() && w[1].output == g(name), || {
            format!("{name}: witness does not chain")
        })?;
        if name == "A7+A4" {
            let ties = w.iter().all(|s| matches!(s.kind, StepKind::Tie(_)));
            ensure(ties && w[0].output == g("E8+G2"), || {
                format!("A7+A4 witness {} ; {} does not tie through E8+G2", w[0], w[1])
            })?;
        }
        parts.push(format!("{name} via {} ; {}", w[0], w[1]));
    }
    Ok(parts.join(" | "))
}

/// Essential basic graphs and Milnor numbers.
pub fn check_class_table() -> Result<String, String> {
    let expected = [
        ("E12", 12, "E8"),
        ("Z11", 11, "E7"),
        ("Q10", 10, "E6"),
        ("E13", 13, "E8+BC1"),
        ("Z12", 12, "E7+BC1"),
        ("Q11", 11, "E6+BC1"),
        ("E14", 14, "E8+G2"),
        ("Z13", 13, "E7+G2"),
        ("Q12", 12, "E6+G2"),
    ];
    for (class, (symbol, milnor, basic)) in SingularityClass::ALL.into_iter().zip(expected) {
        let got = (class.symbol(), class.milnor(), class.basic().canonical_name());
        ensure(got == (symbol, milnor, basic.to_string()), || {
            format!("{symbol}: got {got:?}")
        })?;
    }
    Ok("9 classes match".into())
}

/// `r <= milnor - 2` for every member of every catalog.
pub fn check_milnor_bound(catalogs: &[Catalog]) -> Result<String, String> {
    let mut parts = Vec::new();
    for c in catalogs {
        let report = milnor_bound_check(c).map_err(|e| e.to_string())?;
        let max = report.max_vertices.map_or("-".into(), |r| r.to_string());
        parts.push(format!("{} max r={max}<={}", c.class(), report.bound));
    }
    Ok(parts.join(", "))
}

/// Test instances for the extension identity.
pub const EXTENSION_SAMPLES: [&str; 10] = ["A1", "A5", "D4", "D7", "E6", "E7", "E8", "G2", "G1", "BC1"];

/// The added vertex's Gram row equals `-Σ nᵢ (row i)` under `table`.
pub fn check_extension_identity(table: &dyn Fn(ComponentType) -> ExtensionData) -> Result<String, String> {
    for name in EXTENSION_SAMPLES {
        let ty = g(name).components()[0];
        check_extension(ty, &table(ty)).map_err(|e| e.to_string())?;
    }
    Ok(format!("{} types", EXTENSION_SAMPLES.len()))
}

/// Single-component graphs with at most `max_vertices` vertices.
pub fn single_components(max_vertices: u32) -> Vec<DynkinGraph> {
    let mut types = vec![ComponentType::G2, ComponentType::G1, ComponentType::BC1];
    types.extend((1..=max_vertices).map(|k| ComponentType::a(k).expect("valid")));
    types.extend((4..=max_vertices).map(|l| ComponentType::d(l).expect("valid")));
    types.extend([ComponentType::E6, ComponentType::E7, ComponentType::E8]);
    types.into_iter().map(|t| DynkinGraph::new([t])).collect()
}

/// Structural recognition agrees with Gram-isomorphism recognition on the
/// residual graph of every enumerated outcome.
pub fn check_recognition_oracle(max_vertices: u32) -> Result<String, String> {
    let mut checked = 0usize;
    for input in single_components(max_vertices) {
        let x = extend(&input);
        let mut residuals = Vec::new();
        for o in elementary_all(&input).map_err(|e| e.to_string())? {
            residuals.push((o.graph, elementary_residual(&x, &o.choice.removed)));
        }
        for o in tie_all(&input).map_err(|e| e.to_string())? {
            residuals.push((o.graph, tie_residual(&x, &o.choice.a, &o.choice.b)));
        }
        for (expected, lg) in residuals {
            let structural = classify(&lg).ok();
            let oracle = classify_labeled(&lg);
            ensure(structural == oracle && oracle.as_ref() == Some(&expected), || {
                format!("{input} -> {expected}: structural {structural:?}, oracle {oracle:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} outcomes of single components up to {max_vertices} vertices"))
}

/// Number of norm-2 vectors in the root lattices of A1..A8, D4..D8, E6..E8.
pub fn check_root_counts() -> Result<String, String> {
    let mut cases: Vec<(String, usize)> = (1..=8).map(|k| (format!("A{k}"), k * (k + 1))).collect();
    cases.extend((4..=8).map(|l| (format!("D{l}"), 2 * l * (l - 1))));
    cases.extend([("E6".into(), 72), ("E7".into(), 126), ("E8".into(), 240)]);
    let two = num_rational::BigRational::from_integer(2.into());
    for (name, expected) in &cases {
        let got = short_vectors(&root_lattice(&g(name)), &two).count_with_norm(2);
        ensure(got == *expected, || format!("{name}: {got} roots, expected {expected}"))?;
    }
    Ok(format!("{} lattices", cases.len()))
}

/// Two fresh Z13 computations serialize identically, and match `given`.
pub fn check_determinism(given: &Catalog) -> Result<String, String> {
    let a = compute_pc_bar(SingularityClass::Z13).to_json();
    let b = compute_pc_bar(SingularityClass::Z13).to_json();
    ensure(a == b, || "two computations of Z13 differ".into())?;
    ensure(given.to_json() == a, || "supplied Z13 catalog differs from a fresh computation".into())?;
    Ok(format!("Z13 JSON stable ({} bytes)", a.len()))
}

pub fn check_golden_counts(catalogs: &[Catalog]) -> Result<String, String> {
    let golden: BTreeMap<_, _> = GOLDEN_MEMBER_COUNTS.into_iter().collect();
    let mut parts = Vec::new();
    for c in catalogs {
        let expected = golden[&c.class()];
        ensure(c.len() == expected, || {
            format!("{}: {} members, expected {expected}", c.class(), c.len())
        })?;
        parts.push(format!("{}={}", c.class(), c.len()));
    }
    Ok(parts.join(" "))
}

/// Every stored witness replays.
pub fn check_witnesses(catalogs: &[Catalog]) -> Result<String, String> {
    let mut n = 0;
    for c in catalogs {
        c.validate().map_err(|e| format!("{}: {e}", c.class()))?;
        n += c.len();
    }
    Ok(format!("{n} witnesses replay"))
}

/// Runs every check. `catalog` supplies the catalog of a class (computed or
/// cached); `table` is the extension table under test.
pub fn run_all(
    catalog: &dyn Fn(SingularityClass) -> Catalog,
    table: &dyn Fn(ComponentType) -> ExtensionData,
) -> Vec<CheckResult> {
    let catalogs: Vec<Catalog> = SingularityClass::ALL.into_iter().map(catalog).collect();
    let z13 = catalogs
        .iter()
        .find(|c| c.class() == SingularityClass::Z13)
        .expect("Z13 is one of the classes");
    vec![
        CheckResult::new("z13-example", check_z13_example(z13)),
        CheckResult::new("class-table", check_class_table()),
        CheckResult::new("milnor-bound", check_milnor_bound(&catalogs)),
        CheckResult::new("extension-identity", check_extension_identity(table)),
        CheckResult::new("recognition-oracle", check_recognition_oracle(12)),
        CheckResult::new("root-counts", check_root_counts()),
        CheckResult::new("determinism", check_determinism(z13)),
        CheckResult::new("golden-counts", check_golden_counts(&catalogs)),
        CheckResult::new("witness-replay", check_witnesses(&catalogs)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::extension_data;

    #[test]
    fn corrupted_table_fails_only_the_identity_check() {
        let bad = |ty: ComponentType| {
            let mut d = extension_data(ty);
            if ty == ComponentType::E7 {
                d.coefficients[3] += 1;
            }
            d
        };
        assert!(check_extension_identity(&extension_data).is_ok());
        let err = check_extension_identity(&bad).unwrap_err();
        assert!(err.contains("E7"), "{err}");
    }

    #[test]
    fn small_checks() {
        check_class_table().unwrap();
        check_recognition_oracle(6).unwrap();
    }
}
