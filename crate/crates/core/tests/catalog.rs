use std::collections::BTreeMap;

use dynkin_core::catalog::{
    compute_pc_bar, milnor_bound_check, Catalog, CatalogCache, Membership, SingularityClass,
};
use dynkin_core::graph::extend;
use dynkin_core::oracle::{naive_elementary, naive_tie};
use dynkin_core::transforms::{ElementaryChoice, StepKind, TransformStep};
use dynkin_core::{parse_name, DynkinGraph};

const GOLDEN: [(SingularityClass, usize); 9] = [
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

fn g(name: &str) -> DynkinGraph {
    parse_name(name).unwrap()
}

fn naive_steps(input: &DynkinGraph) -> Vec<TransformStep> {
    let x = extend(input);
    let mut best: BTreeMap<String, TransformStep> = BTreeMap::new();
    let candidates = naive_elementary(&x)
        .into_iter()
        .map(|o| (o.graph, StepKind::Elementary(o.choice)))
        .chain(naive_tie(&x).into_iter().map(|o| (o.graph, StepKind::Tie(o.choice))));
    for (output, kind) in candidates {
        let name = output.canonical_name();
        if best.get(&name).is_none_or(|s| kind < s.kind) {
            best.insert(name, TransformStep { kind, input: input.clone(), output });
        }
    }
    best.into_values().collect()
}

/// Two-step closure built only from the brute-force enumerators.
fn naive_catalog(class: SingularityClass) -> BTreeMap<String, [TransformStep; 2]> {
    let mut out: BTreeMap<String, [TransformStep; 2]> = BTreeMap::new();
    for s1 in naive_steps(&class.basic()) {
        for s2 in naive_steps(&s1.output) {
            if !s2.output.is_ade() {
                continue;
            }
            let name = s2.output.canonical_name();
            let better = out
                .get(&name)
                .is_none_or(|w| (&s1.kind, &s2.kind) < (&w[0].kind, &w[1].kind));
            if better {
                out.insert(name, [s1.clone(), s2]);
            }
        }
    }
    out
}

#[test]
fn matches_naive_closure_on_small_classes() {
    for class in [SingularityClass::Q10, SingularityClass::Z11, SingularityClass::Q11] {
        let fast: BTreeMap<String, [TransformStep; 2]> = compute_pc_bar(class)
            .members()
            .map(|m| (m.graph.canonical_name(), m.witness.clone()))
            .collect();
        assert_eq!(fast, naive_catalog(class), "{class}");
    }
}

#[test]
fn golden_counts_and_bounds() {
    for (class, count) in GOLDEN {
        let c = compute_pc_bar(class);
        assert_eq!(c.len(), count, "{class}");
        c.validate().unwrap();
        let report = milnor_bound_check(&c).unwrap();
        assert_eq!(report.max_vertices, Some(class.milnor() as usize - 2), "{class}");
        assert_eq!(report.histogram.values().sum::<usize>(), count);
    }
}

#[test]
fn z13_example() {
    let z13 = compute_pc_bar(SingularityClass::Z13);
    let Membership::Yes(w) = z13.membership(&g("A7+A4")).unwrap() else {
        panic!("A7+A4 missing");
    };
    assert!(matches!(w[0].kind, StepKind::Tie(_)) && matches!(w[1].kind, StepKind::Tie(_)));
    assert_eq!(w[0].output, g("E8+G2"));
    assert!(matches!(z13.membership(&g("D8+A2")).unwrap(), Membership::Yes(_)));
    for name in ["A12", "D12", "A11+A1", "E8+A4", "E7+D5"] {
        assert_eq!(z13.membership(&g(name)).unwrap(), Membership::No, "{name}");
    }
    assert!(z13.membership(&g("BC1")).is_err());
    assert!(z13.membership(&g("A3+G1")).is_err());
}

/// Basic graphs of A/D/E type are members via the identity step twice. The
/// stored witness is the smallest one, which may be a different route.
#[test]
fn identity_members() {
    for (class, basic, added) in [
        (SingularityClass::E12, "E8", 8),
        (SingularityClass::Z11, "E7", 7),
        (SingularityClass::Q10, "E6", 6),
    ] {
        let c = compute_pc_bar(class);
        let m = c.get(&g(basic)).unwrap_or_else(|| panic!("{basic} missing from {class}"));
        let identity = TransformStep {
            kind: StepKind::Elementary(ElementaryChoice { removed: vec![added] }),
            input: g(basic),
            output: g(basic),
        };
        identity.replay().unwrap();
        assert!(
            (&m.witness[0].kind, &m.witness[1].kind) <= (&identity.kind, &identity.kind),
            "{class}"
        );
    }
}

#[test]
fn json_round_trip_and_determinism() {
    let c = compute_pc_bar(SingularityClass::Z13);
    let text = c.to_json();
    assert!(text.ends_with("}\n"));
    assert_eq!(text, compute_pc_bar(SingularityClass::Z13).to_json());
    let (back, version) = Catalog::from_json(&text).unwrap();
    assert_eq!(back, c);
    assert_eq!(version, dynkin_core::catalog::engine_version());
    back.validate().unwrap();

    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["class"], "Z13");
    assert_eq!(v["milnor"], 13);
    assert_eq!(v["basic"], "E7+G2");
    let names: Vec<&str> = v["members"].as_array().unwrap().iter().map(|m| m["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names[0], "");
}

#[test]
fn rejects_tampered_files() {
    let c = compute_pc_bar(SingularityClass::Q10);
    let text = c.to_json();
    assert!(Catalog::from_json(&text.replace("\"milnor\": 10", "\"milnor\": 11")).is_err());
    assert!(Catalog::from_json(&text.replace("\"class\": \"Q10\"", "\"class\": \"X99\"")).is_err());
    assert!(Catalog::from_json("{}").is_err());
    // a witness pointing at the wrong output parses but fails validation
    let bad = text.replacen("\"output\": \"E6\"", "\"output\": \"D5\"", 1);
    let (parsed, _) = Catalog::from_json(&bad).unwrap();
    assert!(parsed.validate().is_err());
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = CatalogCache::new(dir.path().join("nested"));
    assert!(cache.load(SingularityClass::Q11).is_none());
    let (cold, err) = cache.get_or_compute(SingularityClass::Q11);
    assert!(err.is_none());
    let path = cache.path(SingularityClass::Q11);
    assert!(path.exists());
    let (warm, _) = cache.get_or_compute(SingularityClass::Q11);
    assert_eq!(warm, cold);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), cold.to_json());

    // a corrupted file is treated as a miss and rewritten
    std::fs::write(&path, "not json").unwrap();
    assert!(cache.load(SingularityClass::Q11).is_none());
    let (again, _) = cache.get_or_compute(SingularityClass::Q11);
    assert_eq!(again, cold);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), cold.to_json());
}
