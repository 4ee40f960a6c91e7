use dynkin_core::graph::{classify, extend, realize, ComponentType, LabeledGraph};
use dynkin_core::rational::Rational;
use dynkin_core::{parse_name, DynkinGraph};
use proptest::prelude::*;

fn any_type() -> impl Strategy<Value = ComponentType> {
    prop_oneof![
        (1u32..=15).prop_map(|k| ComponentType::a(k).unwrap()),
        (4u32..=15).prop_map(|l| ComponentType::d(l).unwrap()),
        (6u32..=8).prop_map(|n| ComponentType::e(n).unwrap()),
        Just(ComponentType::G2),
        Just(ComponentType::G1),
        Just(ComponentType::BC1),
    ]
}

fn any_graph() -> impl Strategy<Value = DynkinGraph> {
    prop::collection::vec(any_type(), 0..5).prop_map(DynkinGraph::new)
}

/// Relabels vertices so that old vertex `i` becomes `perm[i]`.
fn permute(lg: &LabeledGraph, perm: &[usize]) -> LabeledGraph {
    let mut inverse = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inverse[p] = i;
    }
    let mut out = LabeledGraph::default();
    for &old in &inverse {
        out.add_vertex(lg.norm(old));
    }
    for ((u, v), w) in lg.edges() {
        out.set_edge(perm[u], perm[v], w);
    }
    out
}

proptest! {
    #[test]
    fn name_round_trip(g in any_graph()) {
        prop_assert_eq!(parse_name(&g.canonical_name()).unwrap(), g);
    }

    #[test]
    fn classify_inverts_realize(g in any_graph(), seed in any::<u64>()) {
        let lg = realize(&g);
        prop_assert_eq!(classify(&lg).unwrap(), g.clone());
        let mut perm: Vec<usize> = (0..lg.len()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(classify(&permute(&lg, &perm)).unwrap(), g);
    }

    #[test]
    fn gram_is_positive_definite(g in any_graph()) {
        let m = realize(&g).gram();
        prop_assert!(m.is_symmetric());
        prop_assert!(m.is_positive_definite());
    }

    #[test]
    fn added_vertex_realizes_minus_eta(g in any_graph()) {
        let x = extend(&g);
        let m = x.graph().gram();
        for c in x.components() {
            let added = c.added();
            for j in c.vertices.clone() {
                let combo: Rational = c
                    .vertices
                    .clone()
                    .filter(|&i| i != added)
                    .map(|i| Rational::from_integer(i64::from(x.coefficient(i))) * m[(i, j)])
                    .sum();
                prop_assert_eq!(m[(added, j)], -combo, "{} row {}", c.ty, j);
            }
        }
    }
}

#[test]
fn multiplicity_prefixes() {
    assert_eq!(parse_name("2A3+D4").unwrap(), parse_name("A3+D4+A3").unwrap());
    assert_eq!(parse_name("2A3").unwrap().canonical_name(), "A3+A3");
    assert_eq!(parse_name("A_7 + A_4").unwrap().canonical_name(), "A7+A4");
}
