use dynkin_core::graph::{realize, ComponentType, DynkinGraph};
use dynkin_core::lattice::{coroot_system, root_lattice, short_vectors, Lattice};
use dynkin_core::parse_name;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn lat(name: &str) -> Lattice {
    root_lattice(&parse_name(name).unwrap())
}

/// Every coordinate vector in `[-r, r]^n`.
fn box_vectors(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn root_counts() {
    let roots = |name: &str| short_vectors(&lat(name), &int(2)).count_with_norm(2);
    for k in 1..=8i64 {
        assert_eq!(roots(&format!("A{k}")), (k * (k + 1)) as usize, "A{k}");
    }
    for l in 4..=8i64 {
        assert_eq!(roots(&format!("D{l}")), (2 * l * (l - 1)) as usize, "D{l}");
    }
    assert_eq!(roots("E6"), 72);
    assert_eq!(roots("E7"), 126);
    assert_eq!(roots("E8"), 240);
}

#[test]
fn short_vectors_agree_with_box_search() {
    let cases = ["A1", "A2", "A3", "A4", "D4", "G2", "BC1", "G1", "A2+A1", "A1+A1+BC1", "G2+A2"];
    for name in cases {
        let l = lat(name);
        for bound in [1, 2, 3, 4] {
            let found = short_vectors(&l, &int(bound));
            let expected: Vec<Vec<i64>> = box_vectors(l.rank(), 4)
                .into_iter()
                .filter(|x| l.norm(x) <= int(bound))
                .collect();
            assert_eq!(found.len(), expected.len(), "{name} bound {bound}");
            for x in &expected {
                assert!(found.contains(x), "{name} bound {bound}: missing {x:?}");
            }
            for (x, norm) in found.iter() {
                assert_eq!(*norm, l.norm(x));
                assert!(x.iter().all(|c| c.abs() <= 4), "{name}: {x:?} outside the box");
            }
            assert!(found.is_closed_under_negation());
        }
    }
}

#[test]
fn d4_coroots_match_brute_force() {
    let l = lat("D4");
    let coroots = coroot_system(&l).unwrap();
    let brute: Vec<Vec<i64>> = box_vectors(4, 4)
        .into_iter()
        .filter(|x| {
            let n = l.norm(x);
            [int(2), int(4), int(6)].contains(&n)
                && box_vectors(4, 1).iter().all(|y| (int(2) * l.inner(x, y) / &n).is_integer())
        })
        .collect();
    assert_eq!(coroots.len(), brute.len());
    for x in &brute {
        assert!(coroots.contains(x));
    }
    // 24 roots of norm 2 plus 24 vectors of norm 4 in twice the dual lattice
    assert_eq!(coroots.count_with_norm(2), 24);
    assert_eq!(coroots.count_with_norm(4), 24);
    assert_eq!(coroots.len(), 48);
    assert!(coroots.is_closed_under_negation() && !coroots.contains_zero());
}

#[test]
fn coroots_of_unimodular_and_a_type() {
    // E8 is unimodular: 2(x,y)/4 integral forces x ∈ 2E8, whose minimum is 8
    let e8 = coroot_system(&lat("E8")).unwrap();
    assert_eq!(e8.len(), 240);
    // A2: 6 roots and the 6 vectors of 3A2* (norm 6)
    let a2 = coroot_system(&lat("A2")).unwrap();
    assert_eq!(a2.count_with_norm(2), 6);
    assert_eq!(a2.count_with_norm(6), 6);
    assert_eq!(a2.len(), 12);
}

fn any_graph() -> impl Strategy<Value = DynkinGraph> {
    let ty = prop_oneof![
        (1u32..=6).prop_map(|k| ComponentType::a(k).unwrap()),
        (4u32..=6).prop_map(|l| ComponentType::d(l).unwrap()),
        (6u32..=8).prop_map(|n| ComponentType::e(n).unwrap()),
        Just(ComponentType::G2),
        Just(ComponentType::G1),
        Just(ComponentType::BC1),
    ];
    prop::collection::vec(ty, 0..4).prop_map(DynkinGraph::new)
}

proptest! {
    #[test]
    fn determinant_is_multiplicative(g1 in any_graph(), g2 in any_graph()) {
        let sum = root_lattice(&g1.union(&g2));
        prop_assert_eq!(sum.determinant(), root_lattice(&g1).determinant() * root_lattice(&g2).determinant());
        let direct = root_lattice(&g1).direct_sum(&root_lattice(&g2));
        prop_assert_eq!(direct.determinant(), sum.determinant());
    }

    #[test]
    fn gram_is_positive_definite(g in any_graph()) {
        prop_assert!(realize(&g).gram().is_positive_definite());
    }
}
