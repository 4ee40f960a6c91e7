//! Brute-force counterparts used to cross-check the structural code paths.
//!
//! Nothing here calls the structural recognizer or the per-component
//! enumerators: graphs are identified by searching for a simultaneous
//! permutation of Gram matrices, choices are enumerated over raw vertex
//! subsets, and maximal roots come from closing the simple roots under
//! reflections.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::Zero;

use crate::graph::{realize_component, ComponentType, DynkinGraph, ExtendedGraph, LabeledGraph};
use crate::rational::{Matrix, Rational};
use crate::transforms::{
    elementary_residual, tie_residual, ElementaryChoice, Outcome, TieChoice,
};

/// Permutation `p` with `b[(p[i], p[j])] == a[(i, j)]` for all `i, j`, if any.
pub fn gram_isomorphism(a: &Matrix, b: &Matrix) -> Option<Vec<usize>> {
    let n = a.size();
    if b.size() != n {
        return None;
    }
    let profile = |m: &Matrix| {
        let mut rows: Vec<(Rational, Vec<Rational>)> = (0..n)
            .map(|i| {
                let mut off: Vec<Rational> =
                    (0..n).filter(|&j| j != i).map(|j| m[(i, j)]).collect();
                off.sort();
                (m[(i, i)], off)
            })
            .collect();
        rows.sort();
        rows
    };
    if profile(a) != profile(b) {
        return None;
    }

    // visit vertices of `a` so that each one after the first is adjacent to
    // an earlier one whenever possible
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n).find(|&v| !placed[v]).expect("unplaced vertex");
        placed[start] = true;
        order.push(start);
        let mut k = order.len() - 1;
        while k < order.len() {
            let v = order[k];
            for w in 0..n {
                if !placed[w] && !a[(v, w)].is_zero() {
                    placed[w] = true;
                    order.push(w);
                }
            }
            k += 1;
        }
    }

    fn search(
        a: &Matrix,
        b: &Matrix,
        order: &[usize],
        depth: usize,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for cand in 0..b.size() {
            if used[cand] || a[(v, v)] != b[(cand, cand)] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let image = map[u].expect("assigned");
                a[(u, v)] == b[(image, cand)]
            });
            if !consistent {
                continue;
            }
            map[v] = Some(cand);
            used[cand] = true;
            if search(a, b, order, depth + 1, map, used) {
                return true;
            }
            map[v] = None;
            used[cand] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if search(a, b, &order, 0, &mut map, &mut used) {
        Some(map.into_iter().map(|x| x.expect("complete")).collect())
    } else {
        None
    }
}

/// Connected components of the graph of nonzero off-diagonal Gram entries.
fn gram_components(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.size();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = out.len();
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if label[w] == usize::MAX && w != v && !m[(v, w)].is_zero() {
                    label[w] = out.len();
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Identifies each component by Gram isomorphism against every allowed type
/// with the same vertex count.
pub fn classify_by_gram(m: &Matrix) -> Option<DynkinGraph> {
    let mut types = Vec::new();
    for comp in gram_components(m) {
        let sub = Matrix::from_rows(
            comp.iter()
                .map(|&i| comp.iter().map(|&j| m[(i, j)]).collect())
                .collect(),
        );
        let ty = ComponentType::with_vertex_count(comp.len())
            .into_iter()
            .find(|&ty| gram_isomorphism(&sub, &realize_component(ty).gram()).is_some())?;
        types.push(ty);
    }
    Some(DynkinGraph::new(types))
}

pub fn classify_labeled(lg: &LabeledGraph) -> Option<DynkinGraph> {
    classify_by_gram(&lg.gram())
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64, "too many vertices for naive enumeration");
    0..(1u64 << n)
}

fn mask_ids(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn component_masks(x: &ExtendedGraph) -> Vec<u64> {
    x.components()
        .iter()
        .map(|c| c.vertices.clone().fold(0u64, |m, v| m | 1 << v))
        .collect()
}

/// Calls `f` with every removal set that meets each component.
pub fn for_each_elementary_choice(x: &ExtendedGraph, mut f: impl FnMut(ElementaryChoice)) {
    let comps = component_masks(x);
    for mask in subsets(x.len()) {
        if comps.iter().all(|&c| mask & c != 0) {
            f(ElementaryChoice {
                removed: mask_ids(mask),
            });
        }
    }
}

/// Calls `f` with every `(A, B)` satisfying `<a>`, `#B <= 3`, `l >= 1` and
/// `<b>` on every component.
pub fn for_each_tie_choice(x: &ExtendedGraph, mut f: impl FnMut(TieChoice)) {
    let comps = component_masks(x);
    let n = x.len();
    let coeff_sum = |mask: u64| -> u32 { mask_ids(mask).iter().map(|&v| x.coefficient(v)).sum() };
    for a in subsets(n) {
        if !comps.iter().all(|&c| a & c != 0) {
            continue;
        }
        let rest = mask_ids(!a & ((1u64 << n) - 1));
        for size in 0..=3.min(rest.len()) {
            for pick in combinations(rest.len(), size) {
                let b = pick.iter().fold(0u64, |m, &i| m | 1 << rest[i]);
                let ok = comps.iter().all(|&c| {
                    mask_ids(a & c)
                        .iter()
                        .fold(coeff_sum(b & c), |g, &v| g.gcd(&x.coefficient(v)))
                        == 1
                });
                if ok {
                    f(TieChoice {
                        a: mask_ids(a),
                        b: mask_ids(b),
                    });
                }
            }
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn keep_min<C: Ord>(map: &mut HashMap<DynkinGraph, C>, g: DynkinGraph, c: C) {
    match map.get(&g) {
        Some(old) if *old <= c => {}
        _ => {
            map.insert(g, c);
        }
    }
}

fn sorted<C>(map: HashMap<DynkinGraph, C>) -> Vec<Outcome<C>> {
    let mut out: Vec<_> = map
        .into_iter()
        .map(|(graph, choice)| Outcome { graph, choice })
        .collect();
    out.sort_by_cached_key(|o| o.graph.canonical_name());
    out
}

/// Elementary outcomes by raw enumeration and Gram-isomorphism recognition.
pub fn naive_elementary(x: &ExtendedGraph) -> Vec<Outcome<ElementaryChoice>> {
    let mut map = HashMap::new();
    for_each_elementary_choice(x, |c| {
        let g = classify_labeled(&elementary_residual(x, &c.removed))
            .expect("proper subgraphs of extended graphs are Dynkin");
        keep_min(&mut map, g, c);
    });
    sorted(map)
}

/// Tie outcomes by raw enumeration and Gram-isomorphism recognition.
pub fn naive_tie(x: &ExtendedGraph) -> Vec<Outcome<TieChoice>> {
    let mut map = HashMap::new();
    for_each_tie_choice(x, |c| {
        if let Some(g) = classify_labeled(&tie_residual(x, &c.a, &c.b)) {
            keep_min(&mut map, g, c);
        }
    });
    sorted(map)
}

/// Maximal root of a connected type in simple-root coordinates (the vertex
/// order of [`realize_component`]), computed by closing the simple roots
/// under simple reflections and taking the root of greatest height.
///
/// `BC_1` is not reduced: its maximal root `2δ` is not a reflection image of
/// `δ`, so this returns `[1]` there, the maximal root of the reduced part.
pub fn maximal_root(ty: ComponentType) -> Vec<u32> {
    let gram = realize_component(ty).gram();
    let n = gram.size();
    let two = Rational::from_integer(2);
    let pair = |x: &[i64], i: usize| -> Rational {
        (0..n).map(|j| Rational::from_integer(x[j]) * gram[(j, i)]).sum()
    };
    let mut roots: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut frontier: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while let Some(root) = frontier.pop() {
        for i in 0..n {
            let c = two * pair(&root, i) / gram[(i, i)];
            assert!(c.is_integer(), "Cartan integer must be integral");
            let mut img = root.clone();
            img[i] -= c.to_integer();
            if img.iter().all(|&v| v >= 0) && roots.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    let top = roots
        .into_iter()
        .max_by_key(|r| r.iter().sum::<i64>())
        .expect("at least one root");
    top.into_iter().map(|v| v as u32).collect()
}
