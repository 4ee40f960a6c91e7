//! Exhaustive enumeration, component by component.
//!
//! Removing vertices from one extended component leaves a disjoint union of
//! Dynkin pieces, and a tie only glues the new vertex onto the pieces that
//! contain a `B` vertex. So each component contributes a signature: the types
//! of its untouched pieces plus the rooted isomorphism classes ("arms") of the
//! pieces touched by `B`. Signatures are combined across components and only
//! the glued component is classified at the end. Two `B` vertices in the same
//! piece always close a cycle, so such choices are skipped.

use std::collections::HashMap;

use num_integer::Integer;

use super::{ElementaryChoice, Outcome, TieChoice, TransformError};
use crate::graph::{classify, extend, ComponentType, DynkinGraph, ExtendedGraph, LabeledGraph, Norm};
use crate::rational::Rational;

/// Largest extended component (vertices, including the added one) the
/// enumerators accept.
pub const MAX_COMPONENT_VERTICES: usize = 20;

struct Component {
    ty: ComponentType,
    offset: usize,
    n: usize,
    adj: Vec<u32>,
    coefficients: Vec<u32>,
    graph: LabeledGraph,
    piece_types: HashMap<u32, ComponentType>,
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl Component {
    fn split(x: &ExtendedGraph) -> Result<Vec<Component>, TransformError> {
        x.components()
            .iter()
            .map(|comp| {
                let n = comp.len();
                if n > MAX_COMPONENT_VERTICES {
                    return Err(TransformError::TooLarge {
                        ty: comp.ty,
                        vertices: n,
                        limit: MAX_COMPONENT_VERTICES,
                    });
                }
                let ids: Vec<usize> = comp.vertices.clone().collect();
                let graph = x.graph().induced(&ids);
                let mut adj = vec![0u32; n];
                for ((a, b), _) in graph.edges() {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                Ok(Component {
                    ty: comp.ty,
                    offset: comp.vertices.start,
                    n,
                    adj,
                    coefficients: x.coefficients()[comp.vertices.clone()].to_vec(),
                    graph,
                    piece_types: HashMap::new(),
                })
            })
            .collect()
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    fn pieces(&self, mask: u32) -> Vec<u32> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let (mut comp, mut frontier) = (start, start);
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let next = self.adj[v] & rest & !comp;
                comp |= next;
                frontier |= next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    fn piece_graph(&self, piece: u32) -> LabeledGraph {
        let ids: Vec<usize> = bits(piece).collect();
        self.graph.induced(&ids)
    }

    fn piece_type(&mut self, piece: u32) -> ComponentType {
        if let Some(&ty) = self.piece_types.get(&piece) {
            return ty;
        }
        let found = classify(&self.piece_graph(piece))
            .ok()
            .and_then(|g| match g.components() {
                &[ty] => Some(ty),
                _ => None,
            })
            .unwrap_or_else(|| {
                panic!(
                    "piece {piece:#b} of extended {} is not a connected Dynkin graph",
                    self.ty
                )
            });
        self.piece_types.insert(piece, found);
        found
    }

    fn global(&self, mask: u32) -> impl Iterator<Item = usize> + '_ {
        bits(mask).map(move |v| v + self.offset)
    }

    /// Canonical code of `piece` rooted at `root`: norms and edge labels of
    /// the rooted tree, children sorted.
    fn rooted_code(&self, piece: u32, root: usize) -> String {
        fn go(c: &Component, piece: u32, v: usize, parent: Option<usize>, out: &mut String) {
            let mut children: Vec<String> = bits(c.adj[v] & piece)
                .filter(|&w| Some(w) != parent)
                .map(|w| {
                    let mut s = c.graph.inner_product(v, w).to_string();
                    go(c, piece, w, Some(v), &mut s);
                    s
                })
                .collect();
            children.sort();
            out.push('(');
            out.push(c.graph.norm(v).glyph());
            for child in children {
                out.push_str(&child);
            }
            out.push(')');
        }
        let mut s = String::new();
        go(self, piece, root, None, &mut s);
        s
    }
}

/// Compares per-component mask lists with the last component most
/// significant, which is colex order on the global vertex ids.
fn cmp_masks(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

fn merge_sorted<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort();
    out
}

fn keep_min<K: std::hash::Hash + Eq, V>(
    map: &mut HashMap<K, V>,
    key: K,
    value: V,
    less: impl Fn(&V, &V) -> bool,
) {
    match map.entry(key) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            if less(&value, e.get()) {
                e.insert(value);
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(value);
        }
    }
}

fn sorted_by_name<C>(outcomes: HashMap<DynkinGraph, C>) -> Vec<Outcome<C>> {
    let mut out: Vec<Outcome<C>> = outcomes
        .into_iter()
        .map(|(graph, choice)| Outcome { graph, choice })
        .collect();
    out.sort_by_cached_key(|o| o.graph.canonical_name());
    out
}

/// Every graph reachable from `g` by one elementary transformation, with the
/// colex-minimal removal set for each, sorted by canonical name.
pub fn elementary_all(g: &DynkinGraph) -> Result<Vec<Outcome<ElementaryChoice>>, TransformError> {
    let x = extend(g);
    let mut comps = Component::split(&x)?;

    // state: multiset of residual types -> minimal masks of the components so far
    let mut states: HashMap<Vec<ComponentType>, Vec<u32>> = HashMap::new();
    states.insert(Vec::new(), Vec::new());
    for comp in &mut comps {
        let mut options: HashMap<Vec<ComponentType>, u32> = HashMap::new();
        for removed in 1..=comp.full() {
            let mut types: Vec<ComponentType> = comp
                .pieces(comp.full() & !removed)
                .into_iter()
                .map(|p| comp.piece_type(p))
                .collect();
            types.sort();
            keep_min(&mut options, types, removed, |a, b| a < b);
        }
        let mut next: HashMap<Vec<ComponentType>, Vec<u32>> = HashMap::new();
        for (key, masks) in &states {
            for (types, &removed) in &options {
                let mut value = masks.clone();
                value.push(removed);
                keep_min(&mut next, merge_sorted(key, types), value, |a, b| {
                    cmp_masks(a, b).is_lt()
                });
            }
        }
        states = next;
    }

    let mut outcomes: HashMap<DynkinGraph, ElementaryChoice> = HashMap::new();
    for (types, masks) in states {
        let mut removed: Vec<usize> = comps
            .iter()
            .zip(&masks)
            .flat_map(|(c, &m)| c.global(m))
            .collect();
        removed.sort_unstable();
        keep_min(
            &mut outcomes,
            DynkinGraph::new(types),
            ElementaryChoice { removed },
            |a, b| a < b,
        );
    }
    Ok(sorted_by_name(outcomes))
}

/// Rooted pieces seen during one tie enumeration, interned across components.
#[derive(Default)]
struct Arms {
    ids: HashMap<String, u32>,
    reps: Vec<(LabeledGraph, usize)>,
}

impl Arms {
    fn intern(&mut self, comp: &Component, piece: u32, root: usize) -> u32 {
        let code = comp.rooted_code(piece, root);
        if let Some(&id) = self.ids.get(&code) {
            return id;
        }
        let id = self.reps.len() as u32;
        let root_pos = bits(piece).position(|v| v == root).expect("root lies in piece");
        self.reps.push((comp.piece_graph(piece), root_pos));
        self.ids.insert(code, id);
        id
    }

    /// The new vertex glued to the roots of `arms`.
    fn glue(&self, arms: &[u32]) -> LabeledGraph {
        let mut g = LabeledGraph::new();
        let new = g.add_vertex(Norm::Long);
        for &id in arms {
            let (piece, root) = &self.reps[id as usize];
            let offset = g.append(piece);
            g.set_edge(new, offset + root, Rational::from_integer(-1));
        }
        g
    }
}

type TieKey = (Vec<ComponentType>, Vec<u32>);

#[derive(Clone)]
struct TieMasks {
    a: Vec<u32>,
    b: Vec<u32>,
}

fn tie_less(x: &TieMasks, y: &TieMasks) -> bool {
    cmp_masks(&x.a, &y.a).then_with(|| cmp_masks(&x.b, &y.b)).is_lt()
}

/// Options of one component: signature -> minimal `(A, B)` local masks.
fn tie_options(comp: &mut Component, arms: &mut Arms) -> HashMap<TieKey, (u32, u32)> {
    let mut options: HashMap<TieKey, (u32, u32)> = HashMap::new();
    let mut arm_cache: HashMap<(u32, usize), u32> = HashMap::new();
    for a in 1..=comp.full() {
        let gcd_a = bits(a).fold(0u32, |acc, v| acc.gcd(&comp.coefficients[v]));
        let pieces = comp.pieces(comp.full() & !a);
        let types: Vec<ComponentType> = pieces.iter().map(|&p| comp.piece_type(p)).collect();

        // choose up to three distinct pieces and one vertex in each
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
        while let Some((from, picks)) = stack.pop() {
            chosen.clear();
            chosen.extend_from_slice(&picks);
            let n: u32 = chosen.iter().map(|&(_, v)| comp.coefficients[v]).sum();
            if n.gcd(&gcd_a) == 1 {
                let mut b = 0u32;
                let mut untouched = Vec::new();
                let mut arm_ids = Vec::new();
                for (i, (&piece, &ty)) in pieces.iter().zip(&types).enumerate() {
                    match chosen.iter().find(|&&(p, _)| p == i) {
                        Some(&(_, root)) => {
                            b |= 1 << root;
                            let id = *arm_cache
                                .entry((piece, root))
                                .or_insert_with(|| arms.intern(comp, piece, root));
                            arm_ids.push(id);
                        }
                        None => untouched.push(ty),
                    }
                }
                untouched.sort();
                arm_ids.sort_unstable();
                keep_min(&mut options, (untouched, arm_ids), (a, b), |x, y| x < y);
            }
            if picks.len() < 3 {
                for (i, &piece) in pieces.iter().enumerate().skip(from) {
                    for v in bits(piece) {
                        let mut more = picks.clone();
                        more.push((i, v));
                        stack.push((i + 1, more));
                    }
                }
            }
        }
    }
    options
}

/// Every Dynkin graph reachable from `g` by one tie transformation, with the
/// minimal `(A, B)` choice for each, sorted by canonical name.
pub fn tie_all(g: &DynkinGraph) -> Result<Vec<Outcome<TieChoice>>, TransformError> {
    let x = extend(g);
    let mut comps = Component::split(&x)?;
    let mut arms = Arms::default();

    let mut states: HashMap<TieKey, TieMasks> = HashMap::new();
    states.insert(
        (Vec::new(), Vec::new()),
        TieMasks {
            a: Vec::new(),
            b: Vec::new(),
        },
    );
    for comp in &mut comps {
        let options = tie_options(comp, &mut arms);
        let mut next: HashMap<TieKey, TieMasks> = HashMap::new();
        for ((untouched, arm_ids), masks) in &states {
            for ((u, r), &(a, b)) in &options {
                if arm_ids.len() + r.len() > 3 {
                    continue;
                }
                let mut value = masks.clone();
                value.a.push(a);
                value.b.push(b);
                keep_min(
                    &mut next,
                    (merge_sorted(untouched, u), merge_sorted(arm_ids, r)),
                    value,
                    tie_less,
                );
            }
        }
        states = next;
    }

    let mut glued: HashMap<Vec<u32>, Option<DynkinGraph>> = HashMap::new();
    let mut outcomes: HashMap<DynkinGraph, TieChoice> = HashMap::new();
    for ((untouched, arm_ids), masks) in states {
        let merged = glued
            .entry(arm_ids.clone())
            .or_insert_with(|| classify(&arms.glue(&arm_ids)).ok());
        let Some(merged) = merged else {
            continue;
        };
        let graph = merged.union(&DynkinGraph::new(untouched));
        let collect = |ms: &[u32]| {
            let mut v: Vec<usize> = comps.iter().zip(ms).flat_map(|(c, &m)| c.global(m)).collect();
            v.sort_unstable();
            v
        };
        let choice = TieChoice {
            a: collect(&masks.a),
            b: collect(&masks.b),
        };
        keep_min(&mut outcomes, graph, choice, |a, b| a < b);
    }
    Ok(sorted_by_name(outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_name;
    use crate::transforms::{apply, StepKind};

    fn names<C>(outs: &[Outcome<C>]) -> Vec<String> {
        outs.iter().map(|o| o.graph.canonical_name()).collect()
    }

    #[test]
    fn elementary_a1() {
        let outs = elementary_all(&parse_name("A1").unwrap()).unwrap();
        assert_eq!(names(&outs), ["", "A1"]);
        // both single removals give A1; the colex-smaller one is kept
        assert_eq!(outs[1].choice.removed, [0]);
    }

    #[test]
    fn elementary_e8_g2_contains_d8_a2() {
        let g = parse_name("E8+G2").unwrap();
        let outs = elementary_all(&g).unwrap();
        let hit = outs.iter().find(|o| o.graph.canonical_name() == "D8+A2").unwrap();
        let replay = apply(&g, &StepKind::Elementary(hit.choice.clone())).unwrap();
        assert_eq!(replay, hit.graph);
        let id = outs.iter().find(|o| o.graph == g).unwrap();
        assert_eq!(id.choice.removed, [8, 11]);
    }

    #[test]
    fn tie_bc1() {
        let outs = tie_all(&parse_name("BC1").unwrap()).unwrap();
        assert_eq!(names(&outs), ["A1", "A1+BC1", "A2"]);
    }

    #[test]
    fn tie_z13_examples() {
        let outs = tie_all(&parse_name("E7+G2").unwrap()).unwrap();
        assert!(names(&outs).contains(&"E8+G2".to_string()));
        let outs = tie_all(&parse_name("E8+G2").unwrap()).unwrap();
        assert!(names(&outs).contains(&"A7+A4".to_string()));
        for o in &outs {
            let got = apply(&parse_name("E8+G2").unwrap(), &StepKind::Tie(o.choice.clone())).unwrap();
            assert_eq!(got, o.graph);
        }
    }

    #[test]
    fn too_large() {
        let err = elementary_all(&parse_name("A20").unwrap()).unwrap_err();
        assert!(matches!(err, TransformError::TooLarge { vertices: 21, .. }));
    }
}
