use super::{ComponentType, DynkinGraph, LabeledGraph, Norm};
use crate::rational::Rational;

/// A connected component matched none of the eight allowed shapes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a Dynkin graph: component {component}")]
pub struct NotADynkinGraph {
    pub component: String,
}

/// Recognizes every connected component of `lg`.
pub fn classify(lg: &LabeledGraph) -> Result<DynkinGraph, NotADynkinGraph> {
    let adj = lg.adjacency();
    lg.connected_components()
        .iter()
        .map(|comp| recognize(lg, &adj, comp))
        .collect::<Result<Vec<_>, _>>()
        .map(DynkinGraph::new)
}

/// Recognizes one connected component given by its vertex set.
pub fn classify_component(
    lg: &LabeledGraph,
    vertices: &[usize],
) -> Result<ComponentType, NotADynkinGraph> {
    recognize(lg, &lg.adjacency(), vertices)
}

fn describe(lg: &LabeledGraph, vertices: &[usize]) -> String {
    let norms: String = vertices.iter().map(|&v| lg.norm(v).glyph()).collect();
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            let ip = lg.inner_product(a, b);
            if ip != Rational::from_integer(0) {
                edges.push(format!("{a}-{b}:{ip}"));
            }
        }
    }
    format!("{{{norms}}} with edges [{}]", edges.join(", "))
}

fn recognize(
    lg: &LabeledGraph,
    adj: &[Vec<(usize, Rational)>],
    vertices: &[usize],
) -> Result<ComponentType, NotADynkinGraph> {
    let reject = || NotADynkinGraph {
        component: describe(lg, vertices),
    };
    let n = vertices.len();
    let mut inside = vec![false; lg.len()];
    for &v in vertices {
        inside[v] = true;
    }
    if vertices.iter().any(|&v| adj[v].iter().any(|&(w, _)| !inside[w])) {
        return Err(reject());
    }
    if n == 1 {
        return Ok(match lg.norm(vertices[0]) {
            Norm::Long => ComponentType::a(1).expect("A1"),
            Norm::Half => ComponentType::BC1,
            Norm::TwoThirds => ComponentType::G1,
        });
    }

    let minus_one = Rational::from_integer(-1);
    let norms: Vec<Norm> = vertices.iter().map(|&v| lg.norm(v)).collect();
    if norms.contains(&Norm::Half) {
        return Err(reject());
    }
    let short = norms.iter().filter(|&&x| x == Norm::TwoThirds).count();
    if short > 0 {
        return if n == 2 && short == 1 && lg.inner_product(vertices[0], vertices[1]) == minus_one {
            Ok(ComponentType::G2)
        } else {
            Err(reject())
        };
    }

    // Simply laced from here on: a tree of circles with -1 edges.
    let edge_count: usize = vertices.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edge_count != n - 1 {
        return Err(reject());
    }
    if vertices.iter().any(|&v| adj[v].iter().any(|&(_, l)| l != minus_one)) {
        return Err(reject());
    }
    let degree = |v: usize| adj[v].len();
    if vertices.iter().any(|&v| degree(v) > 3) {
        return Err(reject());
    }
    let branches: Vec<usize> = vertices.iter().copied().filter(|&v| degree(v) == 3).collect();
    let m = n as u32;
    match branches.as_slice() {
        [] => Ok(ComponentType::a(m).expect("n >= 1")),
        &[branch] => {
            let mut legs: Vec<usize> = adj[branch]
                .iter()
                .map(|&(start, _)| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    while let Some(&(next, _)) = adj[cur].iter().find(|&&(w, _)| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, _] => Ok(ComponentType::d(m).expect("n >= 4")),
                [1, 2, 2] => Ok(ComponentType::E6),
                [1, 2, 3] => Ok(ComponentType::E7),
                [1, 2, 4] => Ok(ComponentType::E8),
                _ => Err(reject()),
            }
        }
        _ => Err(reject()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_name, realize};

    fn circles(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
        let mut g = LabeledGraph::new();
        for _ in 0..n {
            g.add_vertex(Norm::Long);
        }
        for &(a, b) in edges {
            g.set_edge(a, b, Rational::from_integer(-1));
        }
        g
    }

    #[test]
    fn round_trip_examples() {
        for name in ["A7+A4", "E8+G2", "D4", "D5+E6+E7+BC1+G1", "A1+A1+A1", ""] {
            let g = parse_name(name).unwrap();
            assert_eq!(classify(&realize(&g)).unwrap(), g, "{name}");
        }
    }

    #[test]
    fn rejects_cycles_and_affine_shapes() {
        assert!(classify(&circles(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).is_err());
        // affine D4 star
        assert!(classify(&circles(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])).is_err());
        // affine E6: legs 2,2,2
        assert!(classify(&circles(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])).is_err());
        // two branch points
        assert!(classify(&circles(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])).is_err());
    }

    #[test]
    fn mixed_norms() {
        let mut g = circles(2, &[(0, 1)]);
        g.add_vertex(Norm::Half);
        assert_eq!(classify(&g).unwrap().canonical_name(), "A2+BC1");

        // ○ - ⊗ with -1 is the degenerate extended BC1 shape
        let mut g = circles(1, &[]);
        let d = g.add_vertex(Norm::Half);
        g.set_edge(0, d, Rational::from_integer(-1));
        assert!(classify(&g).is_err());

        // ○ - ○ - ● is extended G2
        let mut g = circles(2, &[(0, 1)]);
        let s = g.add_vertex(Norm::TwoThirds);
        g.set_edge(1, s, Rational::from_integer(-1));
        assert!(classify(&g).is_err());

        // doubled edge of extended A1
        let mut g = circles(2, &[]);
        g.set_edge(0, 1, Rational::from_integer(-2));
        assert!(classify(&g).is_err());
    }

    #[test]
    fn error_names_component() {
        let err = classify(&circles(3, &[(0, 1), (1, 2), (0, 2)])).unwrap_err();
        assert!(err.component.contains("○○○"), "{err}");
    }
}
