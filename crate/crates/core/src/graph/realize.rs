use super::{ComponentType, DynkinGraph, Kind, LabeledGraph, Norm};
use crate::rational::{Matrix, Rational};

fn minus_one() -> Rational {
    Rational::from_integer(-1)
}

/// Standard labeled graph of one component.
///
/// Vertex order:
/// - `A_k`: the path `0 - 1 - ... - (k-1)`.
/// - `D_l`: the path `0 - ... - (l-2)` with vertex `l-1` hanging off `l-3`.
/// - `E_n`: the path `0 - ... - (n-2)` with vertex `n-1` hanging off `2`.
/// - `G_2`: long root `0` (○) joined to short root `1` (●) with `(α, γ) = -1`.
/// - `G_1`: a single ●; `BC_1`: a single ⊗.
pub fn realize_component(ty: ComponentType) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    let path = |g: &mut LabeledGraph, len: usize| {
        for i in 0..len {
            g.add_vertex(Norm::Long);
            if i > 0 {
                g.set_edge(i - 1, i, minus_one());
            }
        }
    };
    match ty.kind() {
        Kind::A(k) => path(&mut g, k as usize),
        Kind::D(l) => {
            let l = l as usize;
            path(&mut g, l - 1);
            let fork = g.add_vertex(Norm::Long);
            g.set_edge(l - 3, fork, minus_one());
        }
        Kind::E(n) => {
            let n = n as usize;
            path(&mut g, n - 1);
            let branch = g.add_vertex(Norm::Long);
            g.set_edge(2, branch, minus_one());
        }
        Kind::G2 => {
            let long = g.add_vertex(Norm::Long);
            let short = g.add_vertex(Norm::TwoThirds);
            g.set_edge(long, short, minus_one());
        }
        Kind::G1 => {
            g.add_vertex(Norm::TwoThirds);
        }
        Kind::BC1 => {
            g.add_vertex(Norm::Half);
        }
    }
    g
}

/// Disjoint union of the standard components, in canonical component order.
pub fn realize(g: &DynkinGraph) -> LabeledGraph {
    let mut out = LabeledGraph::new();
    for &c in g.components() {
        out.append(&realize_component(c));
    }
    out
}

pub fn gram(lg: &LabeledGraph) -> Matrix {
    lg.gram()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_name;

    fn gram_of(name: &str) -> Matrix {
        realize(&parse_name(name).unwrap()).gram()
    }

    #[test]
    fn small_grams() {
        assert_eq!(gram_of("A1"), Matrix::from_integers(&[&[2]]));
        assert_eq!(gram_of("A2"), Matrix::from_integers(&[&[2, -1], &[-1, 2]]));
        assert_eq!(
            gram_of("G2"),
            Matrix::from_fractions(&[&[(2, 1), (-1, 1)], &[(-1, 1), (2, 3)]])
        );
        assert_eq!(gram_of("BC1"), Matrix::from_fractions(&[&[(1, 2)]]));
        assert_eq!(gram_of("G1"), Matrix::from_fractions(&[&[(2, 3)]]));
    }

    #[test]
    fn g2_cartan_integers() {
        let g = gram_of("G2");
        let (a, c, ip) = (g[(0, 0)], g[(1, 1)], g[(0, 1)]);
        let two = Rational::from_integer(2);
        assert_eq!(two * ip / a, Rational::from_integer(-1));
        assert_eq!(two * ip / c, Rational::from_integer(-3));
    }

    #[test]
    fn determinants() {
        for k in 1..=12 {
            assert_eq!(
                gram_of(&format!("A{k}")).determinant(),
                Rational::from_integer(k + 1)
            );
        }
        for l in 4..=12 {
            assert_eq!(gram_of(&format!("D{l}")).determinant(), Rational::from_integer(4));
        }
        assert_eq!(gram_of("E6").determinant(), Rational::from_integer(3));
        assert_eq!(gram_of("E7").determinant(), Rational::from_integer(2));
        assert_eq!(gram_of("E8").determinant(), Rational::from_integer(1));
        assert_eq!(gram_of("G2").determinant(), Rational::new(1, 3));
    }

    #[test]
    fn shapes() {
        let d5 = realize_component(ComponentType::d(5).unwrap());
        let degrees: Vec<usize> = d5.adjacency().iter().map(|a| a.len()).collect();
        assert_eq!(degrees, [1, 2, 3, 1, 1]);
        let e8 = realize_component(ComponentType::E8);
        assert_eq!(e8.edge_count(), 7);
        assert_eq!(e8.adjacency()[2].len(), 3);
    }
}
