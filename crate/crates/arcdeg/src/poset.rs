use serde::{Deserialize, Serialize};

use crate::arc::ArcDiagram;
use crate::error::{Error, Result};
use crate::order::down_moves;
use crate::partition::Partition;
use crate::tableau::{KleinTableau, LrTableau};

/// The Hasse diagram of a set of tableaux of one type under the move order.
/// Edges run from the lower node to the one covering it and carry the kind
/// of a move realizing the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetShape", into = "PosetShape")]
pub struct Poset {
    nodes: Vec<KleinTableau>,
    edges: Vec<(usize, usize, char)>,
}

#[derive(Serialize, Deserialize)]
struct PosetShape {
    nodes: Vec<KleinTableau>,
    edges: Vec<(usize, usize, char)>,
}

impl Poset {
    /// Orders the given tableaux by move reachability and keeps the covers.
    pub fn from_nodes(mut nodes: Vec<KleinTableau>) -> Self {
        nodes.sort();
        nodes.dedup();
        let find = |k: &KleinTableau| nodes.binary_search(k).ok();

        // one step of the order: results of single moves that stay in the set
        let n = nodes.len();
        let mut step: Vec<Vec<(usize, char)>> = vec![Vec::new(); n];
        for (j, z) in nodes.iter().enumerate() {
            for (mv, res) in down_moves(z) {
                if let Some(i) = find(&res) {
                    step[j].push((i, mv.kind()));
                }
            }
        }

        // reachability, then covers by discarding two-step consequences
        let mut below: Vec<Vec<bool>> = vec![vec![false; n]; n];
        for j in 0..n {
            let mut stack: Vec<usize> = step[j].iter().map(|&(i, _)| i).collect();
            while let Some(i) = stack.pop() {
                if !below[j][i] {
                    below[j][i] = true;
                    stack.extend(step[i].iter().map(|&(k, _)| k));
                }
            }
        }
        let mut edges = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if !below[j][i] {
                    continue;
                }
                let is_cover = (0..n).all(|k| !(below[j][k] && below[k][i]));
                if !is_cover {
                    continue;
                }
                let kind = step[j]
                    .iter()
                    .find(|&&(t, _)| t == i)
                    .map(|&(_, c)| c)
                    .expect("every cover is realized by a single move");
                edges.push((i, j, kind));
            }
        }
        edges.sort_unstable();
        Poset { nodes, edges }
    }

    /// All refinements of one filling.
    pub fn for_filling(lr: &LrTableau) -> Self {
        Self::from_nodes(KleinTableau::refinements(lr))
    }

    /// All refinements of all fillings of the triple of types.
    pub fn for_type(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<Self> {
        Ok(Self::from_nodes(KleinTableau::enumerate_type(
            alpha, beta, gamma,
        )?))
    }

    pub fn nodes(&self) -> &[KleinTableau] {
        &self.nodes
    }

    /// Cover relations as (lower, upper, move kind).
    pub fn edges(&self) -> &[(usize, usize, char)] {
        &self.edges
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.edges.iter().all(|&(_, u, _)| u != i))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.edges.iter().all(|&(l, _, _)| l != i))
            .collect()
    }

    /// Graphviz rendering, minimal elements at the bottom.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph order {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, k) in self.nodes.iter().enumerate() {
            let arcs = k
                .arcs()
                .iter()
                .map(|&(m, r)| format!("({m},{r})"))
                .collect::<Vec<_>>()
                .join(",");
            let poles = k
                .poles()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let x = ArcDiagram::from(k).crossings();
            s.push_str(&format!(
                "  n{i} [label=\"arcs {arcs}; poles {poles}; x={x}\"];\n"
            ));
        }
        for &(lower, upper, kind) in &self.edges {
            s.push_str(&format!("  n{lower} -> n{upper} [label=\"{kind}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl TryFrom<PosetShape> for Poset {
    type Error = Error;

    fn try_from(s: PosetShape) -> Result<Self> {
        let n = s.nodes.len();
        for &(l, u, kind) in &s.edges {
            if l >= n || u >= n || !"ABCD".contains(kind) {
                return Err(Error::Malformed(format!("bad edge ({l},{u},{kind})")));
            }
        }
        Ok(Poset {
            nodes: s.nodes,
            edges: s.edges,
        })
    }
}

impl From<Poset> for PosetShape {
    fn from(p: Poset) -> Self {
        PosetShape {
            nodes: p.nodes,
            edges: p.edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn running_example() -> LrTableau {
        LrTableau::new(p(&[4, 3, 2, 2, 1]), p(&[4, 3, 3, 3, 2, 1]), p(&[5, 4, 3, 3, 2, 1])).unwrap()
    }

    fn by_arcs(poset: &Poset, arcs: &[(u32, u32)]) -> usize {
        poset
            .nodes()
            .iter()
            .position(|k| k.arcs() == arcs)
            .expect("node present")
    }

    #[test]
    fn running_example_poset() {
        let poset = Poset::for_filling(&running_example());
        assert_eq!(poset.nodes().len(), 7);
        assert_eq!(poset.edges().len(), 9);
        let covers: Vec<(Vec<(u32, u32)>, Vec<(u32, u32)>)> = vec![
            (vec![(5, 3), (4, 3)], vec![(5, 2), (4, 3)]),
            (vec![(5, 2), (4, 3)], vec![(5, 3), (4, 2)]),
            (vec![(5, 2), (4, 3)], vec![(5, 1), (4, 3)]),
            (vec![(5, 3), (4, 2)], vec![(5, 3), (4, 1)]),
            (vec![(5, 3), (4, 2)], vec![(5, 1), (4, 2)]),
            (vec![(5, 1), (4, 3)], vec![(5, 3), (4, 1)]),
            (vec![(5, 1), (4, 3)], vec![(5, 1), (4, 2)]),
            (vec![(5, 3), (4, 1)], vec![(5, 2), (4, 1)]),
            (vec![(5, 1), (4, 2)], vec![(5, 2), (4, 1)]),
        ];
        for (lo, up) in covers {
            let l = by_arcs(&poset, &lo);
            let u = by_arcs(&poset, &up);
            assert!(
                poset.edges().iter().any(|&(a, b, _)| (a, b) == (l, u)),
                "missing cover {lo:?} -> {up:?}"
            );
        }
        assert_eq!(poset.minimal(), vec![by_arcs(&poset, &[(5, 3), (4, 3)])]);
        assert_eq!(poset.maximal(), vec![by_arcs(&poset, &[(5, 2), (4, 1)])]);
        // the extremes are the dominant and the subscript-minimal refinement
        let dom = KleinTableau::dominant(&running_example());
        assert_eq!(&poset.nodes()[poset.minimal()[0]], &dom);
        let max = KleinTableau::maximal(&running_example());
        assert_eq!(&poset.nodes()[poset.maximal()[0]], &max);
    }

    #[test]
    fn small_type_poset_crosses_fillings() {
        let poset =
            Poset::for_type(&p(&[2, 1, 1]), &p(&[4, 3, 2, 1]), &p(&[3, 2, 1])).unwrap();
        assert_eq!(poset.nodes().len(), 6);
        assert_eq!(poset.edges().len(), 6);
        let covers = vec![
            (vec![(4, 3)], vec![(4, 2)], 'B'),
            (vec![(3, 2)], vec![(4, 2)], 'D'),
            (vec![(3, 2)], vec![(3, 1)], 'B'),
            (vec![(2, 1)], vec![(3, 1)], 'D'),
            (vec![(4, 2)], vec![(4, 1)], 'B'),
            (vec![(3, 1)], vec![(4, 1)], 'D'),
        ];
        for (lo, up, kind) in covers {
            let l = by_arcs(&poset, &lo);
            let u = by_arcs(&poset, &up);
            assert!(
                poset.edges().contains(&(l, u, kind)),
                "missing cover {lo:?} -> {up:?} by {kind}"
            );
        }
        let minimal: Vec<&[(u32, u32)]> = poset
            .minimal()
            .into_iter()
            .map(|i| poset.nodes()[i].arcs())
            .collect();
        assert_eq!(minimal.len(), 3);
        for arcs in [&[(4, 3)][..], &[(3, 2)][..], &[(2, 1)][..]] {
            assert!(minimal.contains(&arcs));
        }
        assert_eq!(poset.maximal(), vec![by_arcs(&poset, &[(4, 1)])]);
    }

    #[test]
    fn dot_output_is_stable() {
        let poset = Poset::for_filling(&running_example());
        let dot = poset.to_dot();
        assert!(dot.starts_with("digraph order {"));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("arcs (5,3),(4,3); poles 2,1; x=0"));
        assert_eq!(dot.matches(" -> ").count(), 9);
        for kind in ["label=\"A\"", "label=\"B\""] {
            assert!(dot.contains(kind), "missing {kind}");
        }
    }

    #[test]
    fn poset_serialization_round_trip() {
        let poset = Poset::for_filling(&running_example());
        let json = serde_json::to_string(&poset).unwrap();
        let back: Poset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poset);
        assert!(serde_json::from_str::<Poset>(r#"{"nodes":[],"edges":[[0,1,"A"]]}"#).is_err());
    }
}
