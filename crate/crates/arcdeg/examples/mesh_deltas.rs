//! Each move changes the hom count table in a rectangle pattern, and the
//! multiplicity changes of the summands are recoverable from the table by a
//! four-point stencil. A move is a local event in the hom grid.

use arcdeg::order::{delta_hom, delta_mesh, down_moves};
use arcdeg::{KleinTableau, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    let z = KleinTableau::from_arcs(
        p("6,5,4,3,2,1"),
        p("7,6,5,4,3,2,1"),
        vec![(7, 2), (6, 3), (5, 1)],
    )
    .unwrap();

    for (mv, res) in down_moves(&z) {
        let delta = delta_hom(&res, &z).unwrap();
        let mesh = delta_mesh(&res, &z).unwrap();
        println!("{mv}: summand changes {:?}", mesh.entries());

        // the hom deltas are exactly the move's characteristic rectangle
        let n = delta.n();
        for l in 3..=n {
            for t in 1..=l - 2 {
                assert_eq!(delta.b2(l, t), mv.delta_at_b2(l, t));
            }
        }
        for t in 1..=n {
            assert_eq!(delta.p1(t), mv.delta_at_p1(t));
        }
        // and the stencil of the delta table recovers the summand changes
        for l in 3..=n {
            for t in 1..=l - 2 {
                assert_eq!(delta.mesh_b2(l, t), mesh.get(arcdeg::Indec::B2(l, t)));
            }
        }
    }
}
