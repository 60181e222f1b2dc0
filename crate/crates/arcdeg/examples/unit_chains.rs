//! Not every degeneration decomposes into steps removing one crossing at a
//! time. Covers can drop the crossing number by two, and whether a unit
//! chain exists is a separate, decidable question.

use arcdeg::arc::ArcDiagram;
use arcdeg::order::{leq_hom, leq_moves, unit_chain_exists};
use arcdeg::poset::Poset;
use arcdeg::{KleinTableau, LrTableau, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    let lr = LrTableau::new(p("4,3,2,2,1"), p("4,3,3,3,2,1"), p("5,4,3,3,2,1")).unwrap();
    let poset = Poset::for_filling(&lr);
    let nodes = poset.nodes();

    for &(lo, up, kind) in poset.edges() {
        let y = &nodes[lo];
        let z = &nodes[up];
        let gap = ArcDiagram::from(y).crossings() as i64 - ArcDiagram::from(z).crossings() as i64;
        let unit = unit_chain_exists(y, z).unwrap();
        println!(
            "cover {lo} -> {up} ({kind}), crossing gap {}, unit chain: {unit}",
            -gap
        );
        assert!(leq_hom(y, z).unwrap());
        assert!(leq_moves(y, z).unwrap());
    }

    // the seven-row pair admits a fully gradual chain
    let y = KleinTableau::from_arcs(
        p("6,5,4,3,2,1"),
        p("7,6,5,4,3,2,1"),
        vec![(7, 3), (6, 2), (5, 4)],
    )
    .unwrap();
    let z = KleinTableau::from_arcs(
        p("6,5,4,3,2,1"),
        p("7,6,5,4,3,2,1"),
        vec![(7, 2), (6, 3), (5, 1)],
    )
    .unwrap();
    println!();
    println!("seven-row pair unit chain: {}", unit_chain_exists(&y, &z).unwrap());
}
