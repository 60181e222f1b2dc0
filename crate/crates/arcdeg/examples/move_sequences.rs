//! Walk from the bigger embedding down to the smaller one by elementary
//! moves on the arc diagram. Every step is itself a degeneration, witnessed
//! by a short exact sequence, and the crossing number strictly drops.

use arcdeg::arc::ArcDiagram;
use arcdeg::order::move_sequence;
use arcdeg::{KleinTableau, Partition, Strategy};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    let gamma = p("6,5,4,3,2,1");
    let beta = p("7,6,5,4,3,2,1");
    let y = KleinTableau::from_arcs(gamma.clone(), beta.clone(), vec![(7, 3), (6, 2), (5, 4)])
        .unwrap();
    let z = KleinTableau::from_arcs(gamma, beta, vec![(7, 2), (6, 3), (5, 1)]).unwrap();

    for strategy in [Strategy::Baseline, Strategy::Parallelogram] {
        println!("{strategy:?} chain from z down to y");
        let mut x = ArcDiagram::from(&z).crossings();
        println!("  start x={x}: {z}");
        for step in move_sequence(&y, &z, strategy).unwrap() {
            x = ArcDiagram::from(&step.result).crossings();
            let (sub, mid, quot) = step.mv.extension_witness();
            println!("  {} -> x={x}", step.mv);
            println!("     0 -> {sub} -> {mid} -> {quot} -> 0");
        }
        println!();
    }
}
