//! Build the degeneration order on a whole family of embeddings at once:
//! all refinements of one filling, or everything with a fixed triple of
//! types. Covers come labeled with the move kind realizing them.

use arcdeg::arc::ArcDiagram;
use arcdeg::poset::Poset;
use arcdeg::{LrTableau, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn show(name: &str, poset: &Poset) {
    println!("{name}: {} nodes", poset.nodes().len());
    for (i, node) in poset.nodes().iter().enumerate() {
        println!("  {i}: x={} {node}", ArcDiagram::from(node).crossings());
    }
    for &(lower, upper, kind) in poset.edges() {
        println!("  {lower} -> {upper} by a {kind} move");
    }
    println!("  minimal {:?}, maximal {:?}", poset.minimal(), poset.maximal());
    println!();
}

fn main() {
    let lr = LrTableau::new(p("4,3,2,2,1"), p("4,3,3,3,2,1"), p("5,4,3,3,2,1")).unwrap();
    let by_filling = Poset::for_filling(&lr);
    show("one filling", &by_filling);

    // across fillings the subscript data still orders totally consistently;
    // moves that change the filling show up as C and D covers
    let by_type = Poset::for_type(&p("2,1,1"), &p("4,3,2,1"), &p("3,2,1")).unwrap();
    show("whole type", &by_type);

    println!("{}", by_type.to_dot());
}
