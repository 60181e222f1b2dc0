//! Read a subscripted tableau as a diagram of arcs and poles, and count its
//! crossings two ways: geometrically, and as a signed sum over restored
//! shapes read off the tableau alone.

use arcdeg::arc::{deviation, ArcDiagram};
use arcdeg::{KleinTableau, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    let gamma = p("6,5,4,3,2,1");
    let beta = p("7,6,5,4,3,2,1");
    let y = KleinTableau::from_arcs(gamma.clone(), beta.clone(), vec![(7, 3), (6, 2), (5, 4)])
        .unwrap();
    let z = KleinTableau::from_arcs(gamma, beta, vec![(7, 2), (6, 3), (5, 1)]).unwrap();

    for (name, k) in [("y", &y), ("z", &z)] {
        let d = ArcDiagram::from(k);
        println!("{name} = {k}");
        print!("{}", d.ascii());
        println!("crossings: {}", d.crossings());
        println!("deviation: {}", deviation(k));
        println!();
    }

    // arcs sharing an endpoint never cross; poles count once per arc over them
    let shared = ArcDiagram::new(5, vec![(5, 2), (4, 2)], vec![3]).unwrap();
    print!("{}", shared.ascii());
    println!("crossings: {}", shared.crossings());
}
