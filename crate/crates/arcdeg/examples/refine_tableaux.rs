//! Subscript the 2s of a filling in every consistent way. Each refinement
//! pins down one equivalence class of embeddings, not just the three types.

use arcdeg::arc::ArcDiagram;
use arcdeg::{KleinTableau, LrTableau, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    let lr = LrTableau::new(p("4,3,2,2,1"), p("4,3,3,3,2,1"), p("5,4,3,3,2,1")).unwrap();
    println!("{}", lr.ascii());

    let refinements = KleinTableau::refinements(&lr);
    let dominant = KleinTableau::dominant(&lr);
    let maximal = KleinTableau::maximal(&lr);
    println!("{} refinements:", refinements.len());
    for k in &refinements {
        let x = ArcDiagram::from(k).crossings();
        let mark = if *k == dominant {
            "  <- dominant"
        } else if *k == maximal {
            "  <- maximal"
        } else {
            ""
        };
        println!("  x={x}  {k}{mark}");
    }

    // the refinement count depends on the filling, not only on the type
    println!();
    for lr in LrTableau::enumerate(&p("2,1,1"), &p("4,3,2,1"), &p("3,2,1")).unwrap() {
        println!(
            "filling with middle shape {} has {} refinements",
            lr.zeta(),
            KleinTableau::refinements(&lr).len()
        );
    }
}
