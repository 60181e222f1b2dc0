//! Orbit dimensions of embeddings, computed two ways: from endomorphism
//! counts of the three modules involved, and from moments of the types plus
//! the crossing number. Along a fixed type the first formula moves in
//! lockstep with the crossings.

use arcdeg::arc::ArcDiagram;
use arcdeg::s2::{dim_end_nilpotent, orbit_dim_embedding, orbit_dim_moments};
use arcdeg::{KleinTableau, LrTableau, Module, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    let lr = LrTableau::new(p("4,3,2,2,1"), p("4,3,3,3,2,1"), p("5,4,3,3,2,1")).unwrap();
    println!(
        "ambient End dimension {}, subspace End dimension {}",
        dim_end_nilpotent(lr.beta()),
        dim_end_nilpotent(&lr.alpha()),
    );

    println!("refinement                      x  dim End  orbit(emb)  orbit(mom)");
    for k in KleinTableau::refinements(&lr) {
        let module = Module::from_klein(&k);
        let x = ArcDiagram::from(&k).crossings();
        println!(
            "{:<30} {:>2} {:>8} {:>11} {:>11}",
            module.to_string(),
            x,
            module.dim_end(),
            orbit_dim_embedding(&k),
            orbit_dim_moments(&k),
        );
        // both orbit dimensions drop by exactly the crossing count
        assert_eq!(orbit_dim_embedding(&k) + x as i64, 28);
        assert_eq!(orbit_dim_moments(&k) + x as i64, 8);
    }
}
