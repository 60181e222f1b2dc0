//! Sweep every embedding of one nilpotent operator into another over a
//! small prime field, and watch the classes land exactly on the tableau
//! enumeration, orbit sizes and all.

use arcdeg::ff::oracle::census;
use arcdeg::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    // the smallest interesting case: one Jordan block inside another
    let tiny = census(&p("1"), &p("2"), 2, 1 << 10).unwrap();
    println!(
        "GF(2), {} into {}: {} points, {} injective",
        tiny.alpha, tiny.beta, tiny.points, tiny.injective
    );
    for class in &tiny.classes {
        println!(
            "  quotient {} is {} with orbit {} and stabilizer {}",
            class.gamma, class.module, class.count, class.stabilizer
        );
    }

    println!();
    let c = census(&p("2,1,1"), &p("4,3,2,1"), 2, 1 << 16).unwrap();
    println!(
        "GF(2), {} into {}: {}^{} = {} points, {} injective, group order {}",
        c.alpha, c.beta, c.prime, c.intertwiner_dim, c.points, c.injective, c.group_order
    );
    println!("{} classes, every orbit identity holds:", c.classes.len());
    for class in &c.classes {
        assert!(class.orbit_identity);
        println!(
            "  gamma {:<10} {} x {} = group order: {}",
            class.gamma.to_string(),
            class.count,
            class.stabilizer,
            class.module
        );
    }
}
