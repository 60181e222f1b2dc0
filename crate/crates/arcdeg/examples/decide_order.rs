//! Decide whether one embedding degenerates to another by comparing hom
//! counts against a finite family of test pairs. A failure names the first
//! test pair whose count drops; that object is the certificate.

use arcdeg::order::{delta_hom, leq_hom};
use arcdeg::{KleinTableau, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn seven_rows(arcs: &[(u32, u32)]) -> KleinTableau {
    KleinTableau::from_arcs(p("6,5,4,3,2,1"), p("7,6,5,4,3,2,1"), arcs.to_vec()).unwrap()
}

fn main() {
    let y = seven_rows(&[(7, 3), (6, 2), (5, 4)]);
    let z = seven_rows(&[(7, 2), (6, 3), (5, 1)]);

    println!("y = {y}");
    println!("z = {z}");
    println!("y <= z: {}", leq_hom(&y, &z).unwrap());

    // the table of hom count differences, rows by ambient level
    let delta = delta_hom(&y, &z).unwrap();
    let n = delta.n();
    println!("nonzero entries of [V,z] - [V,y]:");
    for l in 3..=n {
        for t in 1..=l - 2 {
            if delta.b2(l, t) != 0 {
                println!("  V = B2({l},{t}): {}", delta.b2(l, t));
            }
        }
    }
    for t in 1..=n {
        if delta.p1(t) != 0 {
            println!("  V = P1({t}): {}", delta.p1(t));
        }
    }
    println!("{}", serde_json::to_string(&delta).unwrap());

    // swapping one subscript breaks the relation and yields a witness
    let near_miss = seven_rows(&[(7, 2), (6, 3), (5, 4)]);
    let delta = delta_hom(&y, &near_miss).unwrap();
    println!();
    println!("near miss {near_miss}");
    println!(
        "y <= near_miss: {}, certificate: {}",
        delta.is_nonnegative(),
        delta.first_negative().unwrap()
    );
}
