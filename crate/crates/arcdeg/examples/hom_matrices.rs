//! The closed-form hom counts between indecomposable pairs, and how module
//! hom counts assemble from them. The two-block pair with touching
//! exponents splits, and the table respects that identity.

use arcdeg::s2::{b2_or_pair, hom_dim};
use arcdeg::{Indec, KleinTableau, Module, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn main() {
    // a small corner of the table
    let objects = [
        Indec::P0(3),
        Indec::P1(3),
        Indec::P2(3),
        Indec::B2(4, 2),
        Indec::B2(4, 1),
    ];
    print!("{:>10}", "");
    for y in objects {
        print!("{:>10}", y.to_string());
    }
    println!();
    for x in objects {
        print!("{:>10}", x.to_string());
        for y in objects {
            print!("{:>10}", hom_dim(x, y));
        }
        println!();
    }

    // B2(m, m-1) is shorthand for a split pair
    println!();
    let split = b2_or_pair(5, 4);
    println!("B2(5,4) stands for {:?}", split);
    let direct: u64 = split.iter().map(|&s| hom_dim(Indec::B2(6, 2), s)).sum();
    println!("[B2(6,2), B2(5,4)] via the split: {direct}");

    // module hom counts are sums over summand pairs
    let z = KleinTableau::from_arcs(
        p("6,5,4,3,2,1"),
        p("7,6,5,4,3,2,1"),
        vec![(7, 2), (6, 3), (5, 1)],
    )
    .unwrap();
    let m = Module::from_klein(&z);
    println!();
    println!("z decomposes as {m}");
    println!("[B2(6,3), z] = {}", m.hom_from(Indec::B2(6, 3)));
    println!("dim End(z) = {}", m.dim_end());
}
