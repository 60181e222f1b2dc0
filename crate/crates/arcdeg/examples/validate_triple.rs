//! Check whether a subspace type fits inside an ambient type with a given
//! quotient type, and count the ways it can.

use arcdeg::{LrTableau, Partition};

fn main() {
    let alpha: Partition = "2,1,1".parse().unwrap();
    let beta: Partition = "4,3,2,1".parse().unwrap();
    let gamma: Partition = "3,2,1".parse().unwrap();

    let fillings = LrTableau::enumerate(&alpha, &beta, &gamma).unwrap();
    println!(
        "{alpha} embeds into {beta} with quotient {gamma} in {} ways:",
        fillings.len()
    );
    for lr in &fillings {
        println!("{}", lr.ascii());
    }

    // the quotient type must interlace properly; this one cannot work
    let bad: Partition = "4,2,1".parse().unwrap();
    let none = LrTableau::enumerate(&alpha, &beta, &bad).unwrap();
    println!("quotient {bad}: {} fillings", none.len());

    // subspaces killed by the square of the operator only
    let deep: Partition = "3,1".parse().unwrap();
    match LrTableau::enumerate(&deep, &beta, &gamma) {
        Err(e) => println!("content {deep}: {e}"),
        Ok(_) => unreachable!(),
    }
}
