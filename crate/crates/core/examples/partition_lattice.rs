//! The dominance lattice on partitions of 6: meets, joins, conjugation and
//! the first incomparable pair.
//!
//! Run with `cargo run --example partition_lattice`.

use nilstrat::partition::{dominates, min_element};
use nilstrat::Partition;

fn main() -> nilstrat::Result<()> {
    let all = Partition::all(6);
    println!("{} partitions of 6:", all.len());
    for mu in &all {
        println!("  {mu:<14} conjugate {}", mu.conjugate());
    }

    let a: Partition = "[3,3]".parse()?;
    let b: Partition = "[4,1,1]".parse()?;
    println!();
    println!("{a} <= {b}? {}", dominates(&a, &b)?);
    println!("{b} <= {a}? {}", dominates(&b, &a)?);
    println!("meet {}  join {}", a.meet(&b)?, a.join(&b)?);
    println!("min of {{{a}, {b}}}: {:?}", min_element([&a, &b])?.map(|m| m.to_string()));

    let chain = [a.clone(), a.meet(&b)?, Partition::column(6)];
    println!("min of a chain: {}", min_element(&chain)?.expect("chains have minima"));
    Ok(())
}
