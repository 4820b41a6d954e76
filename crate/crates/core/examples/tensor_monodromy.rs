//! Jordan-type calculus for monodromy: tensor products, direct sums,
//! induction and the total type of a list of tame blocks.
//!
//! Run with `cargo run --example tensor_monodromy`.

use nilstrat::monodromy::{self, kronecker_sum, tensor_type, tensor_type_by_matrix, TameBlockSpec};
use nilstrat::Partition;

fn main() -> nilstrat::Result<()> {
    let pairs = [("[2]", "[2]"), ("[2]", "[3]"), ("[3,1]", "[2,2]"), ("[4,2,1]", "[3]")];
    println!("{:<10} {:<8} {:<22} Kronecker sum", "alpha", "beta", "closed form");
    for (a, b) in pairs {
        let (a, b): (Partition, Partition) = (a.parse()?, b.parse()?);
        println!(
            "{:<10} {:<8} {:<22} {}",
            a.to_string(),
            b.to_string(),
            tensor_type(&a, &b)?.to_string(),
            tensor_type_by_matrix(&a, &b)?
        );
    }

    let two: Partition = "[2]".parse()?;
    println!("\nN_[2] (x) 1 + 1 (x) N_[2]:\n{}", kronecker_sum(&two, &two));

    let blocks = [
        (TameBlockSpec::new("unramified", "[1]".parse()?, 2)?, "[2,1]".parse::<Partition>()?),
        (TameBlockSpec::new("tame", "[2]".parse()?, 1)?, "[2]".parse()?),
    ];
    for (spec, alpha) in &blocks {
        println!("block {:<10} alpha {alpha}: {}", spec.label, monodromy::block_type(spec, alpha)?);
    }
    println!("total type {}", monodromy::total_type(blocks.iter().map(|(s, a)| (s, a)))?);

    // Lowering a block's type can only lower the total.
    let lower = [(blocks[0].0.clone(), "[1,1,1]".parse()?), blocks[1].clone()];
    println!("with [1,1,1] in the first block: {}", monodromy::total_type(lower.iter().map(|(s, a)| (s, a)))?);
    Ok(())
}
