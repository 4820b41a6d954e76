//! Component complexes: strata, point types, minimal lifts, the validator,
//! and a product complex.
//!
//! Run with `cargo run --example component_strata`.

use nilstrat::strata::{product_complex, ProductFactor};
use nilstrat::{ComponentComplex, Partition, TameBlockSpec};

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn main() -> nilstrat::Result<()> {
    let c = ComponentComplex::from_parts(
        4,
        [("A", p("[3,1]")), ("B", p("[2,1,1]")), ("C", p("[2,1,1]")), ("D", p("[2,2]"))],
        [("x", vec!["A", "B", "C"]), ("y", vec!["A"]), ("z", vec!["A", "D"])],
    )?;
    println!("valid: {}", c.is_valid());
    for mu in Partition::all(4) {
        println!("stratum {mu:<11} {:?}", c.stratum(&mu)?);
    }
    for point in ["x", "y", "z"] {
        println!(
            "point {point}: type {}, minimal lift {}, in closure of [2,2]: {}",
            c.mu_of_point(point)?,
            c.minimal_lift(point)?,
            c.closure_test(point, &p("[2,2]"))?
        );
    }

    let bad = ComponentComplex::from_parts(6, [("a", p("[2,2,2]")), ("b", p("[3,1,1,1]"))], [("x", vec!["a", "b"])])?;
    for v in bad.validate() {
        println!("\nviolation at {}: meet {} is not attained", v.point, v.meet);
    }
    println!("minimal lift: {}", bad.minimal_lift("x").unwrap_err());

    let line = ComponentComplex::from_parts(1, [("c", p("[1]"))], [("s", vec!["c"])])?;
    let product = product_complex(&[
        ProductFactor { complex: c, spec: TameBlockSpec::trivial("t1") },
        ProductFactor { complex: line, spec: TameBlockSpec::new("t2", p("[2]"), 1)? },
    ])?;
    println!("\nproduct (n = {}):", product.n());
    for (id, label) in product.components() {
        println!("  {id:<6} {label}");
    }
    println!("stratum [3,2,1]: {:?}", product.stratum(&p("[3,2,1]"))?);
    println!("product valid: {}", product.is_valid());
    Ok(())
}
