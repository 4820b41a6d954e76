//! Jordan types of nilpotent matrices from the ranks of their powers, over
//! the rationals and over a prime field.
//!
//! Run with `cargo run --example jordan_types`.

use nilstrat::{ExactMatrix, Partition, ScalarDomain};

fn main() -> nilstrat::Result<()> {
    let mu: Partition = "[3,2,2]".parse()?;
    let n = mu.jordan_matrix();
    println!("N_{mu}:\n{n}");
    println!("rank sequence {:?}", n.nilpotent_rank_sequence()?);
    println!("Jordan type {}", n.jordan_type()?);

    // A dense conjugate keeps its type.
    let p = ExactMatrix::from_int_rows(&[
        [1, 2, 0, 1, 0, 0, 3],
        [0, 1, 1, 0, 2, 0, 0],
        [1, 0, 1, 0, 0, 1, 0],
        [0, 0, 0, 1, 1, 0, 1],
        [2, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 0, 1, 1],
        [0, 0, 1, 1, 0, 0, 1],
    ])?;
    let conj = p.mul(&n)?.mul(&p.inverse()?)?;
    println!("\nP N P^-1:\n{conj}");
    println!("Jordan type {}", conj.jordan_type()?);

    // [[3, 1], [-9, -3]] squares to zero, over Q and over F_5.
    let m = ExactMatrix::from_int_rows(&[[3, 1], [-9, -3]])?;
    println!("\n{m}type over Q: {}", m.jordan_type()?);
    println!("type over F_5: {}", m.to_prime_field(5)?.jordan_type()?);
    println!("type over F_3: {}", m.to_prime_field(3)?.jordan_type()?);

    let not_nilpotent = ExactMatrix::identity(2, ScalarDomain::Rational)?;
    println!("\nidentity: {}", not_nilpotent.jordan_type().unwrap_err());
    Ok(())
}
