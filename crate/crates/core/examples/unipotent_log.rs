//! Logarithms of random unipotent rational matrices keep the Jordan type of
//! `M - I`.
//!
//! Run with `cargo run --example unipotent_log -- --seed 7`.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilstrat::{ExactMatrix, Partition, ScalarDomain};

fn seed_from_args() -> u64 {
    let args: Vec<String> = std::env::args().collect();
    args.windows(2).find(|w| w[0] == "--seed").and_then(|w| w[1].parse().ok()).unwrap_or(1)
}

fn random_unimodular(rng: &mut impl Rng, n: usize) -> nilstrat::Result<ExactMatrix> {
    let mut lower = vec![vec![0i64; n]; n];
    let mut upper = vec![vec![0i64; n]; n];
    for i in 0..n {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..n {
            if j < i {
                lower[i][j] = rng.gen_range(-2..=2);
            } else if j > i {
                upper[i][j] = rng.gen_range(-2..=2);
            }
        }
    }
    ExactMatrix::from_int_rows(&lower)?.mul(&ExactMatrix::from_int_rows(&upper)?)
}

fn main() -> nilstrat::Result<()> {
    let seed = seed_from_args();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    println!("seed {seed}");
    for mu in ["[3]", "[2,2]", "[3,1,1]", "[4,2]"] {
        let mu: Partition = mu.parse()?;
        let n = mu.size();
        let c = BigRational::new(rng.gen_range(1..=5i64).into(), rng.gen_range(1..=5i64).into());
        let unipotent = ExactMatrix::identity(n, ScalarDomain::Rational)?.add(&mu.jordan_matrix().scale(&c)?)?;
        let p = random_unimodular(&mut rng, n)?;
        let m = p.mul(&unipotent)?.mul(&p.inverse()?)?;
        let log = m.unipotent_log()?;
        println!("\nM, conjugate of I + ({c}) N_{mu}:\n{m}log M:\n{log}");
        println!("type(M - I) = {}, type(log M) = {}", m.minus_identity()?.jordan_type()?, log.jordan_type()?);
    }
    Ok(())
}
