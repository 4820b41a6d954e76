//! Regular complements in `Z^k`: for each `r`, an `s` with `r s = 0` and
//! `r + s` a non-zero-divisor.
//!
//! Run with `cargo run --example regular_complement -- --seed 3`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilstrat::ProductRingElem;

fn seed_from_args() -> u64 {
    let args: Vec<String> = std::env::args().collect();
    args.windows(2).find(|w| w[0] == "--seed").and_then(|w| w[1].parse().ok()).unwrap_or(1)
}

fn main() -> nilstrat::Result<()> {
    let seed = seed_from_args();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    println!("seed {seed}");
    for _ in 0..6 {
        let k = rng.gen_range(1..=6);
        let coords =
            (0..k).map(|_| if rng.gen_bool(0.4) { BigInt::from(0) } else { BigInt::from(rng.gen_range(-20..=20)) });
        let r = ProductRingElem::new(coords.collect())?;
        let s = r.regular_complement();
        println!(
            "r = {:<24} s = {:<20} r*s = {:<20} r+s regular: {}",
            r.to_json_string(),
            s.to_json_string(),
            (&r * &s).to_json_string(),
            (&r + &s).is_regular()
        );
    }
    Ok(())
}
