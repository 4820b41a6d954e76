//! Finite-field points of `Φ Σ Φ⁻¹ = Σ^q`: counts, stratification by the
//! Jordan type of `Σ^a - I`, and orbits under simultaneous conjugation.
//!
//! Run with `cargo run --example moduli_enumeration`.

use nilstrat::moduli::{self, ModuliInstance};
use nilstrat::ExactMatrix;

fn rows(m: &ExactMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", row.join(" "))
        })
        .collect();
    rows.join(" ")
}

fn main() -> nilstrat::Result<()> {
    println!("{:<12} {:>6} {:>7}", "(q, r, p)", "pairs", "orbits");
    for (q, r, p) in [(1, 1, 5), (2, 1, 3), (2, 1, 7), (1, 2, 2), (2, 2, 3), (3, 2, 2)] {
        let inst = ModuliInstance::new(q, r, p)?;
        let pairs = moduli::enumerate_pairs(&inst)?;
        println!("{:<12} {:>6} {:>7}", format!("({q}, {r}, {p})"), pairs.len(), moduli::orbit_count(&inst)?);
    }

    let inst = ModuliInstance::new(1, 2, 3)?.with_a(2)?;
    let s = moduli::sigma_stratify(&inst)?;
    println!("\n(q, r, p, a) = (1, 2, 3, 2): {}", s.to_json_string());

    println!("\norbit representatives for (1, 2, 2):");
    for (pair, size) in moduli::orbits(&ModuliInstance::new(1, 2, 2)?)? {
        println!(
            "  phi {}  sigma {}  size {size}  unipotent part {}",
            rows(&pair.phi),
            rows(&pair.sigma),
            moduli::unipotent_part_type(&pair.sigma)?
        );
    }

    let too_big = ModuliInstance::new(1, 3, 5)?;
    println!("\n(1, 3, 5): {}", moduli::enumerate_pairs(&too_big).unwrap_err());
    Ok(())
}
