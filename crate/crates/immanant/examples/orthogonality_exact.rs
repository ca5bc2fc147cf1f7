//! The orthogonality theorem checked in exact rational arithmetic: the
//! inner product of two immanant functions over the translated
//! fundamental domain, against its closed form.
//!
//! Run with `cargo run --example orthogonality_exact`.

use immanant::functions::ImmanantFamily;
use immanant::geometry::Weight;
use immanant::orthogonality::{
    cs_orthogonality_check, dominant_weights, exact_inner_product, rational_string, theorem_rhs,
};

fn main() -> immanant::Result<()> {
    let n = 2;
    let family = ImmanantFamily::new(n)?;
    let lambda = Weight::from_omega(vec![1, 1])?;
    let mu = Weight::from_omega(vec![1, 0])?;

    // Same function, same weight: the diagonal value.
    for k in 1..=family.num_characters() {
        let got = exact_inner_product(&family, k, k, &lambda, &lambda)?;
        println!(
            "<Imm^{k}(1,1), Imm^{k}(1,1)> / |F| = {} (closed form {})",
            rational_string(got),
            rational_string(theorem_rhs(&family, k, k, &lambda, &lambda)?)
        );
    }

    // Different weights or different functions: zero.
    println!(
        "<Imm^3(1,1), Imm^3(1,0)> / |F| = {}",
        rational_string(exact_inner_product(&family, 3, 3, &lambda, &mu)?)
    );
    println!(
        "<Imm^1(1,0), Imm^2(1,0)> / |F| = {}",
        rational_string(exact_inner_product(&family, 1, 2, &mu, &mu)?)
    );

    // A full sweep over small dominant weights.
    let sweep = dominant_weights(n, 2)?;
    let mut tuples = 0u32;
    let mut agree = 0u32;
    for k in 1..=family.num_characters() {
        for l in 1..=family.num_characters() {
            for a in &sweep {
                for b in &sweep {
                    tuples += 1;
                    let got = exact_inner_product(&family, k, l, a, b)?;
                    if got == theorem_rhs(&family, k, l, a, b)? {
                        agree += 1;
                    }
                }
            }
        }
    }
    println!("sweep over {} weights: {agree}/{tuples} tuples match the closed form", sweep.len());

    // The classical symmetric/antisymmetric special cases over F itself.
    let check = cs_orthogonality_check(&family, &lambda, &lambda)?;
    println!(
        "C pair at (1,1): {} vs {}",
        rational_string(check.c.computed),
        rational_string(check.c.expected)
    );
    if let Some(s) = check.s {
        println!("S pair at (1,1): {} vs {}", rational_string(s.computed), rational_string(s.expected));
    }
    Ok(())
}
