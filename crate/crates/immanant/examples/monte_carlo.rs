//! Monte Carlo quadrature of the orthogonality integrals over the
//! group-translated fundamental domain, compared with the exact rational
//! oracle. Estimates are reproducible from the seed.
//!
//! Run with `cargo run --release --example monte_carlo`.

use immanant::functions::ImmanantFamily;
use immanant::geometry::{FundamentalDomain, Weight};
use immanant::orthogonality::{exact_inner_product, numeric_inner_product};

fn main() -> immanant::Result<()> {
    let n = 2;
    let family = ImmanantFamily::new(n)?;
    let volume = FundamentalDomain::new(n)?.volume();
    let lambda = Weight::from_omega(vec![1, 1])?;
    let mu = Weight::from_omega(vec![1, 0])?;
    let samples = 200_000;

    println!("rank {n}, |F| = {volume:.9}, {samples} samples per integral");
    for (k, l, a, b) in [
        (3, 3, &lambda, &lambda),
        (3, 3, &lambda, &mu),
        (1, 1, &mu, &mu),
        (2, 3, &lambda, &lambda),
    ] {
        let exact = exact_inner_product(&family, k, l, a, b)?;
        let target = *exact.numer() as f64 / *exact.denom() as f64 * volume;
        let estimate = numeric_inner_product(&family, k, l, a, b, samples, 2024)?;
        let sigma = if estimate.std_error > 0.0 {
            format!("{:.2}", (estimate.value.re - target).abs() / estimate.std_error)
        } else {
            "0.00".into()
        };
        println!(
            "  k={k} l={l} lambda={:?} mu={:?}: estimate {:+.6}{:+.6}i, exact {target:+.6}, |dev| = {sigma} SE",
            a.omega(),
            b.omega(),
            estimate.value.re,
            estimate.value.im,
        );
    }

    // Same seed, same estimate; the quadrature is deterministic.
    let first = numeric_inner_product(&family, 3, 3, &lambda, &lambda, 50_000, 9)?;
    let second = numeric_inner_product(&family, 3, 3, &lambda, &lambda, 50_000, 9)?;
    println!("same seed twice: {:?} == {:?}", first.value, second.value);
    Ok(())
}
