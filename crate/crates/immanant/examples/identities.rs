//! Structural identities: exchange symmetries between weight and
//! argument, expansion of pointwise products into exponentials, and the
//! reduction of group-symmetrized products to trivial-character
//! functions.
//!
//! Run with `cargo run --example identities`.

use immanant::functions::{approx_complex, ImmanantFamily, ImmanantSpec};
use immanant::geometry::{Point, Weight};

fn main() -> immanant::Result<()> {
    let n = 2;
    let family = ImmanantFamily::new(n)?;
    let lambda = Weight::from_omega(vec![1, 2])?;
    // Strictly dominant, so the antisymmetric factor below is not
    // identically zero.
    let mu = Weight::from_omega(vec![1, 1])?;
    let x = Point::from_omega(&[0.27, -0.09])?;

    // Moving a group element between the weight and the argument.
    let spec = ImmanantSpec::new(n, 3, lambda.clone())?;
    let all_hold = family
        .group()
        .iter()
        .map(|w| family.symmetry_check(&spec, w, &x, 1e-10))
        .collect::<immanant::Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    println!("exchange symmetries across all {} group elements: {}", family.order(), all_hold);

    // A product of two functions is a finite sum of exponentials indexed
    // by pairs of group elements.
    let spec_l = ImmanantSpec::new(n, 3, lambda.clone())?;
    let spec_m = ImmanantSpec::new(n, 2, mu.clone())?;
    let expansion = family.product_expand(&spec_l, &spec_m)?;
    let pointwise = family.eval_weight(3, &lambda, &x)? * family.eval_weight(2, &mu, &x)?;
    let expanded = expansion.eval(&x)?;
    println!(
        "product expansion: {} distinct exponents, total coefficient {}",
        expansion.num_terms(),
        expansion.total_coefficient()
    );
    println!(
        "  pointwise {:.12}{:+.12}i vs expanded {:.12}{:+.12}i (agree: {})",
        pointwise.re,
        pointwise.im,
        expanded.re,
        expanded.im,
        approx_complex(pointwise, expanded, 1e-10)
    );

    // Summing the product over the group kills every nontrivial character:
    // what is left is a combination of first (symmetric) functions.
    for conjugate in [false, true] {
        let reduced = family.lemma_expand(3, 3, &lambda, &mu, conjugate)?;
        let direct = family.symmetrized_product(3, 3, &lambda, &mu, conjugate, &x)?;
        let value = reduced.eval(&x)?;
        println!(
            "symmetrized product ({} variant): direct {:.12}{:+.12}i, reduced {:.12}{:+.12}i",
            if conjugate { "conjugated" } else { "plain" },
            direct.re,
            direct.im,
            value.re,
            value.im
        );
    }
    Ok(())
}
