//! Evaluate immanant functions at a point, three ways: as a character sum
//! over the Weyl group, as a matrix immanant of the exponential matrix,
//! and (for the first two functions) by permanent and determinant
//! algorithms.
//!
//! Run with `cargo run --example evaluate`.

use immanant::functions::{exp_matrix, ImmanantFamily};
use immanant::geometry::{Point, Weight};
use immanant::matrix::{determinant, matrix_immanant, permanent};

fn main() -> immanant::Result<()> {
    let n = 2;
    let family = ImmanantFamily::new(n)?;
    let lambda = Weight::from_omega(vec![1, 2])?;
    let x = Point::from_omega(&[0.31, -0.17])?;

    println!(
        "rank {n}: {} functions (partitions of {}), lambda = {:?}",
        family.num_characters(),
        n + 1,
        lambda.omega()
    );

    let a = exp_matrix(&lambda, &x)?;
    for k in 1..=family.num_characters() {
        let via_sum = family.eval_weight(k, &lambda, &x)?;
        let via_imm = matrix_immanant(&a, family.table(), k)?;
        println!(
            "  Imm^({},{k}): character sum {:.12}{:+.12}i, matrix immanant {:.12}{:+.12}i",
            n + 1,
            via_sum.re,
            via_sum.im,
            via_imm.re,
            via_imm.im
        );
    }

    // k = 1 is the permanent (the symmetric orbit function), k = 2 the
    // determinant (the antisymmetric one).
    let per = permanent(&a)?;
    let det = determinant(&a)?;
    let c = family.c_function(&lambda, &x)?;
    let s = family.s_function(&lambda, &x)?;
    println!("permanent route:   {:.12}{:+.12}i (C function {:.12}{:+.12}i)", per.re, per.im, c.re, c.im);
    println!("determinant route: {:.12}{:+.12}i (S function {:.12}{:+.12}i)", det.re, det.im, s.re, s.im);
    Ok(())
}
