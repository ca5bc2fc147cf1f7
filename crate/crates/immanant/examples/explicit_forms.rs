//! The short closed forms of the low-rank functions: the rank-2 third
//! function as three exponential terms, and the rank-3 functions
//! k = 3, 4, 5 as 12- and 16-term reflection-word expansions.
//!
//! Run with `cargo run --example explicit_forms`.

use immanant::functions::{
    rank3_word_expansion, word_expansion_value, ImmanantFamily, RANK2_THIRD_WORDS,
};
use immanant::geometry::{Point, Weight};

fn main() -> immanant::Result<()> {
    let fam2 = ImmanantFamily::new(2)?;
    let lambda = Weight::from_omega(vec![2, 1])?;
    let x = Point::from_omega(&[0.2, 0.4])?;

    println!("rank-2 third function as 2[lambda] - [r2 r1 lambda] - [r1 r2 lambda]:");
    let direct = fam2.eval_weight(3, &lambda, &x)?;
    let words = word_expansion_value(RANK2_THIRD_WORDS, &lambda, &x)?;
    println!("  character sum:  {:.12}{:+.12}i", direct.re, direct.im);
    println!("  three terms:    {:.12}{:+.12}i", words.re, words.im);

    let fam3 = ImmanantFamily::new(3)?;
    let mu = Weight::from_omega(vec![1, 0, 2])?;
    let y = Point::from_omega(&[0.15, -0.3, 0.05])?;
    for k in 3..=5 {
        let terms = rank3_word_expansion(k).expect("k = 3, 4, 5 have stored expansions");
        let direct = fam3.eval_weight(k, &mu, &y)?;
        let explicit = word_expansion_value(terms, &mu, &y)?;
        println!("rank-3 function k = {k} ({} reflection words):", terms.len());
        println!("  character sum:  {:.12}{:+.12}i", direct.re, direct.im);
        println!("  word expansion: {:.12}{:+.12}i", explicit.re, explicit.im);
    }

    // The words themselves, for k = 3.
    println!("words of the k = 3 expansion (coefficient, simple reflections):");
    for &(coeff, word) in rank3_word_expansion(3).unwrap() {
        println!("  {coeff:+} r{word:?}");
    }
    Ok(())
}
