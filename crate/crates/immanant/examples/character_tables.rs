//! Build symmetric-group character tables and check the classical
//! orthogonality and convolution identities on them.
//!
//! Run with `cargo run --example character_tables`.

use immanant::characters::{character_convolution, character_table};
use immanant::perm::{enumerate_group, factorial, CycleType};

fn main() -> immanant::Result<()> {
    let table = character_table(5)?;
    println!("S_5 has {} irreducible characters:", table.num_characters());
    for k in 1..=table.num_characters() {
        let shape = table.shape(k)?;
        println!("  chi_{k}: shape {}, degree {}", shape.partition_label(), table.degree(k)?);
    }

    // Values on a chosen class, here the 5-cycles.
    let five_cycle = CycleType::new(vec![5])?;
    print!("values on the 5-cycles:");
    for k in 1..=table.num_characters() {
        print!(" {}", table.value_on(k, &five_cycle)?);
    }
    println!();

    println!(
        "row orthogonality: {}",
        if table.row_orthogonality_check() { "holds" } else { "violated" }
    );
    println!(
        "column orthogonality: {}",
        if table.column_orthogonality_check() { "holds" } else { "violated" }
    );

    // Convolving two characters over the group collapses to a single
    // character: sum_g chi_k(h g^-1) chi_l(g) = delta_kl (m!/d_k) chi_k(h).
    let group = enumerate_group(5)?;
    let h = &group[1];
    for (k, l) in [(3, 3), (3, 4)] {
        let conv = character_convolution(&table, k, l, h)?;
        let expected = if k == l {
            factorial(5) as i64 / table.degree(k)? * table.value_of(k, h)?
        } else {
            0
        };
        println!("convolution chi_{k} * chi_{l} at {h}: {conv} (closed form {expected})");
    }
    Ok(())
}
