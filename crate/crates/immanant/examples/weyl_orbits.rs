//! Weight-lattice arithmetic: the Cartan matrix, fundamental weights,
//! Weyl orbits and stabilizers, and the fundamental domain of the
//! translated group.
//!
//! Run with `cargo run --example weyl_orbits`.

use immanant::geometry::{cartan, FundamentalDomain, Weight};

fn main() -> immanant::Result<()> {
    let n = 3;
    let data = cartan(n)?;
    println!("Cartan matrix of rank {n}:");
    for row in data.c() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        println!("  [{}]", cells.join(" "));
    }

    // Orbit sizes obey |orbit| * |stabilizer| = |W| = (n+1)!.
    for omega in [vec![1, 0, 0], vec![1, 0, 1], vec![1, 1, 1]] {
        let w = Weight::from_omega(omega)?;
        println!(
            "lambda = {:?}: orbit size {}, stabilizer order {}, scaled e-coordinates {:?}",
            w.omega(),
            w.orbit_size(),
            w.stabilizer_order(),
            w.scaled_e()
        );
    }

    // One full orbit with the permutations that produce each point.
    let lambda = Weight::from_omega(vec![1, 0, 0])?;
    println!("orbit of {:?}:", lambda.omega());
    for (perm, image) in lambda.orbit()? {
        println!("  {perm:<10} -> {:?}", image.omega());
    }

    let domain = FundamentalDomain::new(n)?;
    println!(
        "fundamental domain: {} vertices, squared volume {} (volume {:.6})",
        domain.vertices().len(),
        domain.volume_squared(),
        domain.volume()
    );
    let centroid = domain.centroid();
    println!("centroid is inside: {}", domain.contains(&centroid, 1e-12)?);
    Ok(())
}
