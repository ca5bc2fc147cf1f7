//! Sample a rank-2 function on a regular grid in the plane of the root
//! system and write the CSV a plotting tool can contour, together with
//! its JSON sidecar.
//!
//! Run with `cargo run --example figure_grid`.

use immanant::geometry::Weight;
use immanant::grid::{compute_grid, domain_triangle, render_csv, sidecar, GridSpec};

fn main() -> immanant::Result<()> {
    let lambda = Weight::from_omega(vec![1, 2])?;
    let spec = GridSpec::with_default_window(3, lambda, 48)?;
    let points = compute_grid(&spec)?;

    let dir = std::env::temp_dir();
    let csv_path = dir.join("immanant_grid.csv");
    let json_path = dir.join("immanant_grid.json");
    std::fs::write(&csv_path, render_csv(&points))?;
    std::fs::write(&json_path, serde_json::to_string_pretty(&sidecar(&spec))?)?;

    println!(
        "wrote {} points for k = {} at lambda = {:?}",
        points.len(),
        spec.k(),
        spec.lambda().omega()
    );
    println!("  csv:     {}", csv_path.display());
    println!("  sidecar: {}", json_path.display());

    // The fundamental-domain triangle, for overlaying on the plot.
    println!("fundamental domain in plane coordinates:");
    for v in domain_triangle() {
        println!("  ({:+.6}, {:+.6})", v[0], v[1]);
    }

    // A quick look at the magnitudes along the middle row.
    let side = spec.resolution();
    let row = &points[(side / 2) * side..(side / 2) * side + side];
    let peaks: Vec<String> = row
        .iter()
        .step_by(side / 8)
        .map(|p| format!("{:.3}", p.value.norm()))
        .collect();
    println!("|value| along the middle row: {}", peaks.join(" "));
    Ok(())
}
