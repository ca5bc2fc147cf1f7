//! Regular sampling of a rank-2 function on its hyperplane, for figures.
//!
//! The rank-2 functions live on the plane `x_1 + x_2 + x_3 = 0` inside
//! `ℝ³`. A grid is laid out in the orthonormal coordinates of
//! [`plane_basis`] and rendered to CSV with one `x1,x2,re,im` row per
//! point, at 17 significant digits with LF line endings. Rows are computed
//! in parallel but emitted in row-major order, so a fixed spec always
//! produces byte-identical output. A JSON sidecar records the spec, the
//! basis, and the fundamental-domain triangle in the same coordinates.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::{ImmanantFamily, ImmanantSpec};
use crate::geometry::{omega_in_e, Point, Weight};

/// Default half-width of the sampling window in both plane coordinates.
pub const DEFAULT_RANGE: (f64, f64) = (-1.0, 1.0);

/// Orthonormal basis of the plane `x_1 + x_2 + x_3 = 0`:
/// `u_1 = (1, −1, 0)/√2` and `u_2 = (1, 1, −2)/√6`.
pub fn plane_basis() -> [[f64; 3]; 2] {
    let a = 1.0 / 2f64.sqrt();
    let b = 1.0 / 6f64.sqrt();
    [[a, -a, 0.0], [b, b, -2.0 * b]]
}

/// The point `x1·u_1 + x2·u_2` in `e`-coordinates.
pub fn plane_point(x1: f64, x2: f64) -> Point {
    let [u1, u2] = plane_basis();
    let e: Vec<f64> = (0..3).map(|i| x1 * u1[i] + x2 * u2[i]).collect();
    Point::from_e(e).expect("basis vectors sum to zero")
}

/// Plane coordinates `(⟨p, u_1⟩, ⟨p, u_2⟩)` of a rank-2 point.
pub fn plane_coords(p: &Point) -> Result<(f64, f64)> {
    if p.rank() != 2 {
        return Err(Error::GridRank(p.rank()));
    }
    let [u1, u2] = plane_basis();
    let dot = |u: &[f64; 3]| p.e().iter().zip(u).map(|(a, b)| a * b).sum();
    Ok((dot(&u1), dot(&u2)))
}

/// Vertices of the fundamental domain `F` in plane coordinates:
/// the origin, then `ω_1`, then `ω_2`.
pub fn domain_triangle() -> [[f64; 2]; 3] {
    let mut vertices = [[0.0; 2]; 3];
    for (i, vertex) in vertices.iter_mut().enumerate().skip(1) {
        let omega = omega_in_e(2, i).expect("rank-2 fundamental weights");
        let (x1, x2) = plane_coords(&omega).expect("rank 2");
        *vertex = [x1, x2];
    }
    vertices
}

/// A validated description of one grid: which function, over which window,
/// at which resolution.
#[derive(Clone, Debug)]
pub struct GridSpec {
    spec: ImmanantSpec,
    x_range: (f64, f64),
    y_range: (f64, f64),
    resolution: usize,
}

impl GridSpec {
    pub fn new(
        k: usize,
        lambda: Weight,
        x_range: (f64, f64),
        y_range: (f64, f64),
        resolution: usize,
    ) -> Result<Self> {
        if lambda.rank() != 2 {
            return Err(Error::GridRank(lambda.rank()));
        }
        let spec = ImmanantSpec::new(2, k, lambda)?;
        if resolution < 2 {
            return Err(Error::GridSpec(format!(
                "resolution must be at least 2, got {resolution}"
            )));
        }
        for (lo, hi) in [x_range, y_range] {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::GridSpec(format!(
                    "range must be finite with lo < hi, got {lo}..{hi}"
                )));
            }
        }
        Ok(GridSpec { spec, x_range, y_range, resolution })
    }

    /// The window `[−1, 1]²`.
    pub fn with_default_window(k: usize, lambda: Weight, resolution: usize) -> Result<Self> {
        GridSpec::new(k, lambda, DEFAULT_RANGE, DEFAULT_RANGE, resolution)
    }

    pub fn k(&self) -> usize {
        self.spec.k()
    }

    pub fn lambda(&self) -> &Weight {
        self.spec.lambda()
    }

    pub fn x_range(&self) -> (f64, f64) {
        self.x_range
    }

    pub fn y_range(&self) -> (f64, f64) {
        self.y_range
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Evenly spaced axis ticks including both endpoints.
    pub fn axis(&self, range: (f64, f64)) -> Vec<f64> {
        let (lo, hi) = range;
        let step = (hi - lo) / (self.resolution - 1) as f64;
        (0..self.resolution).map(|i| lo + i as f64 * step).collect()
    }
}

/// One evaluated grid node.
#[derive(Clone, Copy, Debug)]
pub struct GridPoint {
    pub x1: f64,
    pub x2: f64,
    pub value: Complex64,
}

/// Evaluates the grid in row-major order: `x2` varies between rows, `x1`
/// within a row. Rows are computed in parallel.
pub fn compute_grid(spec: &GridSpec) -> Result<Vec<GridPoint>> {
    let family = ImmanantFamily::new(2)?;
    let xs = spec.axis(spec.x_range);
    let ys = spec.axis(spec.y_range);
    let rows: Vec<Vec<GridPoint>> = ys
        .par_iter()
        .map(|&x2| -> Result<Vec<GridPoint>> {
            xs.iter()
                .map(|&x1| {
                    let value = family.eval(&spec.spec, &plane_point(x1, x2))?;
                    Ok(GridPoint { x1, x2, value })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// The CSV rendering: header `x1,x2,re,im`, 17 significant digits, LF.
pub fn render_csv(points: &[GridPoint]) -> String {
    let mut out = String::with_capacity(points.len() * 96 + 16);
    out.push_str("x1,x2,re,im\n");
    for p in points {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e}\n",
            p.x1, p.x2, p.value.re, p.value.im
        ));
    }
    out
}

/// Everything needed to interpret a grid file, written next to it.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GridSidecar {
    pub n: usize,
    pub k: usize,
    pub lambda: Vec<i64>,
    pub x_range: [f64; 2],
    pub y_range: [f64; 2],
    pub resolution: usize,
    /// Rows are the plane basis vectors in `e`-coordinates.
    pub basis: [[f64; 3]; 2],
    /// Fundamental-domain vertices in plane coordinates: origin, ω_1, ω_2.
    pub fundamental_domain: [[f64; 2]; 3],
}

pub fn sidecar(spec: &GridSpec) -> GridSidecar {
    GridSidecar {
        n: 2,
        k: spec.k(),
        lambda: spec.lambda().omega().to_vec(),
        x_range: [spec.x_range.0, spec.x_range.1],
        y_range: [spec.y_range.0, spec.y_range.1],
        resolution: spec.resolution,
        basis: plane_basis(),
        fundamental_domain: domain_triangle(),
    }
}
