//! Immanant functions on the weight lattices of the symmetric-group Weyl
//! groups, with exact verification of their orthogonality.
//!
//! For the root system of rank `n` the Weyl group is the symmetric group
//! on `n + 1` letters, and each of its irreducible characters "chi_k"
//! defines a function of a dominant weight `lambda` and a point `x` on
//! the hyperplane where the group acts:
//!
//! ```text
//! Imm^(n+1,k)(lambda, x) = sum over w of chi_k(w) * exp(2*pi*i <w lambda, x>)
//! ```
//!
//! The first two are the classical symmetric and antisymmetric orbit sums
//! (the permanent and determinant of an exponential matrix); the rest
//! interpolate between them. This crate computes them through several
//! independent routes, manipulates the weights and orbits exactly, and
//! checks the family's orthogonality over the fundamental domain both in
//! exact rational arithmetic and by seeded Monte Carlo quadrature.
//!
//! # Quick start
//!
//! ```
//! use immanant::functions::ImmanantFamily;
//! use immanant::geometry::{Point, Weight};
//!
//! let family = ImmanantFamily::new(2)?;
//! let lambda = Weight::from_omega(vec![1, 2])?;
//! let x = Point::from_omega(&[0.3, -0.1])?;
//! let value = family.eval_weight(3, &lambda, &x)?;
//! assert!(value.norm() > 0.0);
//! # Ok::<(), immanant::Error>(())
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`character_tables`** - symmetric-group character tables and their
//!   orthogonality and convolution identities
//! - **`evaluate`** - one function, three evaluation routes
//! - **`weyl_orbits`** - weight arithmetic, orbits, stabilizers, and the
//!   fundamental domain
//! - **`explicit_forms`** - the short reflection-word expansions at ranks
//!   2 and 3
//! - **`identities`** - exchange symmetries, product expansion, and the
//!   symmetrized-product reduction
//! - **`orthogonality_exact`** - the orthogonality theorem in rational
//!   arithmetic
//! - **`monte_carlo`** - seeded quadrature against the exact oracle
//! - **`figure_grid`** - CSV grids of a rank-2 function for plotting
//!
//! ```bash
//! cargo run --example orthogonality_exact
//! cargo run --release --example monte_carlo
//! ```
//!
//! # Modules
//!
//! [`perm`] and [`characters`] build the combinatorial layer: permutations,
//! cycle types, and character tables computed by hook removal. [`geometry`]
//! holds the lattice and floating-point geometry of the hyperplane, and
//! [`matrix`] the permanent, determinant, and general immanant algorithms.
//! [`functions`] combines them into the evaluated family, [`orthogonality`]
//! implements the exact and Monte Carlo inner products, and [`grid`],
//! [`verify`], [`report`], and [`cli`] serve the `immanant` binary.

pub mod characters;
pub mod cli;
pub mod error;
pub mod functions;
pub mod geometry;
pub mod grid;
pub mod matrix;
pub mod orthogonality;
pub mod perm;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use functions::{ImmanantFamily, ImmanantSpec};
pub use geometry::{FundamentalDomain, Point, Weight};
pub use perm::{CycleType, Permutation};
