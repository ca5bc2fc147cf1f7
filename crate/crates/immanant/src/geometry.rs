//! Root and weight geometry of `A_n`.
//!
//! Everything lives on the hyperplane `ℋ` of `(n+1)`-vectors with
//! coordinates summing to zero. The `e`-coordinates are canonical because
//! the Weyl group `W(A_n) ≅ S_{n+1}` acts there by permuting entries, so
//! reflections are exact coordinate swaps. Two representations coexist:
//!
//! * [`Point`]: real `e`-coordinates, for evaluation and quadrature;
//! * [`Weight`]: lattice vectors with integer `ω`-coordinates and integer
//!   scaled `e`-coordinates (`(n+1)·l`), so orbits, stabilizers, and inner
//!   products of weights are exact.
//!
//! The fundamental domain `F` is the simplex spanned by the origin and the
//! fundamental weights; its images under `W` tile the region `F̃` used by
//! the orthogonality integrals.

use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{enumerate_group, factorial, Permutation};

/// Absolute tolerance for hyperplane membership and float point equality.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// A real vector in the hyperplane `ℋ`, stored in `e`-coordinates
/// `(l_1, …, l_{n+1})` with `Σ l_i = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    e: Vec<f64>,
}

impl Point {
    pub fn zero(n: usize) -> Self {
        Point { e: vec![0.0; n + 1] }
    }

    /// Validates `Σ l_i = 0` within [`DEFAULT_TOLERANCE`].
    pub fn from_e(e: Vec<f64>) -> Result<Self> {
        if e.len() < 2 {
            return Err(Error::CoordinateLength { got: e.len(), expected: 2 });
        }
        let sum: f64 = e.iter().sum();
        if sum.abs() > DEFAULT_TOLERANCE {
            return Err(Error::NotInHyperplane(e));
        }
        Ok(Point { e })
    }

    /// `Σ x_i ω_i` for real `ω`-coordinates `x`; lands in `ℋ` by construction.
    pub fn from_omega(x: &[f64]) -> Result<Self> {
        let n = x.len();
        if n < 1 {
            return Err(Error::CoordinateLength { got: 0, expected: 1 });
        }
        // e_j = Σ_{i ≥ j} x_i − (Σ_i i·x_i)/(n+1), then re-center to kill
        // accumulated rounding in the mean.
        let weighted: f64 = x.iter().enumerate().map(|(i, &v)| (i + 1) as f64 * v).sum();
        let shift = weighted / (n + 1) as f64;
        let mut suffix = 0.0;
        let mut e = vec![0.0; n + 1];
        e[n] = -shift;
        for j in (0..n).rev() {
            suffix += x[j];
            e[j] = suffix - shift;
        }
        let mean: f64 = e.iter().sum::<f64>() / (n + 1) as f64;
        for v in &mut e {
            *v -= mean;
        }
        Ok(Point { e })
    }

    /// Rank `n`; the vector has `n + 1` coordinates.
    pub fn rank(&self) -> usize {
        self.e.len() - 1
    }

    pub fn e(&self) -> &[f64] {
        &self.e
    }

    /// `ω`-coordinates `x_i = ⟨x, α_i⟩ = l_i − l_{i+1}`.
    pub fn omega_coords(&self) -> Vec<f64> {
        self.e.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn dot(&self, other: &Point) -> Result<f64> {
        if self.e.len() != other.e.len() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(self.e.iter().zip(&other.e).map(|(a, b)| a * b).sum())
    }

    pub fn norm(&self) -> f64 {
        self.e.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// The reflection `r_i` swaps `l_i` and `l_{i+1}` (1-based, `i ≤ n`).
    pub fn reflect(&self, i: usize) -> Result<Point> {
        if i < 1 || i > self.rank() {
            return Err(Error::RootIndex { index: i, rank: self.rank() });
        }
        let mut e = self.e.clone();
        e.swap(i - 1, i);
        Ok(Point { e })
    }

    /// Weyl action: coordinate `i` moves to slot `w(i)`, so the new vector
    /// is `l_{w⁻¹(1)}, …, l_{w⁻¹(n+1)}`. This makes the action a left one:
    /// `(v∘w)·x = v·(w·x)`.
    pub fn permuted(&self, w: &Permutation) -> Result<Point> {
        if w.degree() != self.e.len() {
            return Err(Error::DegreeMismatch(w.degree(), self.e.len()));
        }
        let mut e = vec![0.0; self.e.len()];
        for (i, &v) in self.e.iter().enumerate() {
            e[w.apply(i + 1) - 1] = v;
        }
        Ok(Point { e })
    }

    /// Applies a product of reflections `r_{i_1}∘…∘r_{i_s}` written left to
    /// right, so the rightmost index acts first.
    pub fn apply_word(&self, word: &[usize]) -> Result<Point> {
        let mut out = self.clone();
        for &i in word.iter().rev() {
            out = out.reflect(i)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Point {
        Point { e: self.e.iter().map(|v| -v).collect() }
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        if self.e.len() != other.e.len() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(Point {
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: f64) -> Point {
        Point { e: self.e.iter().map(|v| c * v).collect() }
    }

    pub fn approx_eq(&self, other: &Point, tol: f64) -> bool {
        self.e.len() == other.e.len()
            && self.e.iter().zip(&other.e).all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Distinct images under `W`, one representative permutation each, in
    /// order of first appearance over the group enumeration.
    pub fn orbit(&self, tol: f64) -> Result<Vec<(Permutation, Point)>> {
        let mut out: Vec<(Permutation, Point)> = Vec::new();
        for w in enumerate_group(self.e.len())? {
            let image = self.permuted(&w)?;
            if !out.iter().any(|(_, p)| p.approx_eq(&image, tol)) {
                out.push((w, image));
            }
        }
        Ok(out)
    }

    /// All `w` with `w·x = x` within `tol`.
    pub fn stabilizer(&self, tol: f64) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        for w in enumerate_group(self.e.len())? {
            if self.permuted(&w)?.approx_eq(self, tol) {
                out.push(w);
            }
        }
        Ok(out)
    }
}

/// A weight-lattice vector: integer `ω`-coordinates plus the integer vector
/// `(n+1)·(l_1, …, l_{n+1})`, kept in sync so lattice arithmetic is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    omega: Vec<i64>,
    scaled_e: Vec<i64>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { omega: vec![0; n], scaled_e: vec![0; n + 1] }
    }

    /// Builds `Σ λ_i ω_i` from integer `ω`-coordinates.
    pub fn from_omega(omega: Vec<i64>) -> Result<Self> {
        let n = omega.len();
        if n < 1 {
            return Err(Error::CoordinateLength { got: 0, expected: 1 });
        }
        // (n+1)·l_k = (n+1)·Σ_{i≥k} λ_i − Σ_i i·λ_i.
        let weighted: i64 = omega.iter().enumerate().map(|(i, &v)| (i as i64 + 1) * v).sum();
        let mut scaled_e = vec![0i64; n + 1];
        let mut suffix = 0i64;
        scaled_e[n] = -weighted;
        for k in (0..n).rev() {
            suffix += omega[k];
            scaled_e[k] = (n + 1) as i64 * suffix - weighted;
        }
        Ok(Weight { omega, scaled_e })
    }

    /// Rebuilds a weight from scaled `e`-coordinates; they must sum to zero
    /// and have consecutive differences divisible by `n + 1`.
    pub fn from_scaled_e(scaled_e: Vec<i64>) -> Result<Self> {
        if scaled_e.len() < 2 {
            return Err(Error::CoordinateLength { got: scaled_e.len(), expected: 2 });
        }
        if scaled_e.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidArgument(format!(
                "scaled e-coordinates {scaled_e:?} do not sum to zero"
            )));
        }
        let n = scaled_e.len() - 1;
        let mut omega = Vec::with_capacity(n);
        for w in scaled_e.windows(2) {
            let diff = w[0] - w[1];
            if diff % (n + 1) as i64 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "scaled e-coordinates {scaled_e:?} are not on the weight lattice"
                )));
            }
            omega.push(diff / (n + 1) as i64);
        }
        Ok(Weight { omega, scaled_e })
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::RootIndex { index: i, rank: n });
        }
        let mut omega = vec![0; n];
        omega[i - 1] = 1;
        Weight::from_omega(omega)
    }

    /// The simple root `α_i = e_i − e_{i+1}` (1-based).
    pub fn simple_root(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::RootIndex { index: i, rank: n });
        }
        let mut scaled_e = vec![0i64; n + 1];
        scaled_e[i - 1] = (n + 1) as i64;
        scaled_e[i] = -((n + 1) as i64);
        Weight::from_scaled_e(scaled_e)
    }

    pub fn rank(&self) -> usize {
        self.omega.len()
    }

    pub fn omega(&self) -> &[i64] {
        &self.omega
    }

    /// `(n+1)·l` in the `e`-basis; all entries congruent mod `n + 1`.
    pub fn scaled_e(&self) -> &[i64] {
        &self.scaled_e
    }

    pub fn is_zero(&self) -> bool {
        self.omega.iter().all(|&v| v == 0)
    }

    /// `λ ∈ P⁺`: all `ω`-coordinates nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.omega.iter().all(|&v| v >= 0)
    }

    /// `λ ∈ P⁺⁺`: all `ω`-coordinates strictly positive.
    pub fn is_strictly_dominant(&self) -> bool {
        self.omega.iter().all(|&v| v > 0)
    }

    pub fn to_point(&self) -> Point {
        let scale = (self.rank() + 1) as f64;
        Point {
            e: self.scaled_e.iter().map(|&v| v as f64 / scale).collect(),
        }
    }

    /// Exact inner product `⟨λ, μ⟩ = Σ l_i m_i`.
    pub fn dot_exact(&self, other: &Weight) -> Result<Rational64> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let num: i64 = self
            .scaled_e
            .iter()
            .zip(&other.scaled_e)
            .map(|(a, b)| a * b)
            .sum();
        let denom = ((self.rank() + 1) * (self.rank() + 1)) as i64;
        Ok(Rational64::new(num, denom))
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(Weight {
            omega: self.omega.iter().zip(&other.omega).map(|(a, b)| a + b).collect(),
            scaled_e: self
                .scaled_e
                .iter()
                .zip(&other.scaled_e)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Weight {
        Weight {
            omega: self.omega.iter().map(|&v| -v).collect(),
            scaled_e: self.scaled_e.iter().map(|&v| -v).collect(),
        }
    }

    /// The reflection `r_i`, exact on the lattice.
    pub fn reflect(&self, i: usize) -> Result<Weight> {
        if i < 1 || i > self.rank() {
            return Err(Error::RootIndex { index: i, rank: self.rank() });
        }
        let mut scaled_e = self.scaled_e.clone();
        scaled_e.swap(i - 1, i);
        Weight::from_scaled_e(scaled_e)
    }

    /// Applies a product of reflections `r_{i_1}∘…∘r_{i_s}` written left to
    /// right, so the rightmost index acts first.
    pub fn apply_word(&self, word: &[usize]) -> Result<Weight> {
        let mut out = self.clone();
        for &i in word.iter().rev() {
            out = out.reflect(i)?;
        }
        Ok(out)
    }

    /// Same Weyl action as [`Point::permuted`], exact on the lattice.
    pub fn permuted(&self, w: &Permutation) -> Result<Weight> {
        if w.degree() != self.scaled_e.len() {
            return Err(Error::DegreeMismatch(w.degree(), self.scaled_e.len()));
        }
        let mut scaled_e = vec![0i64; self.scaled_e.len()];
        for (i, &v) in self.scaled_e.iter().enumerate() {
            scaled_e[w.apply(i + 1) - 1] = v;
        }
        Weight::from_scaled_e(scaled_e)
    }

    /// Distinct lattice images with one representative permutation each, in
    /// order of first appearance over the group enumeration.
    pub fn orbit(&self) -> Result<Vec<(Permutation, Weight)>> {
        let mut out: Vec<(Permutation, Weight)> = Vec::new();
        for w in enumerate_group(self.scaled_e.len())? {
            let image = self.permuted(&w)?;
            if !out.iter().any(|(_, p)| *p == image) {
                out.push((w, image));
            }
        }
        Ok(out)
    }

    /// All `w` fixing the weight, by exhaustive enumeration.
    pub fn stabilizer(&self) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        for w in enumerate_group(self.scaled_e.len())? {
            if self.permuted(&w)? == *self {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// `|stab(λ)| = Π (multiplicity of each distinct e-coordinate)!`,
    /// without enumerating the group.
    pub fn stabilizer_order(&self) -> u64 {
        let mut sorted = self.scaled_e.clone();
        sorted.sort_unstable();
        let mut order = 1u64;
        let mut run = 1usize;
        for i in 1..sorted.len() {
            if sorted[i] == sorted[i - 1] {
                run += 1;
            } else {
                order *= factorial(run);
                run = 1;
            }
        }
        order * factorial(run)
    }

    /// `|orbit(λ)| = (n+1)! / |stab(λ)|`.
    pub fn orbit_size(&self) -> u64 {
        factorial(self.scaled_e.len()) / self.stabilizer_order()
    }
}

/// The Cartan matrix of `A_n` and its exact inverse.
#[derive(Clone, Debug)]
pub struct CartanData {
    n: usize,
    c: Vec<Vec<Rational64>>,
    c_inv: Vec<Vec<Rational64>>,
}

impl CartanData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Tridiagonal: `2` on the diagonal, `-1` beside it.
    pub fn c(&self) -> &[Vec<Rational64>] {
        &self.c
    }

    /// `C⁻¹[i][j] = min(i,j)·(n+1−max(i,j))/(n+1)` (1-based indices).
    pub fn c_inv(&self) -> &[Vec<Rational64>] {
        &self.c_inv
    }
}

pub fn cartan(n: usize) -> Result<CartanData> {
    if n < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let mut c = vec![vec![Rational64::zero(); n]; n];
    let mut c_inv = vec![vec![Rational64::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            c[i][j] = match i.abs_diff(j) {
                0 => Rational64::from_integer(2),
                1 => Rational64::from_integer(-1),
                _ => Rational64::zero(),
            };
            let (a, b) = ((i + 1).min(j + 1) as i64, (i + 1).max(j + 1) as i64);
            c_inv[i][j] = Rational64::new(a * ((n as i64 + 1) - b), n as i64 + 1);
        }
    }
    Ok(CartanData { n, c, c_inv })
}

/// `e`-coordinates of the fundamental weight `ω_i`.
pub fn omega_in_e(n: usize, i: usize) -> Result<Point> {
    Ok(Weight::fundamental(n, i)?.to_point())
}

/// The fundamental simplex `F`: convex hull of the origin and the
/// fundamental weights. `|W|` copies `w·F` tile `F̃`, the integration
/// domain of the orthogonality results.
#[derive(Clone, Debug)]
pub struct FundamentalDomain {
    n: usize,
    vertices: Vec<Point>,
    gram: Vec<Vec<Rational64>>,
}

impl FundamentalDomain {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        let mut vertices = vec![Point::zero(n)];
        let mut gram = vec![vec![Rational64::zero(); n]; n];
        for i in 1..=n {
            vertices.push(omega_in_e(n, i)?);
            for j in 1..=n {
                gram[i - 1][j - 1] =
                    Weight::fundamental(n, i)?.dot_exact(&Weight::fundamental(n, j)?)?;
            }
        }
        Ok(FundamentalDomain { n, vertices, gram })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `[0, ω_1, …, ω_n]` as points.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Gram matrix `G[i][j] = ⟨ω_i, ω_j⟩`, exact.
    pub fn gram(&self) -> &[Vec<Rational64>] {
        &self.gram
    }

    /// `|F|² = det(G)/(n!)²`, exact.
    pub fn volume_squared(&self) -> Rational64 {
        let det = rational_det(&self.gram);
        let nf = factorial(self.n) as i64;
        det / Rational64::from_integer(nf * nf)
    }

    /// `|F| = √det(G)/n!`.
    pub fn volume(&self) -> f64 {
        let v2 = self.volume_squared();
        (*v2.numer() as f64 / *v2.denom() as f64).sqrt()
    }

    /// Barycentric coordinates `(b_0, b_1, …, b_n)` of `x = Σ b_i·v_i`
    /// over the vertices; they sum to 1 for any point of `ℋ`.
    pub fn barycentric(&self, p: &Point) -> Result<Vec<f64>> {
        if p.rank() != self.n {
            return Err(Error::RankMismatch(p.rank(), self.n));
        }
        // b_i = ⟨x, α_i⟩ for i ≥ 1; b_0 soaks up the rest.
        let y = p.omega_coords();
        let mut out = Vec::with_capacity(self.n + 1);
        out.push(1.0 - y.iter().sum::<f64>());
        out.extend(y);
        Ok(out)
    }

    /// Membership test: all barycentric coordinates `≥ -tol`.
    pub fn contains(&self, p: &Point, tol: f64) -> Result<bool> {
        Ok(self.barycentric(p)?.iter().all(|&b| b >= -tol))
    }

    /// `(0 + Σ ω_i)/(n+1)`.
    pub fn centroid(&self) -> Point {
        let mut sum = Point::zero(self.n);
        for v in &self.vertices {
            sum = sum.add(v).unwrap();
        }
        sum.scale(1.0 / (self.n + 1) as f64)
    }

    /// One uniform sample from `F` (flat Dirichlet over the vertices).
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Point {
        let mut bary: Vec<f64> = (0..=self.n)
            .map(|_| -(1.0 - rng.gen::<f64>()).ln())
            .collect();
        let total: f64 = bary.iter().sum();
        for b in &mut bary {
            *b /= total;
        }
        let mut point = Point::zero(self.n);
        for (b, v) in bary.iter().zip(&self.vertices) {
            point = point.add(&v.scale(*b)).unwrap();
        }
        point
    }
}

/// `count` uniform samples from `F`, reproducible from the seed.
pub fn sample_f(n: usize, count: usize, seed: u64) -> Result<Vec<Point>> {
    let domain = FundamentalDomain::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| domain.sample(&mut rng)).collect())
}

/// Exact determinant by Gaussian elimination over the rationals.
fn rational_det(mat: &[Vec<Rational64>]) -> Rational64 {
    let n = mat.len();
    let mut work: Vec<Vec<Rational64>> = mat.to_vec();
    let mut det = Rational64::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !work[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational64::zero(),
        };
        if pivot_row != col {
            work.swap(pivot_row, col);
            det = -det;
        }
        let pivot = work[col][col];
        det *= pivot;
        let (solved, rest) = work.split_at_mut(col + 1);
        let pivot_row = &solved[col];
        for row in rest.iter_mut() {
            let factor = row[col] / pivot;
            for (entry, &above) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= factor * above;
            }
        }
    }
    det
}
