//! The immanant functions of `W(A_n)`: for each irreducible character `χ_k`
//! of `S_{n+1}` and dominant weight `λ`,
//!
//! ```text
//! Imm^{n+1,k}(λ, x) = Σ_{w ∈ W(A_n)} χ_k(w) · e^{2πi⟨wλ, x⟩}.
//! ```
//!
//! `k = 1` gives the `W`-invariant C-orbit function (a permanent), `k = 2`
//! the antisymmetric S-orbit function (a determinant). The same value is
//! reachable through a second, independent route: the matrix immanant of
//! the exponential matrix `𝒜[j][k] = e^{2πi l_j x_k}`. Keeping both routes
//! live is the central correctness check of this crate.
//!
//! Products and symmetrized products expand into exponential term sums with
//! exact integer coefficients ([`ExpTermSum`]); floating point enters only
//! when a term sum meets a concrete `x`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::characters::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::geometry::{Point, Weight};
use crate::perm::{enumerate_group, partitions, Permutation};

/// Ranks accepted by the term-sum expansions; `((n+1)!)²` terms beyond
/// this stop being a desk-scale object.
pub const MAX_EXPANSION_RANK: usize = 4;

/// Number of immanant functions of `W(A_n)`: partitions of `n + 1`.
pub fn num_immanants(n: usize) -> usize {
    partitions(n + 1).len()
}

/// `(k, λ)` for a fixed rank: which immanant function, at which dominant
/// weight. `λ = 0` is allowed for every `k`; the function is then the
/// constant `|W|` for `k = 1` and identically zero otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImmanantSpec {
    n: usize,
    k: usize,
    lambda: Weight,
}

impl ImmanantSpec {
    pub fn new(n: usize, k: usize, lambda: Weight) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        if lambda.rank() != n {
            return Err(Error::RankMismatch(lambda.rank(), n));
        }
        let max_k = num_immanants(n);
        if k < 1 || k > max_k {
            return Err(Error::CharacterIndex { k, max: max_k });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.omega().to_vec()));
        }
        Ok(ImmanantSpec { n, k, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }
}

/// The family of immanant functions at fixed rank: the Weyl group, the
/// character table of `S_{n+1}`, and the class index of each element,
/// precomputed once.
#[derive(Clone, Debug)]
pub struct ImmanantFamily {
    n: usize,
    group: Vec<Permutation>,
    table: CharacterTable,
    class_of: Vec<usize>,
}

impl ImmanantFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        let table = character_table(n + 1)?;
        let group = enumerate_group(n + 1)?;
        let class_of = group
            .iter()
            .map(|w| {
                table
                    .class_index(&w.cycle_type())
                    .expect("every cycle type indexes a class of the table")
            })
            .collect();
        Ok(ImmanantFamily { n, group, table, class_of })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|W(A_n)| = (n+1)!`.
    pub fn order(&self) -> usize {
        self.group.len()
    }

    pub fn num_characters(&self) -> usize {
        self.table.num_characters()
    }

    pub fn group(&self) -> &[Permutation] {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    /// `χ_k` of the `idx`-th group element, by precomputed class lookup.
    pub fn character(&self, k: usize, idx: usize) -> Result<i64> {
        self.table.value(k, self.class_of[idx])
    }

    /// `Imm^{n+1,k}(λ, x)` by the Weyl-group character sum. `λ` may be any
    /// lattice weight; dominance is a property of [`ImmanantSpec`], not of
    /// the sum itself.
    pub fn eval_weight(&self, k: usize, lambda: &Weight, x: &Point) -> Result<Complex64> {
        if lambda.rank() != self.n {
            return Err(Error::RankMismatch(lambda.rank(), self.n));
        }
        if x.rank() != self.n {
            return Err(Error::RankMismatch(x.rank(), self.n));
        }
        let scale = TAU / (self.n + 1) as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for (idx, w) in self.group.iter().enumerate() {
            let chi = self.character(k, idx)? as f64;
            if chi == 0.0 {
                continue;
            }
            let image = lambda.permuted(w)?;
            let phase: f64 = image
                .scaled_e()
                .iter()
                .zip(x.e())
                .map(|(&s, &c)| s as f64 * c)
                .sum();
            sum += chi * Complex64::from_polar(1.0, scale * phase);
        }
        Ok(sum)
    }

    pub fn eval(&self, spec: &ImmanantSpec, x: &Point) -> Result<Complex64> {
        if spec.n() != self.n {
            return Err(Error::RankMismatch(spec.n(), self.n));
        }
        self.eval_weight(spec.k(), spec.lambda(), x)
    }

    /// `Σ_w χ_k(w) e^{2πi⟨w·a, b⟩}` for two real points; realizes the
    /// argument-swap symmetry `Imm(λ, x) = Imm(x, λ)`.
    pub fn eval_points(&self, k: usize, a: &Point, b: &Point) -> Result<Complex64> {
        if a.rank() != self.n || b.rank() != self.n {
            return Err(Error::RankMismatch(a.rank().min(b.rank()), self.n));
        }
        let mut sum = Complex64::new(0.0, 0.0);
        for (idx, w) in self.group.iter().enumerate() {
            let chi = self.character(k, idx)? as f64;
            if chi == 0.0 {
                continue;
            }
            let phase = TAU * a.permuted(w)?.dot(b)?;
            sum += chi * Complex64::from_polar(1.0, phase);
        }
        Ok(sum)
    }

    /// C-orbit function `Φ_λ = Imm^{n+1,1}`.
    pub fn c_function(&self, lambda: &Weight, x: &Point) -> Result<Complex64> {
        self.eval_weight(1, lambda, x)
    }

    /// S-orbit function `φ_λ = Imm^{n+1,2}`.
    pub fn s_function(&self, lambda: &Weight, x: &Point) -> Result<Complex64> {
        self.eval_weight(2, lambda, x)
    }

    /// The product `Imm^{k}(λ,x)·Imm^{l}(μ,x)` as an exact term sum
    /// `Σ_{w,w̃} χ_k(w)χ_l(w̃) [wλ + w̃μ]` over `((n+1)!)²` pairs.
    pub fn product_expand(&self, spec1: &ImmanantSpec, spec2: &ImmanantSpec) -> Result<ExpTermSum> {
        if spec1.n() != self.n || spec2.n() != self.n {
            return Err(Error::RankMismatch(spec1.n().min(spec2.n()), self.n));
        }
        self.check_expansion_rank()?;
        let mut sum = ExpTermSum::new(self.n);
        let lambda_images = self.images_of(spec1.lambda())?;
        let mu_images = self.images_of(spec2.lambda())?;
        for (i, wl) in lambda_images.iter().enumerate() {
            let chi_k = self.character(spec1.k(), i)?;
            if chi_k == 0 {
                continue;
            }
            for (j, wm) in mu_images.iter().enumerate() {
                let chi_l = self.character(spec2.k(), j)?;
                if chi_l == 0 {
                    continue;
                }
                sum.add(&wl.add(wm)?, chi_k * chi_l);
            }
        }
        Ok(sum)
    }

    /// Symmetrized product `Σ_w Imm^{k}(wλ,x)·Imm^{l}(wμ,x)` in its closed
    /// form `Σ_{w̃,ŵ} χ_k(w̃)χ_l(ŵ)·Imm^{n+1,1}(λ ± w̃ŵμ, x)`, expanded to
    /// exact terms. `conjugate_second` selects the variant with the second
    /// factor conjugated, which flips `+μ` to `−μ`.
    pub fn lemma_expand(
        &self,
        k: usize,
        l: usize,
        lambda: &Weight,
        mu: &Weight,
        conjugate_second: bool,
    ) -> Result<ExpTermSum> {
        if lambda.rank() != self.n || mu.rank() != self.n {
            return Err(Error::RankMismatch(lambda.rank().min(mu.rank()), self.n));
        }
        self.check_expansion_rank()?;
        let signed_mu = if conjugate_second { mu.neg() } else { mu.clone() };
        let mut sum = ExpTermSum::new(self.n);
        for (i, w_tilde) in self.group.iter().enumerate() {
            let chi_k = self.character(k, i)?;
            if chi_k == 0 {
                continue;
            }
            for (j, w_hat) in self.group.iter().enumerate() {
                let chi_l = self.character(l, j)?;
                if chi_l == 0 {
                    continue;
                }
                let nu = lambda.add(&signed_mu.permuted(w_hat)?.permuted(w_tilde)?)?;
                // Imm^{n+1,1}(ν, ·) contributes the full orbit sum of ν.
                for w in &self.group {
                    sum.add(&nu.permuted(w)?, chi_k * chi_l);
                }
            }
        }
        Ok(sum)
    }

    /// Direct evaluation of the symmetrized product the lemma closes:
    /// `Σ_w Imm^{k}(wλ,x)·Imm^{l}(wμ,x)`, optionally conjugating the
    /// second factor.
    pub fn symmetrized_product(
        &self,
        k: usize,
        l: usize,
        lambda: &Weight,
        mu: &Weight,
        conjugate_second: bool,
        x: &Point,
    ) -> Result<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for w in &self.group {
            let first = self.eval_weight(k, &lambda.permuted(w)?, x)?;
            let second = self.eval_weight(l, &mu.permuted(w)?, x)?;
            sum += first * if conjugate_second { second.conj() } else { second };
        }
        Ok(sum)
    }

    /// Checks the three exchange symmetries at one `(w, x)`:
    /// `Imm(wλ, x) = Imm(λ, w⁻¹x)`, `Imm(wλ, wx) = Imm(λ, x)`, and
    /// `Imm(λ, x) = Imm(x, λ)`.
    pub fn symmetry_check(
        &self,
        spec: &ImmanantSpec,
        w: &Permutation,
        x: &Point,
        tol: f64,
    ) -> Result<bool> {
        let k = spec.k();
        let lambda = spec.lambda();
        let w_lambda = lambda.permuted(w)?;
        let base = self.eval_weight(k, lambda, x)?;

        let lhs1 = self.eval_weight(k, &w_lambda, x)?;
        let rhs1 = self.eval_weight(k, lambda, &x.permuted(&w.inverse())?)?;

        let lhs2 = self.eval_weight(k, &w_lambda, &x.permuted(w)?)?;

        let swapped = self.eval_points(k, x, &lambda.to_point())?;

        Ok(approx_complex(lhs1, rhs1, tol)
            && approx_complex(lhs2, base, tol)
            && approx_complex(base, swapped, tol))
    }

    fn check_expansion_rank(&self) -> Result<()> {
        if self.n > MAX_EXPANSION_RANK {
            let w = self.group.len();
            return Err(Error::ExpansionTooLarge {
                rank: self.n,
                terms: (w * w) as u128,
                max: MAX_EXPANSION_RANK,
            });
        }
        Ok(())
    }

    /// `w·λ` for every group element, in group order.
    fn images_of(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.group.iter().map(|w| lambda.permuted(w)).collect()
    }
}

/// The exponential matrix `𝒜[j][k] = e^{2πi l_j x_k}` whose immanants
/// reproduce the character-sum evaluations.
pub fn exp_matrix(lambda: &Weight, x: &Point) -> Result<Vec<Vec<Complex64>>> {
    if lambda.rank() != x.rank() {
        return Err(Error::RankMismatch(lambda.rank(), x.rank()));
    }
    let scale = TAU / (lambda.rank() + 1) as f64;
    Ok(lambda
        .scaled_e()
        .iter()
        .map(|&s| {
            x.e()
                .iter()
                .map(|&c| Complex64::from_polar(1.0, scale * s as f64 * c))
                .collect()
        })
        .collect())
}

/// A finite sum `Σ c_ν e^{2πi⟨ν, x⟩}` over lattice weights `ν` with exact
/// integer coefficients, combined over equal weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpTermSum {
    n: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl ExpTermSum {
    pub fn new(n: usize) -> Self {
        ExpTermSum { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `coeff·[weight]`, removing the entry if it cancels to zero.
    pub fn add(&mut self, weight: &Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = weight.scaled_e().to_vec();
        let entry = self.terms.entry(key).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(weight.scaled_e());
        }
    }

    /// Number of distinct weights with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Σ c_ν`, the value of the sum at `x = 0`.
    pub fn total_coefficient(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(scaled, &coeff)| {
            let weight = Weight::from_scaled_e(scaled.clone())
                .expect("stored keys are valid lattice vectors");
            (weight, coeff)
        })
    }

    pub fn eval(&self, x: &Point) -> Result<Complex64> {
        if x.rank() != self.n {
            return Err(Error::RankMismatch(x.rank(), self.n));
        }
        let scale = TAU / (self.n + 1) as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for (scaled, &coeff) in &self.terms {
            let phase: f64 = scaled
                .iter()
                .zip(x.e())
                .map(|(&s, &c)| s as f64 * c)
                .sum();
            sum += coeff as f64 * Complex64::from_polar(1.0, scale * phase);
        }
        Ok(sum)
    }
}

/// `|a − b|` small relative to the scale of the values, absolute near zero.
pub fn approx_complex(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}

/// Explicit expansion of the third rank-2 function:
/// `2[λ] − [r_2r_1λ] − [r_1r_2λ]`, words acting rightmost first.
pub const RANK2_THIRD_WORDS: &[(i64, &[usize])] =
    &[(2, &[]), (-1, &[2, 1]), (-1, &[1, 2])];

/// Explicit reflection-word expansions of the rank-3 functions for
/// `k ∈ {3, 4, 5}` (12, 16, and 16 terms). Each entry is
/// `(coefficient, word)` with the word acting rightmost first; the words
/// run over full conjugacy classes of `W(A_3)`, weighted by the character.
pub fn rank3_word_expansion(k: usize) -> Option<&'static [(i64, &'static [usize])]> {
    const THIRD: &[(i64, &[usize])] = &[
        (2, &[]),
        (2, &[1, 3]),
        (2, &[2, 1, 3, 2]),
        (2, &[3, 2, 3, 1, 2, 3]),
        (-1, &[1, 2]),
        (-1, &[2, 1]),
        (-1, &[2, 3]),
        (-1, &[3, 2]),
        (-1, &[1, 3, 2, 1]),
        (-1, &[1, 2, 1, 3]),
        (-1, &[2, 3, 2, 1]),
        (-1, &[1, 2, 3, 2]),
    ];
    const FOURTH: &[(i64, &[usize])] = &[
        (3, &[]),
        (1, &[1]),
        (1, &[2]),
        (1, &[3]),
        (1, &[1, 2, 1]),
        (1, &[2, 3, 2]),
        (1, &[1, 2, 3, 2, 1]),
        (-1, &[1, 3]),
        (-1, &[2, 1, 3, 2]),
        (-1, &[3, 2, 3, 1, 2, 3]),
        (-1, &[1, 2, 3]),
        (-1, &[2, 3, 1]),
        (-1, &[3, 1, 2]),
        (-1, &[3, 2, 1]),
        (-1, &[3, 2, 3, 1, 2]),
        (-1, &[1, 2, 1, 3, 2]),
    ];
    const FIFTH: &[(i64, &[usize])] = &[
        (3, &[]),
        (-1, &[1]),
        (-1, &[2]),
        (-1, &[3]),
        (-1, &[1, 2, 1]),
        (-1, &[2, 3, 2]),
        (-1, &[1, 2, 3, 2, 1]),
        (-1, &[1, 3]),
        (-1, &[2, 1, 3, 2]),
        (-1, &[3, 2, 3, 1, 2, 3]),
        (1, &[1, 2, 3]),
        (1, &[2, 3, 1]),
        (1, &[3, 1, 2]),
        (1, &[3, 2, 1]),
        (1, &[3, 2, 3, 1, 2]),
        (1, &[1, 2, 1, 3, 2]),
    ];
    match k {
        3 => Some(THIRD),
        4 => Some(FOURTH),
        5 => Some(FIFTH),
        _ => None,
    }
}

/// `Σ c·e^{2πi⟨(word·λ), x⟩}` over a word expansion.
pub fn word_expansion_value(
    terms: &[(i64, &[usize])],
    lambda: &Weight,
    x: &Point,
) -> Result<Complex64> {
    let scale = TAU / (lambda.rank() + 1) as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for &(coeff, word) in terms {
        let image = lambda.apply_word(word)?;
        let phase: f64 = image
            .scaled_e()
            .iter()
            .zip(x.e())
            .map(|(&s, &c)| s as f64 * c)
            .sum();
        sum += coeff as f64 * Complex64::from_polar(1.0, scale * phase);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::sample_f;
    use crate::matrix::{determinant, matrix_immanant, permanent};
    use crate::perm::factorial;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_dominant(n: usize, max_coord: i64, rng: &mut ChaCha8Rng) -> Weight {
        Weight::from_omega((0..n).map(|_| rng.gen_range(0..=max_coord)).collect()).unwrap()
    }

    fn random_point(n: usize, rng: &mut ChaCha8Rng) -> Point {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.5..1.5)).collect();
        Point::from_omega(&x).unwrap()
    }

    #[test]
    fn zero_weight_values() {
        for n in 1..=3 {
            let family = ImmanantFamily::new(n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(41);
            for _ in 0..5 {
                let x = random_point(n, &mut rng);
                let zero = Weight::zero(n);
                let c = family.eval_weight(1, &zero, &x).unwrap();
                assert!(approx_complex(c, Complex64::new(factorial(n + 1) as f64, 0.0), 1e-12));
                for k in 2..=family.num_characters() {
                    let v = family.eval_weight(k, &zero, &x).unwrap();
                    assert!(v.norm() < 1e-10, "n={n} k={k} |v|={}", v.norm());
                }
            }
        }
    }

    #[test]
    fn three_term_form_rank_two() {
        // Third immanant of W(A_2): 2[λ] − [r_2r_1λ] − [r_1r_2λ].
        let family = ImmanantFamily::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..10 {
            let lambda = random_dominant(2, 3, &mut rng);
            let x = random_point(2, &mut rng);
            let direct = family.eval_weight(3, &lambda, &x).unwrap();
            let scale = TAU / 3.0;
            let term = |w: &Weight| {
                let phase: f64 = w
                    .scaled_e()
                    .iter()
                    .zip(x.e())
                    .map(|(&s, &c)| s as f64 * c)
                    .sum();
                Complex64::from_polar(1.0, scale * phase)
            };
            let r2r1 = lambda.reflect(1).unwrap().reflect(2).unwrap();
            let r1r2 = lambda.reflect(2).unwrap().reflect(1).unwrap();
            let explicit = 2.0 * term(&lambda) - term(&r2r1) - term(&r1r2);
            assert!(approx_complex(direct, explicit, 1e-12));
        }
    }

    #[test]
    fn word_expansions_match_character_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let family2 = ImmanantFamily::new(2).unwrap();
        let family3 = ImmanantFamily::new(3).unwrap();
        for _ in 0..10 {
            let lambda = random_dominant(2, 3, &mut rng);
            let x = random_point(2, &mut rng);
            let direct = family2.eval_weight(3, &lambda, &x).unwrap();
            let words = word_expansion_value(RANK2_THIRD_WORDS, &lambda, &x).unwrap();
            assert!(approx_complex(direct, words, 1e-12));
        }
        for k in 3..=5 {
            let terms = rank3_word_expansion(k).unwrap();
            assert_eq!(terms.len(), if k == 3 { 12 } else { 16 });
            let weight: i64 = terms.iter().map(|&(c, _)| c).sum();
            assert_eq!(weight, 0, "nontrivial characters sum to zero over the group");
            for _ in 0..10 {
                let lambda = random_dominant(3, 3, &mut rng);
                let x = random_point(3, &mut rng);
                let direct = family3.eval_weight(k, &lambda, &x).unwrap();
                let words = word_expansion_value(terms, &lambda, &x).unwrap();
                assert!(approx_complex(direct, words, 1e-12), "k={k}");
            }
        }
        assert!(rank3_word_expansion(2).is_none());
    }

    #[test]
    fn route_equivalence_character_sum_vs_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for n in 1..=3 {
            let family = ImmanantFamily::new(n).unwrap();
            for k in 1..=family.num_characters() {
                for _ in 0..4 {
                    let lambda = random_dominant(n, 3, &mut rng);
                    let x = random_point(n, &mut rng);
                    let by_sum = family.eval_weight(k, &lambda, &x).unwrap();
                    let a = exp_matrix(&lambda, &x).unwrap();
                    let by_matrix = matrix_immanant(&a, family.table(), k).unwrap();
                    assert!(
                        approx_complex(by_sum, by_matrix, 1e-11),
                        "n={n} k={k}: {by_sum} vs {by_matrix}"
                    );
                    if k == 1 {
                        assert!(approx_complex(by_sum, permanent(&a).unwrap(), 1e-11));
                    }
                    if k == 2 {
                        assert!(approx_complex(by_sum, determinant(&a).unwrap(), 1e-11));
                    }
                }
            }
        }
    }

    #[test]
    fn exp_matrix_degenerate_inputs() {
        let lambda = Weight::from_omega(vec![1, 2]).unwrap();
        let zero_x = Point::zero(2);
        for row in exp_matrix(&lambda, &zero_x).unwrap() {
            for entry in row {
                assert!(approx_complex(entry, Complex64::new(1.0, 0.0), 1e-15));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let x = random_point(2, &mut rng);
        for row in exp_matrix(&Weight::zero(2), &x).unwrap() {
            for entry in row {
                assert!(approx_complex(entry, Complex64::new(1.0, 0.0), 1e-15));
            }
        }
        for row in exp_matrix(&lambda, &x).unwrap() {
            for entry in row {
                assert!((entry.norm() - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn conjugation_flips_the_argument() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for n in 1..=3 {
            let family = ImmanantFamily::new(n).unwrap();
            for k in 1..=family.num_characters() {
                let lambda = random_dominant(n, 2, &mut rng);
                let x = random_point(n, &mut rng);
                let plus = family.eval_weight(k, &lambda, &x).unwrap();
                let minus = family.eval_weight(k, &lambda, &x.neg()).unwrap();
                assert!(approx_complex(plus.conj(), minus, 1e-12));
            }
        }
    }

    #[test]
    fn invariance_and_antisymmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let family = ImmanantFamily::new(2).unwrap();
        let lambda = Weight::from_omega(vec![2, 1]).unwrap();
        let x = random_point(2, &mut rng);
        let c_base = family.c_function(&lambda, &x).unwrap();
        let s_base = family.s_function(&lambda, &x).unwrap();
        for w in family.group().to_vec() {
            let moved = lambda.permuted(&w).unwrap();
            let c_moved = family.c_function(&moved, &x).unwrap();
            assert!(approx_complex(c_moved, c_base, 1e-12));
            let s_moved = family.s_function(&moved, &x).unwrap();
            let expected = w.sign() as f64 * s_base;
            assert!(approx_complex(s_moved, expected, 1e-12));
        }
        // A stabilized weight kills the antisymmetric function.
        let boundary = Weight::from_omega(vec![1, 0]).unwrap();
        let s = family.s_function(&boundary, &x).unwrap();
        assert!(s.norm() < 1e-12);
    }

    #[test]
    fn argument_swap_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for n in 1..=3 {
            let family = ImmanantFamily::new(n).unwrap();
            for k in 1..=family.num_characters() {
                let lambda = random_dominant(n, 2, &mut rng);
                let x = random_point(n, &mut rng);
                let forward = family.eval_weight(k, &lambda, &x).unwrap();
                let swapped = family.eval_points(k, &x, &lambda.to_point()).unwrap();
                assert!(approx_complex(forward, swapped, 1e-11));
            }
        }
    }

    #[test]
    fn symmetry_check_all_elements_small_ranks() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for n in 1..=3 {
            let family = ImmanantFamily::new(n).unwrap();
            for k in 1..=family.num_characters() {
                let lambda = random_dominant(n, 3, &mut rng);
                let spec = ImmanantSpec::new(n, k, lambda).unwrap();
                let x = random_point(n, &mut rng);
                for w in family.group().to_vec() {
                    assert!(
                        family.symmetry_check(&spec, &w, &x, 1e-10).unwrap(),
                        "n={n} k={k} w={w}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_expansion_matches_pointwise_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let family = ImmanantFamily::new(2).unwrap();
        for _ in 0..10 {
            let k = rng.gen_range(1..=family.num_characters());
            let l = rng.gen_range(1..=family.num_characters());
            let lambda = random_dominant(2, 2, &mut rng);
            let mu = random_dominant(2, 2, &mut rng);
            let spec1 = ImmanantSpec::new(2, k, lambda).unwrap();
            let spec2 = ImmanantSpec::new(2, l, mu).unwrap();
            let expansion = family.product_expand(&spec1, &spec2).unwrap();
            let x = random_point(2, &mut rng);
            let via_terms = expansion.eval(&x).unwrap();
            let pointwise =
                family.eval(&spec1, &x).unwrap() * family.eval(&spec2, &x).unwrap();
            assert!(approx_complex(via_terms, pointwise, 1e-11), "k={k} l={l}");
        }
    }

    #[test]
    fn product_total_coefficient_collapses() {
        // At x=0 the product is (Σ_w χ_k)(Σ_w χ_l), which row orthogonality
        // against the trivial character kills unless k = l = 1.
        let family = ImmanantFamily::new(2).unwrap();
        let lambda = Weight::from_omega(vec![1, 1]).unwrap();
        for k in 1..=family.num_characters() {
            for l in 1..=family.num_characters() {
                let spec1 = ImmanantSpec::new(2, k, lambda.clone()).unwrap();
                let spec2 = ImmanantSpec::new(2, l, lambda.clone()).unwrap();
                let total = family.product_expand(&spec1, &spec2).unwrap().total_coefficient();
                let expected = if k == 1 && l == 1 { 36 } else { 0 };
                assert_eq!(total, expected, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn product_with_trivial_factor_collapses_to_shifts() {
        // Imm^{k}(λ,x)·Imm^{1}(μ,x) = Σ_w̃ Imm^{k}(λ + w̃μ, x).
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        let family = ImmanantFamily::new(2).unwrap();
        let lambda = Weight::from_omega(vec![1, 2]).unwrap();
        let mu = Weight::from_omega(vec![1, 0]).unwrap();
        let spec1 = ImmanantSpec::new(2, 3, lambda.clone()).unwrap();
        let spec2 = ImmanantSpec::new(2, 1, mu.clone()).unwrap();
        let expansion = family.product_expand(&spec1, &spec2).unwrap();
        for _ in 0..5 {
            let x = random_point(2, &mut rng);
            let lhs = expansion.eval(&x).unwrap();
            let mut rhs = Complex64::new(0.0, 0.0);
            for w in family.group() {
                let shifted = lambda.add(&mu.permuted(w).unwrap()).unwrap();
                rhs += family.eval_weight(3, &shifted, &x).unwrap();
            }
            assert!(approx_complex(lhs, rhs, 1e-11));
        }

        // μ = 0 with the trivial character is the constant |W|.
        let zero_spec = ImmanantSpec::new(2, 1, Weight::zero(2)).unwrap();
        let expansion = family.product_expand(&spec1, &zero_spec).unwrap();
        let x = random_point(2, &mut rng);
        let lhs = expansion.eval(&x).unwrap();
        let rhs = 6.0 * family.eval(&spec1, &x).unwrap();
        assert!(approx_complex(lhs, rhs, 1e-11));
    }

    #[test]
    fn lemma_expansion_both_variants() {
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        for n in 2..=2 {
            let family = ImmanantFamily::new(n).unwrap();
            for (k, l) in [(3, 3), (1, 2), (2, 3)] {
                let lambda = Weight::from_omega(vec![1, 1]).unwrap();
                let mu = random_dominant(n, 2, &mut rng);
                if mu.is_zero() {
                    continue;
                }
                for conjugate in [false, true] {
                    let expansion =
                        family.lemma_expand(k, l, &lambda, &mu, conjugate).unwrap();
                    for _ in 0..5 {
                        let x = random_point(n, &mut rng);
                        let rhs = expansion.eval(&x).unwrap();
                        let lhs = family
                            .symmetrized_product(k, l, &lambda, &mu, conjugate, &x)
                            .unwrap();
                        assert!(
                            approx_complex(lhs, rhs, 1e-10),
                            "n={n} k={k} l={l} conj={conjugate}: {lhs} vs {rhs}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn term_sum_bookkeeping() {
        let mut sum = ExpTermSum::new(2);
        let w = Weight::from_omega(vec![1, 0]).unwrap();
        sum.add(&w, 2);
        sum.add(&w, -2);
        assert_eq!(sum.num_terms(), 0);
        sum.add(&w, 3);
        sum.add(&Weight::zero(2), 1);
        assert_eq!(sum.num_terms(), 2);
        assert_eq!(sum.total_coefficient(), 4);
        let collected: Vec<_> = sum.terms().collect();
        assert!(collected.iter().any(|(wt, c)| *c == 3 && *wt == w));
        // Value at x = 0 equals the total coefficient.
        let at_zero = sum.eval(&Point::zero(2)).unwrap();
        assert!(approx_complex(at_zero, Complex64::new(4.0, 0.0), 1e-15));
    }

    #[test]
    fn spec_validation() {
        let ok = ImmanantSpec::new(2, 3, Weight::from_omega(vec![1, 2]).unwrap());
        assert!(ok.is_ok());
        assert!(ImmanantSpec::new(2, 0, Weight::zero(2)).is_err());
        assert!(ImmanantSpec::new(2, 4, Weight::zero(2)).is_err());
        assert!(ImmanantSpec::new(2, 1, Weight::from_omega(vec![-1, 0]).unwrap()).is_err());
        assert!(ImmanantSpec::new(2, 1, Weight::from_omega(vec![1, 0, 0]).unwrap()).is_err());
        // λ = 0 is a valid spec for every k; the function is just zero for k ≥ 2.
        assert!(ImmanantSpec::new(2, 3, Weight::zero(2)).is_ok());
        assert_eq!(num_immanants(2), 3);
        assert_eq!(num_immanants(3), 5);
    }

    #[test]
    fn eval_on_sampled_domain_points() {
        // The two routes also agree on quadrature nodes, which is what the
        // Monte Carlo integrals rely on.
        let family = ImmanantFamily::new(2).unwrap();
        let lambda = Weight::from_omega(vec![1, 2]).unwrap();
        for x in sample_f(2, 25, 91).unwrap() {
            let by_sum = family.eval_weight(3, &lambda, &x).unwrap();
            let a = exp_matrix(&lambda, &x).unwrap();
            let by_matrix = matrix_immanant(&a, family.table(), 3).unwrap();
            assert!(approx_complex(by_sum, by_matrix, 1e-11));
        }
    }
}
