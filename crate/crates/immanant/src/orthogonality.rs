//! Continuous orthogonality of immanant functions over `F̃ = ∪_w wF`.
//!
//! The ground truth is an exact counting oracle, not quadrature: `F̃` is a
//! fundamental domain for root-lattice translations, so a lattice
//! exponential `e^{2πi⟨ν,x⟩}` with `ν ∈ P` integrates to `|W||F|·[ν = 0]`.
//! Expanding the product of two immanant functions term by term collapses
//! the integral to
//!
//! ```text
//! ∫_{F̃} Imm^{k}(λ,x)·conj(Imm^{l}(μ,x)) dx
//!     = |F|·|W|·Σ_{(w,ŵ): wλ = ŵμ} χ_k(w)·χ_l(ŵ),
//! ```
//!
//! an integer times `|F|`. The orthogonality statement says this equals
//! `|F|·|W|²·δ_{λμ}δ_{kl}·(1/d_k)·Σ_{w∈stab(λ)} χ_k(w)`; both sides are
//! computed here independently, as exact rationals, so their equality can
//! be checked with zero tolerance. Monte Carlo quadrature over `F̃` is kept
//! only as a consistency probe of the numeric evaluation path.

use std::collections::HashMap;

use num_complex::Complex64;
use num_rational::Rational64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::ImmanantFamily;
use crate::geometry::{FundamentalDomain, Weight};

/// Worker count baked into [`numeric_inner_product`]; fixed so default
/// results are reproducible regardless of the host's thread pool.
pub const DEFAULT_WORKERS: usize = 8;

fn check_weight(family: &ImmanantFamily, w: &Weight) -> Result<()> {
    if w.rank() != family.n() {
        return Err(Error::RankMismatch(w.rank(), family.n()));
    }
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.omega().to_vec()));
    }
    Ok(())
}

/// `∫_{F̃} Imm^{k}(λ,x)·conj(Imm^{l}(μ,x)) dx` in units of `|F|`, computed
/// exactly as `|W|·Σ_{(w,ŵ): wλ=ŵμ} χ_k(w)χ_l(ŵ)` (pairs grouped by
/// common image). Accepts any dominant weights, including zero.
pub fn exact_inner_product(
    family: &ImmanantFamily,
    k: usize,
    l: usize,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Rational64> {
    check_weight(family, lambda)?;
    check_weight(family, mu)?;
    // Character sums of μ-side elements, keyed by the image ŵμ.
    let mut mu_sums: HashMap<Vec<i64>, i64> = HashMap::new();
    for (j, w_hat) in family.group().iter().enumerate() {
        let chi = family.character(l, j)?;
        if chi != 0 {
            *mu_sums.entry(mu.permuted(w_hat)?.scaled_e().to_vec()).or_insert(0) += chi;
        }
    }
    let mut pair_sum = 0i64;
    for (i, w) in family.group().iter().enumerate() {
        let chi = family.character(k, i)?;
        if chi == 0 {
            continue;
        }
        if let Some(&other) = mu_sums.get(lambda.permuted(w)?.scaled_e()) {
            pair_sum += chi * other;
        }
    }
    Ok(Rational64::from_integer(family.order() as i64 * pair_sum))
}

/// The orthogonality constant `|W|²·δ_{λμ}δ_{kl}·(1/d_k)·Σ_{w∈stab(λ)} χ_k(w)`
/// in units of `|F|`, with the stabilizer enumerated exactly.
pub fn theorem_rhs(
    family: &ImmanantFamily,
    k: usize,
    l: usize,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Rational64> {
    check_weight(family, lambda)?;
    check_weight(family, mu)?;
    if k != l || lambda != mu {
        return Ok(Rational64::from_integer(0));
    }
    let mut stab_sum = 0i64;
    for (i, w) in family.group().iter().enumerate() {
        if lambda.permuted(w)? == *lambda {
            stab_sum += family.character(k, i)?;
        }
    }
    let order = family.order() as i64;
    let degree = family.table().degree(k)?;
    Ok(Rational64::new(order * order * stab_sum, degree))
}

/// A Monte Carlo estimate of an integral over `F̃`, with the standard
/// error of the estimate.
#[derive(Clone, Copy, Debug)]
pub struct McEstimate {
    pub value: Complex64,
    pub std_error: f64,
    pub samples: usize,
}

/// Monte Carlo `∫_{F̃} Imm^{k}(λ,x)·conj(Imm^{l}(μ,x)) dx` with the default
/// worker count; in absolute units (multiply exact values by `|F|` to
/// compare). Reproducible from the seed.
pub fn numeric_inner_product(
    family: &ImmanantFamily,
    k: usize,
    l: usize,
    lambda: &Weight,
    mu: &Weight,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    numeric_inner_product_with_workers(family, k, l, lambda, mu, samples, seed, DEFAULT_WORKERS)
}

/// As [`numeric_inner_product`] with an explicit worker count. The sample
/// budget is split across workers with per-worker derived seeds and the
/// partial sums are combined in worker order, so a fixed
/// `(seed, workers)` pair always reproduces the same estimate.
#[allow(clippy::too_many_arguments)]
pub fn numeric_inner_product_with_workers(
    family: &ImmanantFamily,
    k: usize,
    l: usize,
    lambda: &Weight,
    mu: &Weight,
    samples: usize,
    seed: u64,
    workers: usize,
) -> Result<McEstimate> {
    check_weight(family, lambda)?;
    check_weight(family, mu)?;
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    if workers == 0 {
        return Err(Error::InvalidArgument("worker count must be positive".into()));
    }
    let domain = FundamentalDomain::new(family.n())?;
    let mut seeder = ChaCha8Rng::seed_from_u64(seed);
    let worker_seeds: Vec<u64> = (0..workers).map(|_| seeder.gen()).collect();
    let base = samples / workers;
    let extra = samples % workers;

    let partials: Vec<(Complex64, f64)> = worker_seeds
        .par_iter()
        .enumerate()
        .map(|(j, &worker_seed)| -> Result<(Complex64, f64)> {
            let count = base + usize::from(j < extra);
            let mut rng = ChaCha8Rng::seed_from_u64(worker_seed);
            let mut sum = Complex64::new(0.0, 0.0);
            let mut sq = 0.0;
            for _ in 0..count {
                let y = domain.sample(&mut rng);
                let w = &family.group()[rng.gen_range(0..family.order())];
                let x = y.permuted(w)?;
                let f = family.eval_weight(k, lambda, &x)?
                    * family.eval_weight(l, mu, &x)?.conj();
                sum += f;
                sq += f.norm_sqr();
            }
            Ok((sum, sq))
        })
        .collect::<Result<_>>()?;

    let mut total = Complex64::new(0.0, 0.0);
    let mut total_sq = 0.0;
    for (sum, sq) in partials {
        total += sum;
        total_sq += sq;
    }
    let mean = total / samples as f64;
    let region = family.order() as f64 * domain.volume();
    let variance = if samples > 1 {
        ((total_sq - samples as f64 * mean.norm_sqr()) / (samples - 1) as f64).max(0.0)
    } else {
        0.0
    };
    Ok(McEstimate {
        value: region * mean,
        std_error: region * (variance / samples as f64).sqrt(),
        samples,
    })
}

/// One side of the C-/S-orbit checks: the exact integral in units of `|F|`
/// next to its closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrthogonalityPair {
    pub computed: Rational64,
    pub expected: Rational64,
}

impl OrthogonalityPair {
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

/// The C- and S-orbit orthogonality over `F` itself (not `F̃`): both
/// integrands are `W`-invariant, so the `F`-integral is the `F̃`-integral
/// divided by `|W|`. The S pair is present only when both weights are
/// strictly dominant; elsewhere the S-function vanishes identically.
#[derive(Clone, Copy, Debug)]
pub struct CsOrthogonality {
    pub c: OrthogonalityPair,
    pub s: Option<OrthogonalityPair>,
}

/// `∫_F Φ_λ conj(Φ_μ) dx = |F|·|W|·|stab(λ)|·δ_{λμ}` in units of `|F|`.
pub fn c_orthogonality(
    family: &ImmanantFamily,
    lambda: &Weight,
    mu: &Weight,
) -> Result<OrthogonalityPair> {
    let order = family.order() as i64;
    let computed = exact_inner_product(family, 1, 1, lambda, mu)? / Rational64::from_integer(order);
    let expected = if lambda == mu {
        Rational64::from_integer(order * lambda.stabilizer_order() as i64)
    } else {
        Rational64::from_integer(0)
    };
    Ok(OrthogonalityPair { computed, expected })
}

/// `∫_F φ_λ conj(φ_μ) dx = |F|·|W|·δ_{λμ}` for strictly dominant weights,
/// in units of `|F|`. Errors outside `P⁺⁺`, where the identity is vacuous.
pub fn s_orthogonality(
    family: &ImmanantFamily,
    lambda: &Weight,
    mu: &Weight,
) -> Result<OrthogonalityPair> {
    for w in [lambda, mu] {
        if !w.is_strictly_dominant() {
            return Err(Error::NotStrictlyDominant(w.omega().to_vec()));
        }
    }
    let order = family.order() as i64;
    let computed = exact_inner_product(family, 2, 2, lambda, mu)? / Rational64::from_integer(order);
    let expected = if lambda == mu {
        Rational64::from_integer(order)
    } else {
        Rational64::from_integer(0)
    };
    Ok(OrthogonalityPair { computed, expected })
}

/// Runs the C check, and the S check when both weights are strictly
/// dominant.
pub fn cs_orthogonality_check(
    family: &ImmanantFamily,
    lambda: &Weight,
    mu: &Weight,
) -> Result<CsOrthogonality> {
    let c = c_orthogonality(family, lambda, mu)?;
    let s = if lambda.is_strictly_dominant() && mu.is_strictly_dominant() {
        Some(s_orthogonality(family, lambda, mu)?)
    } else {
        None
    };
    Ok(CsOrthogonality { c, s })
}

/// All nonzero dominant weights of the rank with `ω`-coordinates in
/// `0..=max_coord`; the sweep domain of the exact verifications.
pub fn dominant_weights(n: usize, max_coord: i64) -> Result<Vec<Weight>> {
    if n < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    if max_coord < 0 {
        return Err(Error::InvalidArgument("max coordinate must be nonnegative".into()));
    }
    let count = (max_coord + 1).pow(n as u32);
    let mut out = Vec::new();
    for code in 0..count {
        let mut rest = code;
        let omega: Vec<i64> = (0..n)
            .map(|_| {
                let c = rest % (max_coord + 1);
                rest /= max_coord + 1;
                c
            })
            .collect();
        let w = Weight::from_omega(omega)?;
        if !w.is_zero() {
            out.push(w);
        }
    }
    Ok(out)
}

/// Full exact-vs-RHS record for one `(k, l, λ, μ)` tuple, with optional
/// Monte Carlo companion values. Rationals are serialized as strings so
/// JSON round-trips stay lossless.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InnerProductReport {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub exact_value: String,
    pub theorem_rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_value: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub std_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_error: Option<f64>,
}

pub fn rational_string(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Builds the report for one tuple; with `samples > 0` also runs the Monte
/// Carlo estimate and records its absolute error against `exact·|F|`.
#[allow(clippy::too_many_arguments)]
pub fn inner_product_report(
    family: &ImmanantFamily,
    k: usize,
    l: usize,
    lambda: &Weight,
    mu: &Weight,
    samples: usize,
    seed: u64,
) -> Result<InnerProductReport> {
    let exact = exact_inner_product(family, k, l, lambda, mu)?;
    let rhs = theorem_rhs(family, k, l, lambda, mu)?;
    let mut report = InnerProductReport {
        n: family.n(),
        k,
        l,
        lambda: lambda.omega().to_vec(),
        mu: mu.omega().to_vec(),
        exact_value: rational_string(exact),
        theorem_rhs: rational_string(rhs),
        numeric_value: None,
        samples: None,
        std_error: None,
        abs_error: None,
    };
    if samples > 0 {
        let estimate = numeric_inner_product(family, k, l, lambda, mu, samples, seed)?;
        let volume = FundamentalDomain::new(family.n())?.volume();
        let target = (*exact.numer() as f64 / *exact.denom() as f64) * volume;
        report.numeric_value = Some([estimate.value.re, estimate.value.im]);
        report.samples = Some(estimate.samples);
        report.std_error = Some(estimate.std_error);
        report.abs_error = Some((estimate.value - Complex64::new(target, 0.0)).norm());
    }
    Ok(report)
}
