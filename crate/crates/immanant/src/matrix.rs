//! Immanants of complex matrices: the character-weighted permutation
//! expansion `Σ_σ χ(σ) Π_j M[j][σ(j)]`, its per-class partial sums, and the
//! permanent/determinant specializations computed by unrelated algorithms
//! (Ryser inclusion-exclusion, LU elimination) so each route can serve as
//! an independent oracle for the others.

use num_complex::Complex64;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::perm::{enumerate_group, partitions, CycleType};

/// Largest matrix order accepted by [`class_sums`].
pub const MAX_CLASS_SUM_ORDER: usize = 6;

fn check_square(m: &[Vec<Complex64>]) -> Result<usize> {
    let order = m.len();
    if order == 0 || m.iter().any(|row| row.len() != order) {
        return Err(Error::NotSquare);
    }
    Ok(order)
}

/// `Σ_σ χ_k(σ) Π_j M[j][σ(j)]` over all `m!` permutations.
pub fn matrix_immanant(m: &[Vec<Complex64>], table: &CharacterTable, k: usize) -> Result<Complex64> {
    let order = check_square(m)?;
    if order != table.m() {
        return Err(Error::MatrixOrderMismatch { order, degree: table.m() });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for sigma in enumerate_group(order)? {
        let chi = table.value_of(k, &sigma)? as f64;
        let mut product = Complex64::new(1.0, 0.0);
        for j in 1..=order {
            product *= m[j - 1][sigma.apply(j) - 1];
        }
        sum += chi * product;
    }
    Ok(sum)
}

/// Per-class sums `C_ρ = Σ_{σ of type ρ} Π_j M[j][σ(j)]`, keyed by cycle
/// type in the class order of the character tables. Every immanant is an
/// integer combination of these, and `Σ_ρ C_ρ` is the permanent.
pub fn class_sums(m: &[Vec<Complex64>]) -> Result<Vec<(CycleType, Complex64)>> {
    let order = check_square(m)?;
    if order > MAX_CLASS_SUM_ORDER {
        return Err(Error::DegreeOutOfRange { degree: order, max: MAX_CLASS_SUM_ORDER });
    }
    let classes = partitions(order);
    let mut sums = vec![Complex64::new(0.0, 0.0); classes.len()];
    for sigma in enumerate_group(order)? {
        let class = classes
            .iter()
            .position(|t| *t == sigma.cycle_type())
            .expect("cycle type of an S_m element is a partition of m");
        let mut product = Complex64::new(1.0, 0.0);
        for j in 1..=order {
            product *= m[j - 1][sigma.apply(j) - 1];
        }
        sums[class] += product;
    }
    Ok(classes.into_iter().zip(sums).collect())
}

/// Permanent by Ryser's inclusion-exclusion over column subsets,
/// `(-1)^m Σ_{∅≠S} (-1)^{|S|} Π_i Σ_{j∈S} M[i][j]`; `O(2^m · m²)`.
pub fn permanent(m: &[Vec<Complex64>]) -> Result<Complex64> {
    let order = check_square(m)?;
    if order > 20 {
        return Err(Error::DegreeOutOfRange { degree: order, max: 20 });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for subset in 1u32..(1 << order) {
        let mut product = Complex64::new(1.0, 0.0);
        for row in m {
            let mut entry = Complex64::new(0.0, 0.0);
            for (j, &v) in row.iter().enumerate() {
                if subset & (1 << j) != 0 {
                    entry += v;
                }
            }
            product *= entry;
        }
        if (order as u32 - subset.count_ones()).is_multiple_of(2) {
            total += product;
        } else {
            total -= product;
        }
    }
    Ok(total)
}

/// Determinant by LU elimination with partial pivoting on the modulus.
pub fn determinant(m: &[Vec<Complex64>]) -> Result<Complex64> {
    let order = check_square(m)?;
    let mut work: Vec<Vec<Complex64>> = m.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..order {
        let pivot_row = (col..order)
            .max_by(|&a, &b| {
                work[a][col]
                    .norm_sqr()
                    .partial_cmp(&work[b][col].norm_sqr())
                    .expect("matrix entries are finite")
            })
            .unwrap();
        if work[pivot_row][col].norm_sqr() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
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
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(order: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Complex64>> {
        (0..order)
            .map(|_| {
                (0..order)
                    .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn two_by_two_expansions() {
        let m = vec![vec![c(1.0, 0.0), c(2.0, 0.0)], vec![c(3.0, 0.0), c(4.0, 0.0)]];
        let table = character_table(2).unwrap();
        let per = matrix_immanant(&m, &table, 1).unwrap();
        assert!((per - c(10.0, 0.0)).norm() < 1e-14);
        let det = matrix_immanant(&m, &table, 2).unwrap();
        assert!((det - c(-2.0, 0.0)).norm() < 1e-14);
        assert!((permanent(&m).unwrap() - c(10.0, 0.0)).norm() < 1e-14);
        assert!((determinant(&m).unwrap() - c(-2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn immanant_is_a_class_sum_combination() {
        // Row 3 of the S_3 table is (-1, 0, 2) on classes (3), (2,1), (1^3),
        // so the third immanant is 2·C_identity − C_three_cycles.
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let table = character_table(3).unwrap();
        for _ in 0..5 {
            let m = random_matrix(3, &mut rng);
            let sums = class_sums(&m).unwrap();
            let by_class: std::collections::HashMap<_, _> = sums.into_iter().collect();
            let id_class = CycleType::new(vec![1, 1, 1]).unwrap();
            let cyc_class = CycleType::new(vec![3]).unwrap();
            let expected = 2.0 * by_class[&id_class] - by_class[&cyc_class];
            let got = matrix_immanant(&m, &table, 3).unwrap();
            assert!((got - expected).norm() < 1e-12);
        }
    }

    #[test]
    fn class_sum_term_counts_and_total() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let m = random_matrix(3, &mut rng);
        let sums = class_sums(&m).unwrap();
        // Transposition class of S_3: three products.
        let transpositions = &sums
            .iter()
            .find(|(t, _)| t.parts() == [2, 1])
            .unwrap()
            .1;
        let expected = m[0][0] * m[1][2] * m[2][1]
            + m[0][1] * m[1][0] * m[2][2]
            + m[0][2] * m[1][1] * m[2][0];
        assert!((transpositions - expected).norm() < 1e-14);

        let total: Complex64 = sums.iter().map(|(_, v)| v).sum();
        assert!((total - permanent(&m).unwrap()).norm() < 1e-12);

        let m4 = random_matrix(4, &mut rng);
        let sums4 = class_sums(&m4).unwrap();
        for (t, _) in &sums4 {
            let count = t.class_size();
            // Sanity on sizes the expansion relies on: 8 three-cycles, 6 four-cycles.
            if t.parts() == [3, 1] {
                assert_eq!(count, 8);
            }
            if t.parts() == [4] {
                assert_eq!(count, 6);
            }
        }
    }

    #[test]
    fn diagonal_matrix_class_sums() {
        let m = vec![
            vec![c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(3.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(5.0, 0.0)],
        ];
        for (t, v) in class_sums(&m).unwrap() {
            if t.parts().iter().any(|&p| p >= 2) {
                assert_eq!(v, c(0.0, 0.0));
            } else {
                assert!((v - c(30.0, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn ryser_agrees_with_immanant_permanent() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let table = character_table(4).unwrap();
        for _ in 0..20 {
            let m = random_matrix(4, &mut rng);
            let via_immanant = matrix_immanant(&m, &table, 1).unwrap();
            let via_ryser = permanent(&m).unwrap();
            assert!((via_immanant - via_ryser).norm() / via_ryser.norm() < 1e-10);
        }
    }

    #[test]
    fn lu_agrees_with_immanant_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let table = character_table(4).unwrap();
        for _ in 0..20 {
            let m = random_matrix(4, &mut rng);
            let via_immanant = matrix_immanant(&m, &table, 2).unwrap();
            let via_lu = determinant(&m).unwrap();
            assert!((via_immanant - via_lu).norm() < 1e-10);
        }
    }

    #[test]
    fn determinant_of_identity_and_singular() {
        let id: Vec<Vec<Complex64>> = (0..4)
            .map(|i| (0..4).map(|j| c(if i == j { 1.0 } else { 0.0 }, 0.0)).collect())
            .collect();
        assert!((determinant(&id).unwrap() - c(1.0, 0.0)).norm() < 1e-15);

        let singular = vec![
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(2.0, 0.0), c(4.0, 0.0)],
        ];
        assert!(determinant(&singular).unwrap().norm() < 1e-14);
    }

    #[test]
    fn shape_validation() {
        let table = character_table(3).unwrap();
        let ragged = vec![vec![c(1.0, 0.0)], vec![c(1.0, 0.0), c(2.0, 0.0)]];
        assert!(matrix_immanant(&ragged, &table, 1).is_err());
        let two = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]];
        assert!(matches!(
            matrix_immanant(&two, &table, 1),
            Err(Error::MatrixOrderMismatch { order: 2, degree: 3 })
        ));
        assert!(class_sums(&random_matrix(7, &mut ChaCha8Rng::seed_from_u64(1))).is_err());
    }
}
