//! Property tests for the structural invariants: randomized inputs, exact
//! assertions wherever the arithmetic is exact.

use approx::assert_relative_eq;
use proptest::prelude::*;

use immanant::characters::character_table;
use immanant::functions::{exp_matrix, ImmanantFamily};
use immanant::geometry::{Point, Weight};
use immanant::matrix::matrix_immanant;
use immanant::orthogonality::exact_inner_product;
use immanant::perm::{factorial, partitions, Permutation};

/// An arbitrary permutation of `1..=m`, as the argsort of random keys.
fn perm(m: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(any::<u32>(), m).prop_map(move |keys| {
        let mut images: Vec<usize> = (1..=m).collect();
        images.sort_by_key(|&i| keys[i - 1]);
        Permutation::from_images(images).expect("argsort is a bijection")
    })
}

fn dominant(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=3i64, n)
        .prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
        .prop_map(|omega| Weight::from_omega(omega).expect("integer coordinates"))
}

fn any_weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-3..=3i64, n)
        .prop_map(|omega| Weight::from_omega(omega).expect("integer coordinates"))
}

fn point(n: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-1.0..1.0f64, n)
        .prop_map(|coords| Point::from_omega(&coords).expect("finite coordinates"))
}

proptest! {
    #[test]
    fn sign_is_a_homomorphism(p in perm(5), q in perm(5)) {
        let composed = p.compose(&q).unwrap();
        prop_assert_eq!(composed.sign(), p.sign() * q.sign());
    }

    #[test]
    fn inverse_composes_to_identity(p in perm(6)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn cycle_type_is_conjugation_invariant(p in perm(5), q in perm(5)) {
        let conjugated = q.compose(&p).unwrap().compose(&q.inverse()).unwrap();
        prop_assert_eq!(p.cycle_type(), conjugated.cycle_type());
    }

    #[test]
    fn adjacent_decomposition_rebuilds_the_permutation(p in perm(6)) {
        let mut rebuilt = Permutation::identity(6);
        // The word multiplies left to right: p = t_{i1} ∘ t_{i2} ∘ ...
        for &i in &p.adjacent_decomposition() {
            let t = Permutation::adjacent_transposition(6, i).unwrap();
            rebuilt = rebuilt.compose(&t).unwrap();
        }
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn weight_coordinates_round_trip(w in any_weight(3)) {
        let back = Weight::from_scaled_e(w.scaled_e().to_vec()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn reflections_are_involutions(w in any_weight(3), i in 1..=3usize) {
        prop_assert_eq!(w.reflect(i).unwrap().reflect(i).unwrap(), w);
    }

    #[test]
    fn orbit_times_stabilizer_is_the_group_order(w in any_weight(3)) {
        prop_assert_eq!(w.orbit_size() * w.stabilizer_order(), factorial(4));
        prop_assert_eq!(w.orbit().unwrap().len() as u64, w.orbit_size());
        prop_assert_eq!(w.stabilizer().unwrap().len() as u64, w.stabilizer_order());
    }

    #[test]
    fn weight_action_is_a_left_action(w in any_weight(2), p in perm(3), q in perm(3)) {
        let composed = w.permuted(&p.compose(&q).unwrap()).unwrap();
        let stepwise = w.permuted(&q).unwrap().permuted(&p).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn permutations_preserve_the_inner_product(x in point(3), y in point(3), p in perm(4)) {
        let before = x.dot(&y).unwrap();
        let after = x.permuted(&p).unwrap().dot(&y.permuted(&p).unwrap()).unwrap();
        assert_relative_eq!(before, after, max_relative = 1e-12, epsilon = 1e-12);
    }

    #[test]
    fn row_orthogonality_of_characters(m in 2..=6usize) {
        let table = character_table(m).unwrap();
        for k in 1..=table.num_characters() {
            for l in 1..=table.num_characters() {
                let expected = if k == l { factorial(m) as i64 } else { 0 };
                prop_assert_eq!(table.row_inner(k, l).unwrap(), expected);
            }
        }
    }

    #[test]
    fn partitions_enumerate_each_size_once(m in 1..=9usize) {
        let parts = partitions(m);
        const COUNTS: [usize; 9] = [1, 2, 3, 5, 7, 11, 15, 22, 30];
        prop_assert_eq!(parts.len(), COUNTS[m - 1]);
        for p in &parts {
            prop_assert_eq!(p.sum(), m);
        }
        let mut seen = parts.clone();
        seen.dedup();
        prop_assert_eq!(seen.len(), parts.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn character_sum_equals_matrix_immanant(lambda in dominant(2), x in point(2), k in 1..=3usize) {
        let family = ImmanantFamily::new(2).unwrap();
        let via_sum = family.eval_weight(k, &lambda, &x).unwrap();
        let a = exp_matrix(&lambda, &x).unwrap();
        let via_imm = matrix_immanant(&a, family.table(), k).unwrap();
        assert_relative_eq!(via_sum.re, via_imm.re, max_relative = 1e-10, epsilon = 1e-10);
        assert_relative_eq!(via_sum.im, via_imm.im, max_relative = 1e-10, epsilon = 1e-10);
    }

    #[test]
    fn symmetric_function_is_weyl_invariant(lambda in dominant(2), x in point(2), p in perm(3)) {
        let family = ImmanantFamily::new(2).unwrap();
        let plain = family.eval_weight(1, &lambda, &x).unwrap();
        let moved = family.eval_weight(1, &lambda, &x.permuted(&p).unwrap()).unwrap();
        assert_relative_eq!(plain.re, moved.re, max_relative = 1e-10, epsilon = 1e-10);
        assert_relative_eq!(plain.im, moved.im, max_relative = 1e-10, epsilon = 1e-10);
    }

    #[test]
    fn antisymmetric_function_picks_up_the_sign(lambda in dominant(2), x in point(2), p in perm(3)) {
        let family = ImmanantFamily::new(2).unwrap();
        let sign = p.sign() as f64;
        let plain = family.eval_weight(2, &lambda, &x).unwrap();
        let moved = family.eval_weight(2, &lambda, &x.permuted(&p).unwrap()).unwrap();
        assert_relative_eq!(sign * plain.re, moved.re, max_relative = 1e-10, epsilon = 1e-10);
        assert_relative_eq!(sign * plain.im, moved.im, max_relative = 1e-10, epsilon = 1e-10);
    }

    #[test]
    fn exact_inner_product_is_symmetric_in_its_roles(
        lambda in dominant(2),
        mu in dominant(2),
        k in 1..=3usize,
        l in 1..=3usize,
    ) {
        let family = ImmanantFamily::new(2).unwrap();
        let forward = exact_inner_product(&family, k, l, &lambda, &mu).unwrap();
        let swapped = exact_inner_product(&family, l, k, &mu, &lambda).unwrap();
        prop_assert_eq!(forward, swapped);
    }
}
