//! Randomized invariants of the linear algebra kernel and the algebraic
//! operators.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bihom::cohomology::{
    bracket2, circle, compute_h2, d1, d2, BilinearMap,
};
use bihom::linalg::{format_rat, parse_rat, rat, vec_is_zero, Matrix};
use bihom::rep::{cochain1_basis, Cochain1};
use bihom::sample;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |entries| {
        Matrix::from_fn(rows, cols, |r, c| rat(entries[r * cols + c]))
    })
}

fn any_small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| small_matrix(r, c))
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in any_small_matrix()) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rank_nullity(m in any_small_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
    }

    #[test]
    fn kernel_vectors_map_to_zero(m in any_small_matrix()) {
        for v in m.kernel_basis().vectors() {
            prop_assert!(vec_is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn image_contains_every_product(m in any_small_matrix(), coeffs in proptest::collection::vec(-3i64..=3, 4)) {
        let x: Vec<_> = (0..m.cols()).map(|i| rat(coeffs[i])).collect();
        let y = m.mul_vec(&x);
        prop_assert!(m.image_basis().contains(&y).unwrap());
    }

    #[test]
    fn solve_solutions_verify(m in any_small_matrix(), coeffs in proptest::collection::vec(-3i64..=3, 4)) {
        // b is constructed in the image, so a solution must exist and verify
        let x: Vec<_> = (0..m.cols()).map(|i| rat(coeffs[i])).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn rational_wire_format_round_trips(p in -1000i64..1000, q in 1i64..100) {
        let r = bihom::linalg::ratq(p, q);
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn zero_denominator_always_rejected(p in -1000i64..1000) {
        let s = format!("{p}/0");
        prop_assert!(parse_rat(&s).is_err());
    }
}

#[test]
fn bracket2_is_symmetric_and_squares_to_double_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = 1 + (rng.gen_range(0..3u8) as usize);
        let f = BilinearMap::new(n, sample::random_bilinear(&mut rng, n)).unwrap();
        let g = BilinearMap::new(n, sample::random_bilinear(&mut rng, n)).unwrap();
        let (alpha, beta) = sample::random_commuting_pair(&mut rng, n);
        assert_eq!(
            bracket2(&f, &g, &alpha, &beta),
            bracket2(&g, &f, &alpha, &beta)
        );
        let ff = bracket2(&f, &f, &alpha, &beta);
        let cc = circle(&f, &f, &alpha, &beta);
        assert_eq!(ff, cc.add(&cc));
    }
}

use rand::Rng;

#[test]
fn d2_after_d1_vanishes_on_random_valid_representations() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let l = sample::random_algebra(&mut rng, 3);
        let (module, act) = sample::random_rep(&mut rng, &l, 3);
        let c1 = cochain1_basis(&l, &module);
        let flat = sample::random_combination(&mut rng, &c1);
        let f = Cochain1::from_flat(&l, &module, &flat).unwrap();
        let df = d1(&l, &module, &act, &f).unwrap();
        assert!(
            d2(&l, &module, &act, &df).unwrap().is_zero(),
            "d2(d1(f)) != 0 for {}",
            l.name()
        );
    }
}

#[test]
fn h2_dimensions_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let l = sample::random_algebra(&mut rng, 3);
        let (module, act) = sample::random_rep(&mut rng, &l, 2);
        let result = compute_h2(&l, &module, &act).unwrap();
        assert_eq!(result.h2_dim, result.z2.dim() - result.b2.dim());
        assert_eq!(result.representatives.len(), result.h2_dim);
        // every representative is a cocycle and no nonzero combination is a
        // coboundary (they extend B2 independently)
        for rep in &result.representatives {
            assert!(d2(&l, &module, &act, rep).unwrap().is_zero());
            if !rep.is_zero() {
                assert!(!result.b2.contains(&rep.to_flat()).unwrap());
            }
        }
    }
}

#[test]
fn twisted_construction_preserves_validity() {
    // morphism-twisting a valid multiplicative algebra stays valid
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..30 {
        let l = sample::random_algebra(&mut rng, 3);
        let check = l.check_bihom_lie();
        assert!(check.passed(), "{}: {:?}", l.name(), check.report.violations);
        assert!(l.alpha().mul(l.beta()) == l.beta().mul(l.alpha()));
    }
}
