use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sympair_core::exactla::{charpoly, jordan_chevalley, kernel, minimal_polynomial, Mat};
use sympair_core::pbw::{rouviere, Pbw, QuotientClass};
use sympair_core::poly::{
    invariants_up_to_degree, is_k_invariant, j_half, j_series, k_derivation, MultiPoly, TruncSeries,
};
use sympair_core::scalar::frac;
use sympair_core::sympair::{builtin_pair, SymmetricPair, BUILTIN_PAIRS};
use sympair_core::Scalar;

fn rational() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn square_matrix(max: usize) -> impl Strategy<Value = Mat> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(rational(), n * n).prop_map(move |v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

/// Matrices with repeated eigenvalues and nontrivial nilpotent parts:
/// conjugates of block upper-triangular integer matrices.
fn structured_matrix(max: usize) -> impl Strategy<Value = Mat> {
    (1..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(-2i64..=2, n),
            prop::collection::vec(0i64..=1, n * n),
            prop::collection::vec(-1i64..=1, n * n),
        )
            .prop_map(move |(diag, upper, mix)| {
                let t = Mat::from_fn(n, n, |i, j| {
                    if i == j {
                        frac(diag[i], 1)
                    } else if i < j {
                        frac(upper[i * n + j], 1)
                    } else {
                        Scalar::zero()
                    }
                });
                // Unipotent change of basis, so always invertible.
                let p = Mat::from_fn(n, n, |i, j| {
                    if i == j {
                        frac(1, 1)
                    } else if i > j {
                        frac(mix[i * n + j], 1)
                    } else {
                        Scalar::zero()
                    }
                });
                let inv = p.inverse().unwrap();
                &(&p * &t) * &inv
            })
    })
}

fn check_jordan(m: &Mat) {
    let (s, n) = jordan_chevalley(m);
    assert_eq!(&s + &n, *m);
    assert_eq!(&s * &n, &n * &s);
    assert!(n.is_nilpotent());
    assert!(minimal_polynomial(&s).is_squarefree());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cayley_hamilton(m in square_matrix(6)) {
        prop_assert!(charpoly(&m).eval_mat(&m).is_zero());
    }

    #[test]
    fn jordan_chevalley_random(m in square_matrix(6)) {
        check_jordan(&m);
    }

    #[test]
    fn jordan_chevalley_structured(m in structured_matrix(6)) {
        check_jordan(&m);
    }

    #[test]
    fn rank_nullity(m in square_matrix(6)) {
        let ker = kernel(&m);
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}

// Pbw holds a RefCell memo, so each test thread gets its own copy.
fn with_pairs(f: impl Fn(&SymmetricPair, &Pbw)) {
    for name in BUILTIN_PAIRS {
        let pair = builtin_pair(name).unwrap();
        let pbw = Pbw::new(&pair);
        f(&pair, &pbw);
    }
}

#[test]
fn pbw_associativity() {
    with_pairs(|_, pbw| {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = pbw.random_element(&mut rng, 2, 3);
            let b = pbw.random_element(&mut rng, 2, 3);
            let c = pbw.random_element(&mut rng, 2, 3);
            let left = pbw.multiply(&pbw.multiply(&a, &b), &c);
            let right = pbw.multiply(&a, &pbw.multiply(&b, &c));
            assert_eq!(left, right);
        }
    });
}

#[test]
fn pbw_symbols_multiply_commutatively() {
    with_pairs(|_, pbw| {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let a = pbw.random_element(&mut rng, 3, 3);
            let b = pbw.random_element(&mut rng, 3, 3);
            let prod = pbw.multiply(&a, &b);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            assert_eq!(prod.symbol(), &a.symbol() * &b.symbol());
        }
    });
}

#[test]
fn ideal_annihilation() {
    with_pairs(|pair, pbw| {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for t in 0..200 {
            let u = pbw.random_element(&mut rng, 3, 4);
            let a = t % pair.dim_k();
            assert!(pbw.reduce_mod_ideal(&pbw.ideal_element(&u, a)).is_zero());
        }
    });
}

#[test]
fn representative_independence() {
    with_pairs(|pair, pbw| {
        let invariants = invariants_up_to_degree(pair, 2);
        let c2 = QuotientClass::new(invariants.last().unwrap().clone());
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for t in 0..50 {
            let c1 = QuotientClass::new(invariants[t % invariants.len()].clone());
            let expected = pbw.class_multiply(&c1, &c2).unwrap();
            let noise = pbw.ideal_element(&pbw.random_element(&mut rng, 2, 3), t % pair.dim_k());
            let perturbed = pbw.from_p_poly(&c1.rep).add(&noise);
            let got = pbw.reduce_mod_ideal(&pbw.multiply(&perturbed, &pbw.from_p_poly(&c2.rep)));
            assert_eq!(got, expected);
        }
    });
}

#[test]
fn rouviere_images_are_invariant_with_exact_top_symbol() {
    with_pairs(|pair, pbw| {
        for p in invariants_up_to_degree(pair, 4) {
            let r = rouviere(pair, pbw, &p).unwrap();
            assert!(pbw.is_invariant_class(&r));
            let d = p.degree().unwrap_or(0);
            assert_eq!(r.rep.homogeneous_part(d), p);
            assert_eq!(r.rep.degree(), p.degree());
        }
    });
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> MultiPoly {
    use rand::Rng;
    let mut p = MultiPoly::zero(nvars);
    for _ in 0..4 {
        let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=2)).collect();
        p.add_term(e, frac(rng.gen_range(-4..=4), rng.gen_range(1..=2)));
    }
    p
}

#[test]
fn leibniz_rule() {
    with_pairs(|pair, _| {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for t in 0..40 {
            let x = pair.k_vector(t % pair.dim_k()).to_vec();
            let p = random_poly(&mut rng, pair.dim_p());
            let q = random_poly(&mut rng, pair.dim_p());
            let lhs = k_derivation(pair, &x, &(&p * &q));
            let rhs = &(&k_derivation(pair, &x, &p) * &q) + &(&p * &k_derivation(pair, &x, &q));
            assert_eq!(lhs, rhs);
        }
    });
}

#[test]
fn j_half_squares_to_j_and_both_are_even() {
    with_pairs(|pair, _| {
        for d in [0, 2, 4, 6, 8] {
            let j = j_series(pair, d).unwrap();
            let h = j_half(pair, d).unwrap();
            assert_eq!(h.mul(&h), j);
            assert!(j.is_even() && h.is_even());
            assert!(j.constant_term() == frac(1, 1));
        }
    });
}

#[test]
fn cc_operator_preserves_invariants() {
    with_pairs(|pair, _| {
        let h = j_half(pair, 6).unwrap();
        for p in invariants_up_to_degree(pair, 4) {
            let q = sympair_core::poly::apply_cc_operator(&h, &p).unwrap();
            assert!(is_k_invariant(pair, &q));
        }
    });
}

#[test]
fn series_exp_log_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..20 {
        let mut p = random_poly(&mut rng, 2);
        p = &p - &MultiPoly::constant(2, p.constant_term());
        let s = TruncSeries::new(&p, 5);
        assert_eq!(s.exp().log(), s);
    }
}
