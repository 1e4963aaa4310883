mod common;

use backpenta::oracle::{dense_det, dense_solve, generate, DenseMatrix, GeneratorConfig, RhsKind};
use backpenta::system_file::{parse_system, write_system};
use backpenta::{
    factor, poly_gcd, solve, solve_symbolic, BackwardPentaSystem, BigRational, Polynomial,
    RationalFunction, Scalar, SolveError,
};
use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Polynomial::new)
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (
        polynomial(4),
        polynomial(4).prop_filter("nonzero denominator", |p| !p.is_zero()),
    )
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn exact_system(max_n: usize) -> impl Strategy<Value = backpenta::ExactSystem> {
    (any::<u64>(), 5..=max_n).prop_map(|(seed, n)| {
        generate::<BigRational>(&GeneratorConfig::new(seed, n, 9).with_rhs(RhsKind::Random)).system
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reversal_commutes_with_densify(sys in exact_system(20)) {
        prop_assert_eq!(sys.reverse_rows().densify(), sys.densify().reversed_rows());
    }

    #[test]
    fn storage_is_exact(v in prop::collection::vec(any::<f64>().prop_filter("finite", |x| x.is_finite()), 31)) {
        // n = 7: 5 + 6 + 7 + 6 + 5 bands, then y.
        let s = BackwardPentaSystem::new(
            v[0..5].to_vec(), v[5..11].to_vec(), v[11..18].to_vec(),
            v[18..24].to_vec(), v[24..29].to_vec(), [&v[29..31], &v[0..5]].concat(),
        ).unwrap();
        prop_assert!(s.a_tilde().iter().chain(s.a()).chain(s.d()).chain(s.b()).chain(s.b_tilde())
            .zip(&v[..29]).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn nonzero_count_bounded(sys in exact_system(25)) {
        let n = sys.n();
        prop_assert!(backpenta::banded::count_nonzeros(&sys.densify()) <= 5 * n - 6);
    }

    #[test]
    fn exact_residual_is_zero(sys in exact_system(40)) {
        if let Ok(r) = solve(&sys) {
            prop_assert_eq!(sys.densify().mul_vec(&r.x), sys.y().to_vec());
        }
    }

    #[test]
    fn matches_dense_oracle(sys in exact_system(60)) {
        match (solve(&sys), dense_solve(&sys.densify(), sys.y())) {
            (Ok(r), Ok(x)) => {
                prop_assert_eq!(r.x, x);
                prop_assert_eq!(r.det, dense_det(&sys.reverse_rows().densify()));
            }
            (Ok(r), Err(e)) => prop_assert!(false, "finite answer {:?} for singular system ({})", r.x, e),
            (Err(SolveError::ZeroPivot(_)), _) => {}
            (Err(e), _) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn det_parity(sys in exact_system(20)) {
        if let Ok(f) = factor(&sys.reverse_rows()) {
            prop_assert_eq!(f.det_original(), dense_det(&sys.densify()));
        }
    }

    #[test]
    fn lu_reconstruction(sys in exact_system(12)) {
        let reversed = sys.reverse_rows();
        if let Ok(f) = factor(&reversed) {
            prop_assert_eq!(f.lower().mul(&f.upper()), reversed.densify());
        }
    }

    #[test]
    fn symbolic_rescue_matches_oracle(seed in any::<u64>(), n in 5usize..=20) {
        let (sys, planted) = zero_lead_system(seed, n, 9);
        match (solve_symbolic(&sys), dense_solve(&sys.densify(), sys.y())) {
            (Ok(r), Ok(x)) => {
                prop_assert_eq!(&r.x, &x);
                prop_assert_eq!(&r.x, &planted);
                prop_assert_eq!(r.det, dense_det(&sys.reverse_rows().densify()));
            }
            (Err(_), Err(_)) => {}
            (got, want) => prop_assert!(false, "symbolic {:?} vs oracle {:?}", got, want),
        }
    }

    #[test]
    fn symbolic_equals_exact_without_zero_pivots(sys in exact_system(15)) {
        if let Ok(exact) = solve(&sys) {
            let sym = solve_symbolic(&sys).unwrap();
            prop_assert!(sym.pivot_replacements.is_empty());
            prop_assert_eq!(sym.x, exact.x);
            prop_assert_eq!(sym.det, exact.det);
        }
    }

    #[test]
    fn dense_round_trip(seed in any::<u64>(), n in 1usize..=8, v in prop::collection::vec(-9i64..=9, 8)) {
        let sys = generate::<BigRational>(&GeneratorConfig::new(seed, 8, 9)).system;
        let full = sys.densify();
        // Leading n×n block of a random banded matrix.
        let rows: Vec<Vec<BigRational>> = (0..n).map(|r| full.row(r)[..n].to_vec()).collect();
        let m = DenseMatrix::from_rows(&rows);
        let v = ints(&v[..n]);
        if !dense_det(&m).is_zero() {
            prop_assert_eq!(dense_solve(&m, &m.mul_vec(&v)).unwrap(), v);
        }
    }

    #[test]
    fn file_round_trip(sys in exact_system(15)) {
        let text = write_system(&sys, &["round trip"]);
        prop_assert_eq!(parse_system(&text).unwrap(), sys);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_ops_commute_with_evaluation(f in rational_function(), g in rational_function(), t in small_rational()) {
        let (Ok(ft), Ok(gt)) = (f.eval(&t), g.eval(&t)) else { return Ok(()) };
        prop_assert_eq!((&f + &g).eval(&t).unwrap(), &ft + &gt);
        prop_assert_eq!((&f - &g).eval(&t).unwrap(), &ft - &gt);
        prop_assert_eq!((&f * &g).eval(&t).unwrap(), &ft * &gt);
        if !g.is_zero() && !gt.is_zero() {
            if let Ok(v) = f.checked_div(&g).unwrap().eval(&t) {
                prop_assert_eq!(v, ft / gt);
            }
        }
    }

    #[test]
    fn canonical_form_is_fixpoint(f in rational_function()) {
        let again = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(f.denominator().leading().unwrap().is_one());
        prop_assert!(poly_gcd(f.numerator(), f.denominator()).unwrap().is_one() || f.is_zero());
    }

    #[test]
    fn eval_at_zero_is_ratio_of_constant_terms(f in rational_function()) {
        let d0 = f.denominator().constant_term();
        if !d0.is_zero() {
            prop_assert_eq!(f.eval_at_zero().unwrap(), f.numerator().constant_term() / d0);
        } else {
            prop_assert!(f.eval_at_zero().is_err());
        }
    }

    #[test]
    fn gcd_recovers_planted_factor(
        common_factor in prop::collection::vec(-5i64..=5, 2..=3),
        left in prop::collection::vec(prop::collection::vec(-5i64..=5, 2..=3), 1..=2),
        right in prop::collection::vec(prop::collection::vec(-5i64..=5, 2..=3), 1..=2),
    ) {
        let planted = Polynomial::from_ints(&common_factor);
        prop_assume!(planted.degree().unwrap_or(0) >= 1);
        let product = |fs: &[Vec<i64>]| fs.iter().fold(planted.clone(), |acc, f| &acc * &Polynomial::from_ints(f));
        let (l, r) = (product(&left), product(&right));
        prop_assume!(!l.is_zero() && !r.is_zero());
        let g = poly_gcd(&l, &r).unwrap();
        // The planted factor divides the gcd, which divides both products.
        prop_assert!(g.div_rem(&planted).unwrap().1.is_zero());
        prop_assert!(l.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(r.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn rational_matches_integer_arithmetic(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000) {
        let (qa, qb) = (BigRational::from_i64(a), BigRational::from_i64(b));
        prop_assert_eq!(&qa + &qb, BigRational::from_i64(a + b));
        prop_assert_eq!(&qa - &qb, BigRational::from_i64(a - b));
        prop_assert_eq!(&qa * &qb, BigRational::from_i64(a * b));
    }
}

#[test]
fn float_residual_on_laplacian() {
    for n in [5usize, 6, 50, 500] {
        let y: Vec<f64> = (0..n).map(|i| (i as f64).sin()).collect();
        let sys = BackwardPentaSystem::<f64>::laplacian(n, y.clone()).unwrap();
        let r = solve(&sys).unwrap();
        let res = sys
            .apply(&r.x)
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(res <= 1e-8 * (1.0 + 1.0), "n={n} residual {res}");
    }
}

#[test]
fn laplacian_matches_oracle() {
    let sys = BackwardPentaSystem::<BigRational>::laplacian(6, ints(&[1; 6])).unwrap();
    let r = solve(&sys).unwrap();
    assert_eq!(r.x, dense_solve(&sys.densify(), sys.y()).unwrap());
    let float = solve(&sys.map(f64::from_rational)).unwrap();
    for (a, b) in float.x.iter().zip(&r.x) {
        assert!((a - f64::from_rational(b)).abs() < 1e-12);
    }
}

#[test]
fn generated_solve_agrees_with_oracle() {
    let mut solved = 0;
    for seed in 1..=20 {
        let g = generate::<BigRational>(&GeneratorConfig::new(seed, 10, 9));
        let Ok(r) = solve(&g.system) else { continue };
        assert_eq!(Some(r.x.clone()), g.solution);
        assert_eq!(r.x, dense_solve(&g.system.densify(), g.system.y()).unwrap());
        solved += 1;
    }
    assert!(
        solved >= 15,
        "only {solved} of 20 seeds avoided a zero pivot"
    );
}

#[test]
fn one_is_one() {
    assert!(RationalFunction::one().as_constant().unwrap().is_one());
}
