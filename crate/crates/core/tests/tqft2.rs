mod common;

use common::*;
use num_traits::One;
use proptest::prelude::*;
use pseudotqft::exact::{Matrix, Polynomial, Rational, RationalFunction};
use pseudotqft::tqft2::*;
use pseudotqft::Execution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rf(num: &[Rational], den: &[Rational]) -> RationalFunction {
    RationalFunction::new(Polynomial::new(num.to_vec()), Polynomial::new(den.to_vec())).unwrap()
}

fn trunc(m: usize, mu: i64) -> FrobeniusAlgebra {
    FrobeniusAlgebra::truncated_polynomial(m, q(mu)).unwrap()
}

fn one_minus(l: Rational) -> Vec<Rational> {
    vec![q(1), -l]
}

/// Taylor coefficients straight from ε(hᵍ) by repeated multiplication.
fn surface_series(fa: &FrobeniusAlgebra, n: usize) -> Vec<Rational> {
    let h = fa.handle_element().unwrap().handle;
    let mut p = fa.unit().to_vec();
    let mut out = Vec::new();
    for _ in 0..n {
        out.push(fa.epsilon(&p));
        p = fa.mul(&p, &h);
    }
    out
}

fn alpha_of(fa: &FrobeniusAlgebra, n: usize) -> Vec<Rational> {
    generating_function(fa).unwrap().series(n)
}

#[test]
fn validate_examples() {
    assert!(FrobeniusAlgebra::field(q(1)).is_ok());
    for mu in [-3, 0, 1, 7] {
        assert!(trunc(2, mu).validate().is_ok());
    }
    let (s, u) = monomial_algebra(&[2]);
    let fa = FrobeniusAlgebra::new_unchecked(s, u, vec![q(1), q(0)]);
    assert_eq!(fa.validate(), Err(TqftError::NondegeneracyFailure));
}

#[test]
fn validate_reports_each_axiom() {
    let z = || vec![q(0), q(0)];
    let e = |i: usize| if i == 0 { vec![q(1), q(0)] } else { vec![q(0), q(1)] };
    // u0·u1 = u1 but u1·u0 = 0
    let noncomm = vec![vec![e(0), e(1)], vec![z(), z()]];
    let fa = FrobeniusAlgebra::new_unchecked(noncomm, e(0), vec![q(0), q(1)]);
    assert_eq!(fa.validate(), Err(TqftError::NotCommutative { i: 0, j: 1 }));

    // ℚ[Z/2] with the wrong unit
    let nonunit = vec![vec![e(0), e(1)], vec![e(1), e(0)]];
    let fa = FrobeniusAlgebra::new_unchecked(nonunit, e(1), vec![q(1), q(0)]);
    assert_eq!(fa.validate(), Err(TqftError::UnitFailure(0)));

    // (u0u0)u1 = 0 but u0(u0u1) = u1
    let nonassoc = vec![vec![e(1), e(0)], vec![e(0), z()]];
    let fa = FrobeniusAlgebra::new_unchecked(nonassoc, e(0), vec![q(1), q(0)]);
    assert_eq!(fa.validate(), Err(TqftError::NotAssociative { i: 0, j: 0, k: 1 }));

    let bad = FrobeniusAlgebra::new_unchecked(vec![vec![vec![q(1)]]], vec![q(1), q(0)], vec![q(1)]);
    assert!(matches!(bad.validate(), Err(TqftError::DimensionMismatch(_))));
}

#[test]
fn spec_json_round_trip() {
    let fa = trunc(3, 7);
    let json = serde_json::to_string(&fa.to_spec()).unwrap();
    let back: FrobeniusSpec = serde_json::from_str(&json).unwrap();
    assert_eq!(FrobeniusAlgebra::from_spec(&back).unwrap(), fa);
}

#[test]
fn dual_basis_examples() {
    let g = qq(2, 5);
    let fa = FrobeniusAlgebra::field(Rational::one() / &g).unwrap();
    assert_eq!(fa.dual_basis().unwrap(), vec![vec![g]]);

    for mu in [-2, 0, 3] {
        let d = trunc(2, mu).dual_basis().unwrap();
        assert_eq!(d, vec![vec![q(0), q(1)], vec![q(1), q(-mu)]]);
    }
}

#[test]
fn dual_basis_pairs_to_delta_on_random_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let fa = loop {
            let fa = random_frobenius(&mut rng, 3);
            if fa.dim() == 3 {
                break fa;
            }
        };
        let duals = fa.dual_basis().unwrap();
        for i in 0..3 {
            let ui: Vec<Rational> = (0..3).map(|k| if k == i { q(1) } else { q(0) }).collect();
            for (j, v) in duals.iter().enumerate() {
                let want = if i == j { q(1) } else { q(0) };
                assert_eq!(fa.epsilon(&fa.mul(&ui, v)), want);
            }
        }
    }
}

#[test]
fn handle_examples() {
    for m in 2..=5 {
        let h = trunc(m, 4).handle_element().unwrap().handle;
        let mut want = vec![q(0); m];
        want[m - 1] = q(m as i64);
        assert_eq!(h, want);
    }
    let g = qq(-3, 2);
    let fa = FrobeniusAlgebra::field(Rational::one() / &g).unwrap();
    assert_eq!(fa.handle_element().unwrap().handle, vec![g]);

    let one = FrobeniusAlgebra::field(q(1)).unwrap();
    let hd = one.direct_product(&one).handle_element().unwrap();
    assert_eq!(hd.handle, vec![q(1), q(1)]);
    assert_eq!(hd.mult_matrix, Matrix::identity(2));
}

#[test]
fn surface_eval_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let fa = random_frobenius(&mut rng, 4);
        assert_eq!(fa.surface_eval(0).unwrap(), fa.epsilon(fa.unit()));
        assert_eq!(fa.surface_eval(1).unwrap(), q(fa.dim() as i64));
    }
    for mu in [-1, 0, 5] {
        assert_eq!(trunc(2, mu).surface_eval(2).unwrap(), q(0));
    }
}

#[test]
fn surface_eval_on_split_algebras_matches_closed_form() {
    // ℚᵏ with counits cᵢ has ε(hᵍ) = Σ cᵢ^{1−g}
    let cs = [q(1), qq(1, 2), q(-3)];
    let fa = cs.iter().fold(FrobeniusAlgebra::zero(), |a, c| a.direct_product(&FrobeniusAlgebra::field(c.clone()).unwrap()));
    for g in 0..8usize {
        let want: Rational = cs
            .iter()
            .map(|c| {
                let inv = Rational::one() / c;
                (0..g).fold(c.clone(), |acc, _| acc * &inv)
            })
            .sum();
        assert_eq!(fa.surface_eval(g).unwrap(), want);
    }
}

#[test]
fn genfun_examples() {
    for mu in [-4, 0, 2] {
        let z = generating_function(&trunc(3, mu)).unwrap();
        assert_eq!(z, RationalFunction::polynomial(Polynomial::new(vec![q(mu), q(3)])));
    }
    for g in [q(1), q(2), qq(-1, 3)] {
        let fa = FrobeniusAlgebra::field(Rational::one() / &g).unwrap();
        let want = rf(&[Rational::one() / &g], &one_minus(g));
        assert_eq!(generating_function(&fa).unwrap(), want);
    }
    let a = trunc(2, 5);
    let b = FrobeniusAlgebra::field(qq(1, 2)).unwrap();
    let za = generating_function(&a).unwrap();
    let zb = generating_function(&b).unwrap();
    assert_eq!(generating_function(&a.direct_product(&b)).unwrap(), za.add(&zb));
}

#[test]
fn genfun_series_matches_direct_surfaces_far_out() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..15 {
        let fa = random_frobenius(&mut rng, 4);
        let z = generating_function(&fa).unwrap();
        assert_eq!(z.series(25), surface_series(&fa, 25));
    }
}

#[test]
fn genfun_of_zero_algebra() {
    assert_eq!(generating_function(&FrobeniusAlgebra::zero()).unwrap(), RationalFunction::polynomial(Polynomial::zero()));
}

#[test]
fn classify_examples() {
    let z = RationalFunction::polynomial(Polynomial::new(vec![q(5), q(2)])).add(&rf(&[qq(1, 2)], &one_minus(q(2))));
    let cd = classify_genfun(&z).unwrap();
    assert_eq!(cd, ClassificationData::new(q(5), 2, vec![(q(2), 1)]).unwrap());

    let cd = classify_genfun(&rf(&[q(1)], &one_minus(q(1)))).unwrap();
    assert_eq!(cd, ClassificationData::new(q(0), 0, vec![(q(1), 1)]).unwrap());

    let z = RationalFunction::polynomial(Polynomial::new(vec![q(5), q(1)]));
    assert_eq!(classify_genfun(&z), Err(Reject::M1Forbidden));
}

#[test]
fn classify_rejections() {
    let p = |c: &[i64]| RationalFunction::polynomial(Polynomial::new(c.iter().map(|&x| q(x)).collect()));
    let double = rf(&[q(1)], &[q(1), q(-2), q(1)]);
    assert_eq!(classify_genfun(&double), Err(Reject::MultiplePole));
    assert_eq!(classify_genfun(&rf(&[qq(1, 3)], &one_minus(q(1)))), Err(Reject::NonIntegerMultiplicity));
    assert_eq!(classify_genfun(&rf(&[q(-1)], &one_minus(q(1)))), Err(Reject::NonIntegerMultiplicity));
    assert_eq!(classify_genfun(&p(&[0, 0, 1])), Err(Reject::PolynomialDegreeTooHigh));
    assert_eq!(classify_genfun(&p(&[3])), Err(Reject::ConstantTermMismatch));
    assert_eq!(classify_genfun(&rf(&[q(1)], &[q(1), q(0), q(1)])), Err(Reject::NonSplitDenominator));
    let shifted = rf(&[q(3)], &one_minus(q(1))).add(&p(&[1]));
    assert_eq!(classify_genfun(&shifted), Err(Reject::ConstantTermMismatch));
}

#[test]
fn classify_half_integer_slope() {
    let z = RationalFunction::polynomial(Polynomial::new(vec![q(0), qq(1, 2)]));
    assert_eq!(classify_genfun(&z), Err(Reject::NonIntegerMultiplicity));
    let z = RationalFunction::polynomial(Polynomial::new(vec![q(0), q(-2)]));
    assert_eq!(classify_genfun(&z), Err(Reject::NonIntegerMultiplicity));
}

#[test]
fn classification_data_rejects_bad_parameters() {
    assert!(ClassificationData::new(q(0), 1, vec![]).is_err());
    assert!(ClassificationData::new(q(2), 0, vec![]).is_err());
    assert!(ClassificationData::new(q(0), 0, vec![(q(1), 1), (q(1), 2)]).is_err());
    assert!(ClassificationData::new(q(0), 0, vec![(q(0), 1)]).is_err());
    assert!(ClassificationData::new(q(0), 0, vec![(q(2), 0)]).is_err());
    let cd = ClassificationData::new(q(0), 0, vec![(q(3), 1), (q(-1), 2)]).unwrap();
    assert_eq!(cd.poles, vec![(q(-1), 2), (q(3), 1)]);
    let spec = cd.to_spec();
    assert_eq!(ClassificationData::from_spec(&spec).unwrap(), cd);
}

#[test]
fn witness_examples() {
    let cd = ClassificationData::new(q(7), 3, vec![]).unwrap();
    let fa = witness_synthesis(&cd).unwrap();
    assert_eq!(fa, trunc(3, 7));
    assert_eq!(generating_function(&fa).unwrap(), RationalFunction::polynomial(Polynomial::new(vec![q(7), q(3)])));

    let cd = ClassificationData::new(q(0), 0, vec![(q(1), 2)]).unwrap();
    let fa = witness_synthesis(&cd).unwrap();
    assert_eq!(fa.dim(), 2);
    assert_eq!(fa.counit(), &[q(1), q(1)]);
    assert_eq!(generating_function(&fa).unwrap(), rf(&[q(2)], &one_minus(q(1))));

    let z = RationalFunction::polynomial(Polynomial::new(vec![q(5), q(2)])).add(&rf(&[qq(1, 2)], &one_minus(q(2))));
    let fa = witness_synthesis(&classify_genfun(&z).unwrap()).unwrap();
    assert_eq!(generating_function(&fa).unwrap(), z);
}

#[test]
fn pih_check_examples() {
    let empty = PihSystem::new(vec![], Matrix::zeros(0, 0), vec![]).unwrap();
    let r = pih_check(&empty, &vec![q(0); 3]).unwrap();
    assert!(r.ok());
    assert_eq!(r.horizon, 1);

    let l = q(3);
    let s = PihSystem::new(vec![q(1)], Matrix::from_rows(vec![vec![l.clone()]]).unwrap(), vec![Rational::one() / &l]).unwrap();
    let mut alpha = vec![Rational::one() / &l];
    for n in 1..8 {
        alpha.push((1..n).fold(q(1), |a, _| a * &l));
    }
    assert!(pih_check(&s, &alpha).unwrap().ok());

    let h = mat(&[&[0, 0], &[0, 3]]);
    let s = PihSystem::new(vec![q(1), q(1)], h.clone(), vec![q(1), q(1)]).unwrap();
    let mut alpha = vec![q(2)];
    for n in 0..7 {
        alpha.push(h.pow(n).unwrap().trace());
    }
    let r = pih_check(&s, &alpha).unwrap();
    assert_eq!(r.first_violation, Some((1, Relation::Interval)));
    assert!(!r.note.is_empty());
}

#[test]
fn pih_check_errors() {
    assert!(matches!(
        PihSystem::new(vec![q(1)], Matrix::identity(2), vec![q(1), q(1)]),
        Err(TqftError::DimensionMismatch(_))
    ));
    let s = PihSystem::new(vec![q(1)], Matrix::identity(1), vec![q(1)]).unwrap();
    assert_eq!(pih_check(&s, &vec![q(1); 4]), Err(TqftError::SequenceTooShort { needed: 5, len: 4 }));
}

#[test]
fn pih_check_detects_circle_violation() {
    let s = PihSystem::new(vec![q(1)], Matrix::identity(1), vec![q(1)]).unwrap();
    let r = pih_check(&s, &[q(1), q(2), q(1), q(1), q(1)]).unwrap();
    assert_eq!(r.first_violation, Some((0, Relation::Circle)));
}

#[test]
fn pih_check_accepts_frobenius_data() {
    // p = ε, h = M_h, ι = 1 realizes the surface sequence
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let fa = random_frobenius(&mut rng, 4);
        let hd = fa.handle_element().unwrap();
        let s = PihSystem::new(fa.counit().to_vec(), hd.mult_matrix, fa.unit().to_vec()).unwrap();
        assert!(pih_check(&s, &alpha_of(&fa, 2 * fa.dim() + 3)).unwrap().ok());
    }
}

#[test]
fn pih_solve_examples() {
    let sys = pih_solve(&[Block { lambda: q(1), n: 2, m: 2 }]).unwrap();
    assert_eq!(sys.t, mat(&[&[1, 2], &[1, 3]]));
    assert_eq!(sys.r, vec![q(2), q(2)]);
    assert_eq!(sys.gamma, vec![q(2), q(0)]);
    assert_eq!(sys.alpha1_forced, q(2));
    assert_eq!(sys.alpha1_required, q(3));
    assert_eq!(sys.verdict, Verdict::Inconsistent);

    let blocks = [Block { lambda: q(2), n: 1, m: 1 }, Block { lambda: qq(-1, 3), n: 1, m: 3 }];
    let sys = pih_solve(&blocks).unwrap();
    assert_eq!(sys.gamma, vec![qq(1, 2), q(-9)]);
    assert_eq!(sys.verdict, Verdict::Inconsistent);
}

#[test]
fn pih_solve_rejects_bad_blocks() {
    assert!(matches!(pih_solve(&[]), Err(TqftError::InvalidBlocks(_))));
    assert!(matches!(pih_solve(&[Block { lambda: q(0), n: 1, m: 1 }]), Err(TqftError::InvalidBlocks(_))));
    assert!(matches!(pih_solve(&[Block { lambda: q(1), n: 2, m: 1 }]), Err(TqftError::InvalidBlocks(_))));
    let dup = [Block { lambda: q(1), n: 1, m: 1 }, Block { lambda: q(1), n: 1, m: 1 }];
    assert!(matches!(pih_solve(&dup), Err(TqftError::InvalidBlocks(_))));
}

#[test]
fn confluent_matrix_matches_derivative_construction() {
    let blocks = [Block { lambda: q(2), n: 3, m: 3 }, Block { lambda: qq(-1, 2), n: 2, m: 4 }];
    assert_eq!(confluent_matrix(&blocks).unwrap(), derivative_matrix(&blocks));
}

#[test]
fn det_examples() {
    for (l, n) in [(q(2), 1), (q(3), 2), (qq(1, 2), 3), (q(-1), 4)] {
        let (det, u) = confluent_vandermonde_det(&[Block { lambda: l.clone(), n, m: n }]).unwrap();
        assert_eq!(det, (0..2 * n).fold(q(1), |a, _| a * &l));
        assert_eq!(u, q(1));
    }
    let (l1, l2) = (q(2), qq(-1, 3));
    let blocks = [Block { lambda: l1.clone(), n: 1, m: 1 }, Block { lambda: l2.clone(), n: 1, m: 1 }];
    let (det, u) = confluent_vandermonde_det(&blocks).unwrap();
    let sq = |x: &Rational| x * x;
    assert_eq!(det, sq(&l1) * sq(&l2) * (&l2 - &l1));
    assert!(u == q(1) || u == q(-1));
}

#[test]
fn f1_pullback_examples() {
    let alpha: Vec<Rational> = (0..6).map(|i| q(10 + i)).collect();
    assert_eq!(f1_pullback(&alpha, &[DottedComponent::Interval(0)]).unwrap(), q(10));
    assert_eq!(f1_pullback(&alpha, &[DottedComponent::Circle(0)]).unwrap(), q(11));
    assert_eq!(
        f1_pullback(&alpha, &[DottedComponent::Circle(2), DottedComponent::Interval(1)]).unwrap(),
        q(13) * q(11)
    );
    assert_eq!(f1_pullback(&alpha, &[]).unwrap(), q(1));
    assert_eq!(
        f1_pullback(&alpha, &[DottedComponent::Circle(5)]),
        Err(TqftError::SequenceTooShort { needed: 7, len: 6 })
    );
}

#[test]
fn cob2_check_examples() {
    let ones = vec![q(1); 12];
    let r = cob2_pseudochar_check(&ones, 1, 2, Execution::default()).unwrap();
    assert!(r.witness.is_none());
    assert!(r.consistent);
    assert_eq!(r.classification, Some(Ok(ClassificationData::new(q(0), 0, vec![(q(1), 1)]).unwrap())));

    let mut m1 = vec![q(5), q(1)];
    m1.resize(12, q(0));
    let r = cob2_pseudochar_check(&m1, 1, 2, Execution::default()).unwrap();
    assert!(r.witness.is_some());
    assert_eq!(r.classification, Some(Err(Reject::M1Forbidden)));
    assert!(r.consistent);
}

#[test]
fn cob2_check_on_frobenius_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..6 {
        let fa = random_block_frobenius(&mut rng, 3);
        let d = fa.dim();
        let alpha = alpha_of(&fa, 4 * (d + 2) + 2);
        let r = cob2_pseudochar_check(&alpha, d, 2, Execution::default()).unwrap();
        assert!(r.witness.is_none(), "dim {d}: {:?}", r.witness);
        assert!(r.consistent);
        let below = cob2_pseudochar_check(&alpha, d - 1, 0, Execution::default()).unwrap();
        assert!(below.witness.is_some());
    }
}

#[test]
fn cob2_check_sequence_too_short() {
    assert_eq!(
        cob2_pseudochar_check(&vec![q(1); 5], 1, 2, Execution::Sequential),
        Err(TqftError::SequenceTooShort { needed: 7, len: 5 })
    );
}

#[test]
fn cob2_check_sequential_and_parallel_agree() {
    let mut alpha = vec![q(2), q(1), q(3)];
    alpha.resize(16, q(0));
    let a = cob2_pseudochar_check(&alpha, 2, 3, Execution::Sequential).unwrap();
    let b = cob2_pseudochar_check(&alpha, 2, 3, Execution::Parallel).unwrap();
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn handle_and_trace_formulas_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fa = random_frobenius(&mut rng, 4);
        let hd = fa.handle_element().unwrap();
        let direct = surface_series(&fa, 11);
        for g in 1..=10 {
            prop_assert_eq!(&direct[g], &hd.mult_matrix.pow(g - 1).unwrap().trace());
            prop_assert_eq!(&fa.surface_eval(g).unwrap(), &direct[g]);
        }
        prop_assert_eq!(&direct[1], &q(fa.dim() as i64));
    }

    #[test]
    fn handle_is_basis_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fa = random_block_frobenius(&mut rng, 4);
        let p = random_invertible(&mut rng, fa.dim());
        let moved = change_basis(&fa, &p);
        let h = fa.handle_element().unwrap().handle;
        let want = p.inverse().unwrap().mul_vec(&h).unwrap();
        prop_assert_eq!(moved.handle_element().unwrap().handle, want);
        prop_assert_eq!(generating_function(&moved).unwrap(), generating_function(&fa).unwrap());
    }

    #[test]
    fn torus_coefficient_is_dimension(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fa = random_frobenius(&mut rng, 4);
        prop_assert_eq!(&generating_function(&fa).unwrap().series(2)[1], &q(fa.dim() as i64));
    }

    #[test]
    fn genfun_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_frobenius(&mut rng, 3);
        let b = random_frobenius(&mut rng, 3);
        let sum = generating_function(&a).unwrap().add(&generating_function(&b).unwrap());
        prop_assert_eq!(generating_function(&a.direct_product(&b)).unwrap(), sum);
    }

    #[test]
    fn classification_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cd = random_classification(&mut rng);
        let fa = witness_synthesis(&cd).unwrap();
        let z = generating_function(&fa).unwrap();
        prop_assert_eq!(&z, &cd.assemble());
        let back = classify_genfun(&z).unwrap();
        prop_assert_eq!(&back, &cd);
        prop_assert_eq!(generating_function(&witness_synthesis(&back).unwrap()).unwrap(), z);
    }

    #[test]
    fn m1_functions_are_rejected(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cd = random_classification(&mut rng);
        cd.m = 1;
        cd.mu = random_rational(&mut rng, 5, 3);
        prop_assert_eq!(classify_genfun(&cd.assemble()), Err(Reject::M1Forbidden));
    }

    #[test]
    fn accepted_data_pass_the_cob2_check(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cd = loop {
            let cd = random_classification(&mut rng);
            if cd.dimension() <= 3 {
                break cd;
            }
        };
        let d = cd.dimension() as usize;
        let alpha = cd.assemble().series((d + 1) * 3 + 1);
        let r = cob2_pseudochar_check(&alpha, d, 2, Execution::default()).unwrap();
        prop_assert!(r.witness.is_none());
    }

    #[test]
    fn m1_sequences_have_witnesses(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cd = loop {
            let cd = random_classification(&mut rng);
            if cd.poles.iter().map(|p| p.1).sum::<u64>() <= 2 {
                break cd;
            }
        };
        cd.m = 1;
        cd.mu = random_rational(&mut rng, 5, 3);
        let d = cd.dimension() as usize;
        let alpha = cd.assemble().series((d + 1) * 3 + 1);
        let r = cob2_pseudochar_check(&alpha, d, 2, Execution::default()).unwrap();
        prop_assert!(r.witness.is_some());
    }

    #[test]
    fn confluent_unit_is_a_sign(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pool = [q(1), q(2), q(3), q(-1), qq(1, 2)];
        let mut blocks: Vec<Block> = Vec::new();
        let mut total = 0;
        for l in pool {
            if rng.gen_bool(0.5) {
                let n = rng.gen_range(1..=2);
                if total + n <= 5 {
                    total += n;
                    blocks.push(Block { lambda: l, n, m: n + rng.gen_range(0..=1) });
                }
            }
        }
        prop_assume!(!blocks.is_empty());
        let (det, u) = confluent_vandermonde_det(&blocks).unwrap();
        prop_assert_eq!(&det, &leibniz_det(&derivative_matrix(&blocks)));
        prop_assert!(u == q(1) || u == q(-1));
        let sys = pih_solve(&blocks).unwrap();
        prop_assert_eq!(sys.verdict, Verdict::Inconsistent);
    }
}
