//! Trigonometric coefficient algebra: exact identities plus a float oracle
//! for products and derivatives against the textbook functions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbolic_core::{rational, ParamScalar, Rat, TrigCoeff};

fn freq(n: i64, d: i64) -> Rat {
    rational(n, d)
}

fn one() -> ParamScalar {
    ParamScalar::one()
}

#[test]
fn derivative_of_cosine_is_minus_nu_sine() {
    let nu = freq(3, 2);
    let cosw = TrigCoeff::cos(nu.clone(), one());
    let expect = TrigCoeff::sin(nu, ParamScalar::rat(-3, 2));
    assert_eq!(cosw.ddt(), expect);
}

#[test]
fn pythagoras_collapses_to_one() {
    let nu = freq(2, 5);
    let c = TrigCoeff::cos(nu.clone(), one());
    let s = TrigCoeff::sin(nu, one());
    let sum = &(&c * &c) + &(&s * &s);
    assert!(sum.is_constant());
    assert!((&sum - &TrigCoeff::one()).is_zero());
}

#[test]
fn complex_exponential_has_unit_modulus() {
    let nu = freq(1, 1);
    let i = ParamScalar::i();
    let fwd = &TrigCoeff::cos(nu.clone(), one()) + &TrigCoeff::sin(nu.clone(), i.clone());
    let bwd = &TrigCoeff::cos(nu, one()) - &TrigCoeff::sin(freq(1, 1), i);
    let prod = &fwd * &bwd;
    assert!((&prod - &TrigCoeff::one()).is_zero());
}

#[test]
fn double_angle_product_to_sum() {
    // 2 sin(t) cos(t) = sin(2t)
    let s = TrigCoeff::sin(freq(1, 1), one());
    let c = TrigCoeff::cos(freq(1, 1), one());
    let lhs = (&s * &c).scale(&ParamScalar::int(2));
    let rhs = TrigCoeff::sin(freq(2, 1), one());
    assert!((&lhs - &rhs).is_zero());
}

#[test]
fn product_oracle_against_f64_trig() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7416_0001);
    for _ in 0..200 {
        let n1 = freq(rng.gen_range(1..=5), rng.gen_range(1..=3));
        let n2 = freq(rng.gen_range(1..=5), rng.gen_range(1..=3));
        let a1 = ParamScalar::rat(rng.gen_range(-4..=4), 1);
        let b1 = ParamScalar::rat(rng.gen_range(-4..=4), 1);
        let a2 = ParamScalar::rat(rng.gen_range(-4..=4), 1);
        let b2 = ParamScalar::rat(rng.gen_range(-4..=4), 1);
        let w1 = &TrigCoeff::cos(n1.clone(), a1.clone()) + &TrigCoeff::sin(n1.clone(), b1.clone());
        let w2 = &TrigCoeff::cos(n2.clone(), a2.clone()) + &TrigCoeff::sin(n2.clone(), b2.clone());
        let prod = &w1 * &w2;
        for k in 0..5 {
            let t = 0.3 + 0.7 * k as f64;
            let lhs = prod.eval_f64(&[], t).unwrap();
            let rhs = w1.eval_f64(&[], t).unwrap() * w2.eval_f64(&[], t).unwrap();
            assert!((lhs - rhs).abs() < 1e-10, "t={t}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn derivative_oracle_against_central_difference() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7416_0002);
    for _ in 0..50 {
        let n1 = freq(rng.gen_range(1..=4), rng.gen_range(1..=2));
        let a = ParamScalar::rat(rng.gen_range(-3..=3), 1);
        let b = ParamScalar::rat(rng.gen_range(-3..=3), 1);
        let w = &TrigCoeff::cos(n1.clone(), a) + &TrigCoeff::sin(n1, b);
        let dw = w.ddt();
        for k in 0..4 {
            let t = 0.1 + 0.9 * k as f64;
            let h = 1e-5;
            let num = (w.eval_f64(&[], t + h).unwrap() - w.eval_f64(&[], t - h).unwrap())
                / (2.0 * h);
            let sym = dw.eval_f64(&[], t).unwrap();
            assert!((num - sym).abs() < 1e-6, "t={t}: {num} vs {sym}");
        }
    }
}

#[test]
fn value_at_time_zero_sums_cosine_amplitudes() {
    let w = &(&TrigCoeff::cos(freq(2, 1), ParamScalar::param("m").unwrap())
        + &TrigCoeff::sin(freq(3, 1), ParamScalar::param("kappa").unwrap()))
        + &TrigCoeff::constant(ParamScalar::int(7));
    let expect = &ParamScalar::param("m").unwrap() + &ParamScalar::int(7);
    assert_eq!(w.at_zero(), expect);
}

#[test]
fn substitution_reaches_the_amplitudes() {
    let w = TrigCoeff::cos(freq(1, 1), ParamScalar::param("m").unwrap());
    let bound = w.substitute(&[("m", rational(5, 2))]).unwrap();
    let expect = TrigCoeff::cos(freq(1, 1), ParamScalar::rat(5, 2));
    assert_eq!(bound, expect);
}
