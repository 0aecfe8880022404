//! Finite-part extraction at large parameter, with a numeric oracle:
//! whenever the limit exists, evaluating at a huge value of the expansion
//! parameter must approach the reported finite part.

use symbolic_core::{rational, ParamScalar, SymbolicError};

fn p(name: &str) -> ParamScalar {
    ParamScalar::param(name).unwrap()
}

fn numeric_limit_check(expr: &ParamScalar, finite: &ParamScalar) {
    let big = rational(1_000_000_000, 1);
    let base = [
        ("m", rational(2, 1)),
        ("kappa", rational(3, 1)),
        ("R", rational(5, 4)),
    ];
    let mut with_wc = base.to_vec();
    with_wc.push(("omega_c", big));
    let lhs = expr.eval_f64(&with_wc).unwrap();
    let rhs = finite.eval_f64(&base).unwrap();
    assert!(
        (lhs - rhs).abs() <= 1e-6 * (1.0 + rhs.abs()),
        "limit mismatch: {lhs} vs {rhs}"
    );
}

#[test]
fn dominant_balance_keeps_the_constant_term() {
    // (wc^2 m + kappa)/wc^2 -> m
    let wc2 = p("omega_c").pow(2).unwrap();
    let expr = (&(&wc2 * &p("m")) + &p("kappa")).div(&wc2).unwrap();
    let fin = expr.laurent_finite_part("omega_c").unwrap();
    assert_eq!(fin, p("m"));
    numeric_limit_check(&expr, &fin);
}

#[test]
fn surviving_linear_term_diverges() {
    let expr = &p("omega_c") * &p("m");
    let err = expr.laurent_finite_part("omega_c").unwrap_err();
    assert_eq!(
        err,
        SymbolicError::DivergentContraction {
            param: "omega_c".into(),
            power: 1
        }
    );
}

#[test]
fn quotient_with_polynomial_part_diverges() {
    // (wc^3 + wc)/wc reduces to wc^2 + 1, so the limit blows up at order 2.
    let wc = p("omega_c");
    let expr = (&wc.pow(3).unwrap() + &wc).div(&wc).unwrap();
    let err = expr.laurent_finite_part("omega_c").unwrap_err();
    assert_eq!(
        err,
        SymbolicError::DivergentContraction {
            param: "omega_c".into(),
            power: 2
        }
    );
}

#[test]
fn balanced_quotient_divides_leading_coefficients() {
    // (m wc^2 + kappa wc + R)/(wc^2 + m wc) -> m
    let wc = p("omega_c");
    let num = &(&(&p("m") * &wc.pow(2).unwrap()) + &(&p("kappa") * &wc)) + &p("R");
    let den = &wc.pow(2).unwrap() + &(&p("m") * &wc);
    let expr = num.div(&den).unwrap();
    let fin = expr.laurent_finite_part("omega_c").unwrap();
    assert_eq!(fin, p("m"));
    numeric_limit_check(&expr, &fin);
}

#[test]
fn negative_powers_vanish_in_the_limit() {
    // kappa / wc^2 -> 0
    let expr = p("kappa").div(&p("omega_c").pow(2).unwrap()).unwrap();
    let fin = expr.laurent_finite_part("omega_c").unwrap();
    assert!(fin.is_zero());
    numeric_limit_check(&expr, &fin);
}

#[test]
fn rational_coefficients_survive_intact() {
    // (wc^2 (m^2 - kappa^2) + wc R)/(2 wc^2 m) -> (m^2 - kappa^2)/(2 m)
    let wc2 = p("omega_c").pow(2).unwrap();
    let m2k2 = &(&p("m") * &p("m")) - &(&p("kappa") * &p("kappa"));
    let num = &(&wc2 * &m2k2) + &(&p("omega_c") * &p("R"));
    let den = &(&wc2 * &p("m")) * &ParamScalar::int(2);
    let expr = num.div(&den).unwrap();
    let fin = expr.laurent_finite_part("omega_c").unwrap();
    let expected = m2k2.div(&(&p("m") * &ParamScalar::int(2))).unwrap();
    assert_eq!(fin, expected);
    numeric_limit_check(&expr, &fin);
}

#[test]
fn expression_without_the_parameter_is_its_own_limit() {
    let expr = p("kappa").div(&p("m")).unwrap();
    let fin = expr.laurent_finite_part("omega_c").unwrap();
    assert_eq!(fin, expr);
}
