use symbolic_core::{parse_scalar, ParamScalar, SymbolicError};

fn p(name: &str) -> ParamScalar {
    ParamScalar::param(name).unwrap()
}

#[test]
fn literals_and_precedence() {
    assert_eq!(parse_scalar("3").unwrap(), ParamScalar::int(3));
    assert_eq!(parse_scalar("-7").unwrap(), ParamScalar::int(-7));
    assert_eq!(parse_scalar("3/2").unwrap(), ParamScalar::rat(3, 2));
    assert_eq!(
        parse_scalar("1 + 2*3").unwrap(),
        ParamScalar::int(7),
        "multiplication binds tighter than addition"
    );
    assert_eq!(
        parse_scalar("2*m^2").unwrap(),
        &(&ParamScalar::int(2) * &p("m")) * &p("m"),
        "power binds tighter than multiplication"
    );
    assert_eq!(parse_scalar("-m^2").unwrap(), -&(&p("m") * &p("m")));
    assert_eq!(
        parse_scalar("(1 + kappa)^2").unwrap(),
        (&ParamScalar::one() + &p("kappa")).pow(2).unwrap()
    );
    assert_eq!(parse_scalar("R^-1").unwrap(), p("R").recip().unwrap());
}

#[test]
fn quotients_and_reductions() {
    let q = parse_scalar("(m - kappa)/(R^2)").unwrap();
    let byhand = (&p("m") - &p("kappa")).div(&p("R").pow(2).unwrap()).unwrap();
    assert_eq!(q, byhand);

    // Square reductions fire in parsed input just as in built input.
    assert_eq!(parse_scalar("iota^2").unwrap(), ParamScalar::int(-1));
    assert_eq!(parse_scalar("eps_B^2").unwrap(), ParamScalar::one());
    assert_eq!(
        parse_scalar("s^2 + c^2").unwrap(),
        ParamScalar::one(),
        "s^2 rewrites to 1 - c^2"
    );
}

#[test]
fn rejects_malformed_and_unknown() {
    assert!(matches!(
        parse_scalar("2 +"),
        Err(SymbolicError::BadExpression(_))
    ));
    assert!(matches!(
        parse_scalar("(m"),
        Err(SymbolicError::BadExpression(_))
    ));
    assert!(matches!(
        parse_scalar("m kappa"),
        Err(SymbolicError::BadExpression(_))
    ));
    assert!(matches!(
        parse_scalar("bogus + 1"),
        Err(SymbolicError::UnknownParameter(_))
    ));
    // The denominator reduces to the zero polynomial before dividing.
    assert!(matches!(
        parse_scalar("1/(1 - eps_B^2)"),
        Err(SymbolicError::ZeroDenominator)
    ));
}

#[test]
fn display_round_trips() {
    let m = p("m");
    let kappa = p("kappa");
    let r = p("R");
    let iota = ParamScalar::i();
    let samples = vec![
        ParamScalar::zero(),
        ParamScalar::rat(-5, 3),
        m.clone(),
        -&kappa,
        &(&m * &kappa) + &ParamScalar::int(2),
        (&m - &kappa).div(&r.pow(2).unwrap()).unwrap(),
        &iota * &(&m + &r.recip().unwrap()),
        (&ParamScalar::one() + &p("eps_B"))
            .div(&(&ParamScalar::int(2) - &p("beta")))
            .unwrap(),
        &p("s") * &p("c"),
        p("eta"),
    ];
    for sample in samples {
        let text = sample.to_string();
        let back = parse_scalar(&text).unwrap();
        assert_eq!(back, sample, "round trip failed for `{text}`");
    }
}
