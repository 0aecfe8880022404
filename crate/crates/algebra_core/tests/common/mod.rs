#![allow(dead_code)]

use algebra_core::{BracketTable, GenCombo, TableBuilder};
use symbolic_core::ParamScalar;

pub fn p(name: &str) -> ParamScalar {
    ParamScalar::param(name).unwrap()
}

pub fn num(n: i64) -> ParamScalar {
    ParamScalar::int(n)
}

pub fn rat(n: i64, d: i64) -> ParamScalar {
    ParamScalar::rat(n, d)
}

pub fn iu() -> ParamScalar {
    ParamScalar::i()
}

pub fn combo_of(table: &BracketTable, terms: &[(ParamScalar, &str)]) -> GenCombo {
    let mut combo = GenCombo::zero();
    for (coeff, name) in terms {
        combo.add_term(table.generator_index(name).unwrap(), coeff.clone());
    }
    combo
}

/// Two-frequency deformation of the doubly extended table, classical
/// convention; `ap` and `am` are the dimensionless frequency factors.
/// The (ap - am) terms follow the chiral decomposition, which also
/// fixes the straightening map and the quadratic Casimirs.
pub fn two_frequency_table(ap: &ParamScalar, am: &ParamScalar) -> BracketTable {
    let r = p("R");
    let rinv = r.recip().unwrap();
    let rinv2 = rinv.pow(2).unwrap();
    let diff_r = &(ap - am) * &rinv;
    let prod_r2 = &(ap * am) * &rinv2;
    let mut b = TableBuilder::new("two_frequency", "frequency-split extended table");
    for g in ["H", "J", "P1", "P2", "K1", "K2", "Z", "Zt"] {
        b = b.even(g);
    }
    b.bracket("K1", "K2", &[(num(-1), "Zt")])
        .bracket("P1", "P2", &[(diff_r.clone(), "Z"), (-&prod_r2, "Zt")])
        .bracket("K1", "P1", &[(num(1), "Z")])
        .bracket("K2", "P2", &[(num(1), "Z")])
        .bracket("J", "K1", &[(num(1), "K2")])
        .bracket("J", "K2", &[(num(-1), "K1")])
        .bracket("J", "P1", &[(num(1), "P2")])
        .bracket("J", "P2", &[(num(-1), "P1")])
        .bracket("H", "K1", &[(num(-1), "P1"), (diff_r.clone(), "K2")])
        .bracket("H", "K2", &[(num(-1), "P2"), (-&diff_r, "K1")])
        .bracket("H", "P1", &[(prod_r2.clone(), "K1")])
        .bracket("H", "P2", &[(prod_r2, "K2")])
        .build()
}

pub fn assert_bracket(table: &BracketTable, a: &str, b: &str, expect: &[(ParamScalar, &str)]) {
    let got = table.bracket_names(a, b).unwrap();
    let want = combo_of(table, expect);
    assert!(
        got.add(&want.neg()).is_zero(),
        "[{a}, {b}] in {}: got {}, want {}",
        table.name(),
        table.render_combo(&got),
        table.render_combo(&want)
    );
}
