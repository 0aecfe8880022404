//! Classical Casimir verification for quadratic candidates.
//!
//! A candidate C = sum q_ab g_a g_b is checked against the Lie-Poisson
//! structure {g_a, g_b} = f^c_ab g_c built from the table: C is a Casimir
//! iff {C, g} vanishes identically for every generator g. Coordinates
//! commute here, so the check only makes sense for purely even tables.

use std::collections::BTreeMap;

use symbolic_core::ParamScalar;

use crate::error::AlgebraError;
use crate::table::BracketTable;

/// Symmetric quadratic expression in generator names. Keys are kept
/// name-sorted so q_ab and q_ba describe the same monomial.
#[derive(Debug, Clone, Default)]
pub struct QuadraticForm {
    terms: BTreeMap<(String, String), ParamScalar>,
}

impl QuadraticForm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn term(mut self, a: &str, b: &str, coeff: ParamScalar) -> Self {
        if coeff.is_zero() {
            return self;
        }
        let key = if a <= b {
            (a.to_string(), b.to_string())
        } else {
            (b.to_string(), a.to_string())
        };
        let entry = self
            .terms
            .entry(key)
            .or_insert_with(ParamScalar::zero);
        *entry = &*entry + &coeff;
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(String, String), &ParamScalar)> {
        self.terms.iter()
    }
}

#[derive(Debug, Clone)]
pub struct CasimirFailure {
    pub generator: String,
    pub residual: String,
}

#[derive(Debug, Clone)]
pub struct CasimirReport {
    pub pass: bool,
    pub failures: Vec<CasimirFailure>,
}

fn add_quad(
    acc: &mut BTreeMap<(usize, usize), ParamScalar>,
    i: usize,
    j: usize,
    value: ParamScalar,
) {
    if value.is_zero() {
        return;
    }
    let key = if i <= j { (i, j) } else { (j, i) };
    let entry = acc.entry(key).or_insert_with(ParamScalar::zero);
    *entry = &*entry + &value;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// Evaluate {C, g_c} for every generator g_c and report the residuals.
/// Residuals are rendered as quadratic expressions in generator names.
pub fn casimir_check(
    table: &BracketTable,
    form: &QuadraticForm,
) -> Result<CasimirReport, AlgebraError> {
    for g in table.generators() {
        if g.parity.is_odd() {
            return Err(AlgebraError::OddGeneratorPresent(g.name.clone()));
        }
    }
    let mut resolved: Vec<(usize, usize, ParamScalar)> = Vec::new();
    for ((a, b), q) in form.iter() {
        let ia = table.generator_index(a)?;
        let ib = table.generator_index(b)?;
        resolved.push((ia, ib, q.clone()));
    }
    let n = table.generators().len();
    let mut failures = Vec::new();
    for c in 0..n {
        let mut residual: BTreeMap<(usize, usize), ParamScalar> = BTreeMap::new();
        for (ia, ib, q) in &resolved {
            // {g_a g_b, g_c} = {g_a, g_c} g_b + g_a {g_b, g_c}
            for (k, f) in table.bracket_basis(*ia, c).iter() {
                add_quad(&mut residual, k, *ib, q * f);
            }
            for (k, f) in table.bracket_basis(*ib, c).iter() {
                add_quad(&mut residual, *ia, k, q * f);
            }
        }
        if !residual.is_empty() {
            let gens = table.generators();
            let rendered = residual
                .iter()
                .map(|((i, j), coeff)| {
                    format!("({})*{}*{}", coeff, gens[*i].name, gens[*j].name)
                })
                .collect::<Vec<_>>()
                .join(" + ");
            failures.push(CasimirFailure {
                generator: table.generators()[c].name.clone(),
                residual: rendered,
            });
        }
    }
    Ok(CasimirReport {
        pass: failures.is_empty(),
        failures,
    })
}
