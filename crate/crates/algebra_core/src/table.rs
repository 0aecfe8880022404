//! Graded bracket tables with exact parameter-dependent structure constants.
//!
//! A table stores one combo per unordered generator pair; the other order
//! is implied by graded antisymmetry [g_j,g_i] = -(-1)^{|i||j|}[g_i,g_j].
//! Diagonal entries are meaningful only for odd generators, where the
//! bracket is the anticommutator and need not vanish.

use std::collections::BTreeMap;
use std::fmt;

use symbolic_core::{ParamScalar, Rat, SymbolicError};

use crate::error::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn label(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
}

impl Generator {
    pub fn even(name: &str) -> Self {
        Generator {
            name: name.to_string(),
            parity: Parity::Even,
        }
    }

    pub fn odd(name: &str) -> Self {
        Generator {
            name: name.to_string(),
            parity: Parity::Odd,
        }
    }
}

/// A ParamScalar-weighted combination of generators, indexed into a table.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GenCombo {
    terms: BTreeMap<usize, ParamScalar>,
}

impl GenCombo {
    pub fn zero() -> Self {
        GenCombo::default()
    }

    pub fn single(idx: usize, coeff: ParamScalar) -> Self {
        let mut c = GenCombo::zero();
        c.add_term(idx, coeff);
        c
    }

    pub fn add_term(&mut self, idx: usize, coeff: ParamScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(idx, sum);
                }
            }
            None => {
                self.terms.insert(idx, coeff);
            }
        }
    }

    pub fn add(&self, other: &GenCombo) -> GenCombo {
        let mut out = self.clone();
        for (&idx, coeff) in &other.terms {
            out.add_term(idx, coeff.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &ParamScalar) -> GenCombo {
        let mut out = GenCombo::zero();
        for (&idx, coeff) in &self.terms {
            out.add_term(idx, coeff * factor);
        }
        out
    }

    pub fn neg(&self) -> GenCombo {
        self.scaled(&ParamScalar::int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ParamScalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, idx: usize) -> ParamScalar {
        self.terms.get(&idx).cloned().unwrap_or_else(ParamScalar::zero)
    }

    /// Apply `f` to every coefficient, dropping terms that map to zero.
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<GenCombo, SymbolicError>
    where
        F: FnMut(&ParamScalar) -> Result<ParamScalar, SymbolicError>,
    {
        let mut out = GenCombo::zero();
        for (&idx, coeff) in &self.terms {
            out.add_term(idx, f(coeff)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct BracketTable {
    name: String,
    source: String,
    generators: Vec<Generator>,
    index: BTreeMap<String, usize>,
    brackets: BTreeMap<(usize, usize), GenCombo>,
}

/// One failing Jacobi triple together with the leftover combination.
#[derive(Debug, Clone)]
pub struct JacobiViolation {
    pub triple: (String, String, String),
    pub residual: String,
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub pass: bool,
    pub violations: Vec<JacobiViolation>,
}

impl BracketTable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn raw_brackets(&self) -> &BTreeMap<(usize, usize), GenCombo> {
        &self.brackets
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn combo(&self, name: &str) -> Result<GenCombo, AlgebraError> {
        Ok(GenCombo::single(
            self.generator_index(name)?,
            ParamScalar::one(),
        ))
    }

    /// Bracket of two basis generators, honoring the storage convention.
    pub fn bracket_basis(&self, i: usize, j: usize) -> GenCombo {
        if i == j && !self.generators[i].parity.is_odd() {
            return GenCombo::zero();
        }
        if i <= j {
            return self.brackets.get(&(i, j)).cloned().unwrap_or_default();
        }
        let stored = self.brackets.get(&(j, i)).cloned().unwrap_or_default();
        let both_odd =
            self.generators[i].parity.is_odd() && self.generators[j].parity.is_odd();
        if both_odd {
            stored
        } else {
            stored.neg()
        }
    }

    /// Bilinear graded-antisymmetric extension of the stored table.
    pub fn bracket(&self, a: &GenCombo, b: &GenCombo) -> GenCombo {
        let mut out = GenCombo::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                let base = self.bracket_basis(i, j);
                if base.is_zero() {
                    continue;
                }
                out = out.add(&base.scaled(&(ca * cb)));
            }
        }
        out
    }

    pub fn bracket_names(&self, a: &str, b: &str) -> Result<GenCombo, AlgebraError> {
        Ok(self.bracket(&self.combo(a)?, &self.combo(b)?))
    }

    pub fn render_combo(&self, combo: &GenCombo) -> String {
        if combo.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (idx, coeff)) in combo.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let name = &self.generators[idx].name;
            if coeff.is_one() {
                out.push_str(name);
            } else {
                out.push('(');
                out.push_str(&coeff.to_string());
                out.push_str(")*");
                out.push_str(name);
            }
        }
        out
    }

    /// Graded Jacobi identity over all unordered triples (repeats included,
    /// which matters for odd generators). The bracket is graded
    /// antisymmetric by construction, so the Jacobiator of a permuted
    /// triple differs only by a sign and sorted triples cover everything.
    pub fn check_graded_jacobi(&self) -> JacobiReport {
        let n = self.generators.len();
        let mut violations = Vec::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let residual = self.jacobiator(a, b, c);
                    if !residual.is_zero() {
                        violations.push(JacobiViolation {
                            triple: (
                                self.generators[a].name.clone(),
                                self.generators[b].name.clone(),
                                self.generators[c].name.clone(),
                            ),
                            residual: self.render_combo(&residual),
                        });
                    }
                }
            }
        }
        JacobiReport {
            pass: violations.is_empty(),
            violations,
        }
    }

    /// (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]
    fn jacobiator(&self, a: usize, b: usize, c: usize) -> GenCombo {
        let sign = |x: usize, y: usize| -> ParamScalar {
            if self.generators[x].parity.is_odd() && self.generators[y].parity.is_odd() {
                ParamScalar::int(-1)
            } else {
                ParamScalar::one()
            }
        };
        let ga = GenCombo::single(a, ParamScalar::one());
        let gb = GenCombo::single(b, ParamScalar::one());
        let gc = GenCombo::single(c, ParamScalar::one());
        let t1 = self.bracket(&ga, &self.bracket_basis(b, c)).scaled(&sign(a, c));
        let t2 = self.bracket(&gb, &self.bracket_basis(c, a)).scaled(&sign(b, a));
        let t3 = self.bracket(&gc, &self.bracket_basis(a, b)).scaled(&sign(c, b));
        t1.add(&t2).add(&t3)
    }

    /// Generators whose bracket with every generator vanishes identically.
    pub fn central_elements(&self) -> Vec<Generator> {
        let n = self.generators.len();
        (0..n)
            .filter(|&k| (0..n).all(|j| self.bracket_basis(k, j).is_zero()))
            .map(|k| self.generators[k].clone())
            .collect()
    }

    /// Bind parameters to rational values in every structure constant.
    pub fn substitute_params(
        &self,
        bindings: &[(&str, Rat)],
    ) -> Result<BracketTable, SymbolicError> {
        let mut brackets = BTreeMap::new();
        for (&key, combo) in &self.brackets {
            let mapped = combo.map_coeffs(|c| c.substitute(bindings))?;
            if !mapped.is_zero() {
                brackets.insert(key, mapped);
            }
        }
        Ok(BracketTable {
            name: self.name.clone(),
            source: self.source.clone(),
            generators: self.generators.clone(),
            index: self.index.clone(),
            brackets,
        })
    }

    /// Same generators (names, parities, order) and identical brackets.
    /// Metadata is ignored: two differently named tables can present the
    /// same algebra in the same basis.
    pub fn structure_eq(&self, other: &BracketTable) -> bool {
        self.generators == other.generators && self.brackets == other.brackets
    }

    /// Copy of the table with the (a, b) entry replaced; used to inject
    /// defects that the Jacobi checker must catch.
    pub fn with_replaced_bracket(
        &self,
        a: &str,
        b: &str,
        terms: &[(ParamScalar, &str)],
    ) -> Result<BracketTable, AlgebraError> {
        let mut out = self.clone();
        let ia = self.generator_index(a)?;
        let ib = self.generator_index(b)?;
        let mut combo = GenCombo::zero();
        for (coeff, name) in terms {
            combo.add_term(self.generator_index(name)?, coeff.clone());
        }
        let (key, stored) = orient_entry(&self.generators, ia, ib, combo)?;
        if stored.is_zero() {
            out.brackets.remove(&key);
        } else {
            out.brackets.insert(key, stored);
        }
        Ok(out)
    }

    pub fn params_used(&self) -> Vec<&'static str> {
        let mut all = std::collections::BTreeSet::new();
        for combo in self.brackets.values() {
            for (_, coeff) in combo.iter() {
                all.extend(coeff.params_used());
            }
        }
        all.into_iter().collect()
    }
}

impl fmt::Display for BracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({})", self.name, self.source)?;
        for (&(i, j), combo) in &self.brackets {
            let gi = &self.generators[i];
            let gj = &self.generators[j];
            let op = if gi.parity.is_odd() && gj.parity.is_odd() {
                "{}"
            } else {
                "[]"
            };
            writeln!(
                f,
                "  {}{}, {}{} = {}",
                &op[..1],
                gi.name,
                gj.name,
                &op[1..],
                self.render_combo(combo)
            )?;
        }
        Ok(())
    }
}

/// Reorient an entry given in any order onto the stored (i <= j) key.
fn orient_entry(
    gens: &[Generator],
    ia: usize,
    ib: usize,
    combo: GenCombo,
) -> Result<((usize, usize), GenCombo), AlgebraError> {
    if ia == ib && !gens[ia].parity.is_odd() {
        // [X, X] = 0 for even X; only the zero combo is consistent.
        if combo.is_zero() {
            return Ok(((ia, ib), combo));
        }
        return Err(AlgebraError::BadSerialization(format!(
            "nonzero bracket of even generator `{}` with itself",
            gens[ia].name
        )));
    }
    if ia <= ib {
        return Ok(((ia, ib), combo));
    }
    let both_odd = gens[ia].parity.is_odd() && gens[ib].parity.is_odd();
    let stored = if both_odd { combo } else { combo.neg() };
    Ok(((ib, ia), stored))
}

/// Incremental construction used by the catalog and by tests.
pub struct TableBuilder {
    name: String,
    source: String,
    generators: Vec<Generator>,
    index: BTreeMap<String, usize>,
    brackets: BTreeMap<(usize, usize), GenCombo>,
}

impl TableBuilder {
    pub fn new(name: &str, source: &str) -> Self {
        TableBuilder {
            name: name.to_string(),
            source: source.to_string(),
            generators: Vec::new(),
            index: BTreeMap::new(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn generator(mut self, g: Generator) -> Self {
        assert!(
            !self.index.contains_key(&g.name),
            "duplicate generator `{}`",
            g.name
        );
        self.index.insert(g.name.clone(), self.generators.len());
        self.generators.push(g);
        self
    }

    pub fn even(self, name: &str) -> Self {
        self.generator(Generator::even(name))
    }

    pub fn odd(self, name: &str) -> Self {
        self.generator(Generator::odd(name))
    }

    fn idx(&self, name: &str) -> usize {
        *self
            .index
            .get(name)
            .unwrap_or_else(|| panic!("generator `{name}` not declared"))
    }

    /// Record [a, b] (or {a, b} for odd-odd) in any argument order.
    pub fn bracket(mut self, a: &str, b: &str, terms: &[(ParamScalar, &str)]) -> Self {
        let ia = self.idx(a);
        let ib = self.idx(b);
        let mut combo = GenCombo::zero();
        for (coeff, name) in terms {
            combo.add_term(self.idx(name), coeff.clone());
        }
        let (key, stored) =
            orient_entry(&self.generators, ia, ib, combo).expect("inconsistent entry");
        if stored.is_zero() {
            return self;
        }
        assert!(
            !self.brackets.contains_key(&key),
            "bracket [{a}, {b}] set twice"
        );
        self.brackets.insert(key, stored);
        self
    }

    pub fn build(self) -> BracketTable {
        BracketTable {
            name: self.name,
            source: self.source,
            generators: self.generators,
            index: self.index,
            brackets: self.brackets,
        }
    }
}

/// Assemble a table directly from indexed parts (serialization path).
pub fn table_from_parts(
    name: String,
    source: String,
    generators: Vec<Generator>,
    entries: Vec<(usize, usize, GenCombo)>,
) -> Result<BracketTable, AlgebraError> {
    let mut index = BTreeMap::new();
    for (k, g) in generators.iter().enumerate() {
        if index.insert(g.name.clone(), k).is_some() {
            return Err(AlgebraError::BadSerialization(format!(
                "duplicate generator `{}`",
                g.name
            )));
        }
    }
    let n = generators.len();
    let mut brackets = BTreeMap::new();
    for (i, j, combo) in entries {
        if i >= n || j >= n || combo.iter().any(|(k, _)| k >= n) {
            return Err(AlgebraError::BadSerialization(
                "generator index out of range".to_string(),
            ));
        }
        let (key, stored) = orient_entry(&generators, i, j, combo)?;
        if stored.is_zero() {
            continue;
        }
        if brackets.insert(key, stored).is_some() {
            return Err(AlgebraError::BadSerialization(format!(
                "bracket ({}, {}) given twice",
                key.0, key.1
            )));
        }
    }
    Ok(BracketTable {
        name,
        source,
        generators,
        index,
        brackets,
    })
}
