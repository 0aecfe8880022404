//! Exact linear-algebra over the parameter field and basis changes.

use symbolic_core::ParamScalar;

use crate::error::AlgebraError;
use crate::table::{table_from_parts, BracketTable, GenCombo, Generator};

pub type Matrix = Vec<Vec<ParamScalar>>;

/// Gauss-Jordan inverse over the field of parameter fractions.
pub fn invert(m: &Matrix) -> Result<Matrix, AlgebraError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::DimensionMismatch {
            rows: n,
            cols: m.first().map_or(0, Vec::len),
            expect: n,
        });
    }
    let mut work = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        ParamScalar::one()
                    } else {
                        ParamScalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .ok_or(AlgebraError::SingularBasisMap)?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let lead = work[col][col].clone();
        for j in 0..n {
            work[col][j] = work[col][j].div(&lead)?;
            inv[col][j] = inv[col][j].div(&lead)?;
        }
        for row in 0..n {
            if row == col || work[row][col].is_zero() {
                continue;
            }
            let factor = work[row][col].clone();
            for j in 0..n {
                work[row][j] = &work[row][j] - &(&factor * &work[col][j]);
                inv[row][j] = &inv[row][j] - &(&factor * &inv[col][j]);
            }
        }
    }
    Ok(inv)
}

/// Invertible substitution old_i = sum_j rows[i][j] * new_j.
#[derive(Debug, Clone)]
pub struct BasisMap {
    pub new_generators: Vec<Generator>,
    pub rows: Matrix,
}

impl BasisMap {
    pub fn identity(gens: &[Generator]) -> Self {
        let n = gens.len();
        BasisMap {
            new_generators: gens.to_vec(),
            rows: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                ParamScalar::one()
                            } else {
                                ParamScalar::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// The map sending this map's new basis back onto `target`.
    pub fn inverted(&self, target: &[Generator]) -> Result<BasisMap, AlgebraError> {
        Ok(BasisMap {
            new_generators: target.to_vec(),
            rows: invert(&self.rows)?,
        })
    }
}

/// Rewrite every bracket of `old` in the basis `new_gens`, where
/// old_i = sum_j m[i][j] * new_j. Returns the indexed entries of the
/// transformed table. Coefficients may mix parities only trivially.
pub fn rewrite_brackets(
    old: &BracketTable,
    new_gens: &[Generator],
    m: &Matrix,
) -> Result<Vec<(usize, usize, GenCombo)>, AlgebraError> {
    let n = old.generators().len();
    if new_gens.len() != n || m.len() != n {
        return Err(AlgebraError::DimensionMismatch {
            rows: m.len(),
            cols: new_gens.len(),
            expect: n,
        });
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                rows: m.len(),
                cols: row.len(),
                expect: n,
            });
        }
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() && old.generators()[i].parity != new_gens[j].parity {
                return Err(AlgebraError::ParityMixedMap {
                    old: old.generators()[i].name.clone(),
                    new: new_gens[j].name.clone(),
                });
            }
        }
    }
    let minv = invert(m)?;
    // new_a as a combination of old generators.
    let new_in_old: Vec<GenCombo> = (0..n)
        .map(|a| {
            let mut c = GenCombo::zero();
            for (p, coeff) in minv[a].iter().enumerate() {
                c.add_term(p, coeff.clone());
            }
            c
        })
        .collect();
    let mut entries = Vec::new();
    for a in 0..n {
        for b in a..n {
            if a == b && !new_gens[a].parity.is_odd() {
                continue;
            }
            let in_old = old.bracket(&new_in_old[a], &new_in_old[b]);
            if in_old.is_zero() {
                continue;
            }
            // Push the result back through old_k = sum_r m[k][r] new_r.
            let mut in_new = GenCombo::zero();
            for (k, coeff) in in_old.iter() {
                for (r, entry) in m[k].iter().enumerate() {
                    if !entry.is_zero() {
                        in_new.add_term(r, coeff * entry);
                    }
                }
            }
            if !in_new.is_zero() {
                entries.push((a, b, in_new));
            }
        }
    }
    Ok(entries)
}

/// Transform `table` onto the basis described by `map`; exact, with
/// parity preserved entry by entry.
pub fn change_basis(table: &BracketTable, map: &BasisMap) -> Result<BracketTable, AlgebraError> {
    let entries = rewrite_brackets(table, &map.new_generators, &map.rows)?;
    table_from_parts(
        table.name().to_string(),
        format!("{}; rebased", table.source()),
        map.new_generators.clone(),
        entries,
    )
}
