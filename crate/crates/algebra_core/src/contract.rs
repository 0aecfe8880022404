//! İnönü-Wigner contractions: rescale a basis by powers of the
//! contraction parameter omega_c, rewrite the brackets, and keep the
//! finite part of the omega_c expansion.

use std::collections::BTreeMap;

use symbolic_core::{param_index, ParamScalar, Poly, SymbolicError};

use crate::basis::{rewrite_brackets, Matrix};
use crate::catalog::catalog_load;
use crate::error::AlgebraError;
use crate::table::{table_from_parts, BracketTable, Generator};

pub const CONTRACTION_PARAM: &str = "omega_c";

/// Substitution old = M(omega_c) * new, plus bookkeeping that the limit
/// needs: trivially central generators adjoined to the source (so the
/// matrix can mix old generators into new central charges) and parameter
/// rescalings such as R -> omega_c * R.
#[derive(Debug, Clone)]
pub struct ContractionScheme {
    pub name: String,
    pub appended_centrals: Vec<Generator>,
    pub new_generators: Vec<Generator>,
    pub rows: Matrix,
    /// (parameter, factor): every occurrence of the parameter picks up
    /// the factor, i.e. p^k is rewritten as factor^k * p^k.
    pub param_rescalings: Vec<(String, ParamScalar)>,
}

/// Rewrite `p -> factor * p` inside a scalar. Stays exact because the
/// substitution is monomial in the affected parameter.
fn rescale_param(
    scalar: &ParamScalar,
    param: &str,
    factor: &ParamScalar,
) -> Result<ParamScalar, SymbolicError> {
    let var = param_index(param)
        .ok_or_else(|| SymbolicError::UnknownParameter(param.to_string()))?;
    let apply = |poly: &Poly| -> Result<ParamScalar, SymbolicError> {
        let mut acc = ParamScalar::zero();
        for (power, coeff) in poly.coeffs_in(var) {
            let part = ParamScalar::from_parts(coeff.mul_var_pow(var, power), Poly::one())?;
            acc = &acc + &(&part * &factor.pow(i32::from(power))?);
        }
        Ok(acc)
    };
    apply(scalar.num())?.div(&apply(scalar.den())?)
}

impl ContractionScheme {
    /// Diagonal scheme: the named generators are the contracted ones
    /// (new = old / omega_c); everything else passes through unchanged.
    pub fn diagonal(name: &str, table: &BracketTable, contracted: &[&str]) -> Self {
        let omega = ParamScalar::param(CONTRACTION_PARAM).unwrap();
        let gens = table.generators().to_vec();
        let n = gens.len();
        let rows: Matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i != j {
                            ParamScalar::zero()
                        } else if contracted.contains(&gens[i].name.as_str()) {
                            omega.clone()
                        } else {
                            ParamScalar::one()
                        }
                    })
                    .collect()
            })
            .collect();
        ContractionScheme {
            name: name.to_string(),
            appended_centrals: Vec::new(),
            new_generators: gens,
            rows,
            param_rescalings: Vec::new(),
        }
    }
}

/// Contract `table` along `scheme`: adjoin the trivial centrals, rescale
/// parameters, rewrite in the new basis, and take the finite part of
/// every structure constant as omega_c -> infinity.
pub fn iw_contract(
    table: &BracketTable,
    scheme: &ContractionScheme,
) -> Result<BracketTable, AlgebraError> {
    // Source extended by trivially central generators: same brackets,
    // nothing new on any right-hand side.
    let mut extended_entries = Vec::new();
    for (&(i, j), combo) in table.raw_brackets() {
        extended_entries.push((i, j, combo.clone()));
    }
    let mut extended_gens = table.generators().to_vec();
    extended_gens.extend(scheme.appended_centrals.iter().cloned());
    let extended = table_from_parts(
        table.name().to_string(),
        table.source().to_string(),
        extended_gens,
        extended_entries,
    )?;

    // Parameter rescalings act on the source structure constants.
    let rescaled = if scheme.param_rescalings.is_empty() {
        extended
    } else {
        let mut entries = Vec::new();
        for (&(i, j), combo) in extended.raw_brackets() {
            let mapped = combo.map_coeffs(|c| {
                let mut out = c.clone();
                for (param, factor) in &scheme.param_rescalings {
                    out = rescale_param(&out, param, factor)?;
                }
                Ok(out)
            })?;
            entries.push((i, j, mapped));
        }
        table_from_parts(
            extended.name().to_string(),
            extended.source().to_string(),
            extended.generators().to_vec(),
            entries,
        )?
    };

    let raw = rewrite_brackets(&rescaled, &scheme.new_generators, &scheme.rows)?;
    let mut finite = Vec::new();
    for (a, b, combo) in raw {
        let kept = combo.map_coeffs(|c| c.laurent_finite_part(CONTRACTION_PARAM))?;
        if !kept.is_zero() {
            finite.push((a, b, kept));
        }
    }
    table_from_parts(
        format!("{} | {}", table.name(), scheme.name),
        format!("contraction of {}", table.source()),
        scheme.new_generators.clone(),
        finite,
    )
}

/// so(2,2) covariant basis onto the doubly extended Newton-Hooke basis:
/// P_0 = -omega Z - (1/omega) H, M_0i = omega K_i, M_12 = omega^2 Zt + J,
/// with the radius blown up as R -> omega R.
pub fn ads3_cov_to_enh_scheme() -> ContractionScheme {
    let w = ParamScalar::param(CONTRACTION_PARAM).unwrap();
    let w2 = w.pow(2).unwrap();
    let winv = w.recip().unwrap();
    let new: Vec<Generator> = ["H", "J", "P1", "P2", "K1", "K2", "Z", "Zt"]
        .iter()
        .map(|n| Generator::even(n))
        .collect();
    // Rows: P0, P1, P2, M01, M02, M12, C1, C2 over the new basis.
    let mut rows = vec![vec![ParamScalar::zero(); 8]; 8];
    rows[0][0] = -&winv; // P0 -> -(1/w) H
    rows[0][6] = -&w; //          - w Z
    rows[1][2] = ParamScalar::one();
    rows[2][3] = ParamScalar::one();
    rows[3][4] = w.clone(); // M01 -> w K1
    rows[4][5] = w.clone();
    rows[5][1] = ParamScalar::one(); // M12 -> J + w^2 Zt
    rows[5][7] = w2;
    rows[6][6] = ParamScalar::one(); // trivial central C1 -> Z
    rows[7][7] = ParamScalar::one(); // trivial central C2 -> Zt
    ContractionScheme {
        name: "flat-limit to exotic Newton-Hooke".to_string(),
        appended_centrals: vec![Generator::even("C1"), Generator::even("C2")],
        new_generators: new,
        rows,
        param_rescalings: vec![("R".to_string(), ParamScalar::param(CONTRACTION_PARAM).unwrap())],
    }
}

/// Chiral so(2,2) basis onto the chiral Newton-Hooke basis:
/// J(s)_0 = -omega^2 Z(s) + script-J(s), J(s)_i = omega script-J(s)_i.
pub fn ads3_chiral_to_enh_scheme() -> ContractionScheme {
    let w = ParamScalar::param(CONTRACTION_PARAM).unwrap();
    let w2 = w.pow(2).unwrap();
    let new: Vec<Generator> = ["Jp", "Jp1", "Jp2", "Jm", "Jm1", "Jm2", "Zp", "Zm"]
        .iter()
        .map(|n| Generator::even(n))
        .collect();
    // Rows: Jp0, Jp1, Jp2, Jm0, Jm1, Jm2, Cp, Cm over the new basis.
    let mut rows = vec![vec![ParamScalar::zero(); 8]; 8];
    rows[0][0] = ParamScalar::one();
    rows[0][6] = -&w2;
    rows[1][1] = w.clone();
    rows[2][2] = w.clone();
    rows[3][3] = ParamScalar::one();
    rows[3][7] = -&w2;
    rows[4][4] = w.clone();
    rows[5][5] = w.clone();
    rows[6][6] = ParamScalar::one();
    rows[7][7] = ParamScalar::one();
    ContractionScheme {
        name: "flat-limit to chiral exotic Newton-Hooke".to_string(),
        appended_centrals: vec![Generator::even("Cp"), Generator::even("Cm")],
        new_generators: new,
        rows,
        param_rescalings: Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ContractionKind {
    VelocitySpace,
    VelocityTime,
    SpaceTime,
    General,
}

impl ContractionKind {
    pub fn label(self) -> &'static str {
        match self {
            ContractionKind::VelocitySpace => "velocity-space",
            ContractionKind::VelocityTime => "velocity-time",
            ContractionKind::SpaceTime => "space-time",
            ContractionKind::General => "general",
        }
    }

    fn contracted(self) -> &'static [&'static str] {
        match self {
            ContractionKind::VelocitySpace => &["K1", "K2", "K3", "P1", "P2", "P3"],
            ContractionKind::VelocityTime => &["K1", "K2", "K3", "H"],
            ContractionKind::SpaceTime => &["P1", "P2", "P3", "H"],
            ContractionKind::General => &["K1", "K2", "K3", "P1", "P2", "P3", "H"],
        }
    }

    pub fn scheme_for(self, table: &BracketTable) -> ContractionScheme {
        ContractionScheme::diagonal(self.label(), table, self.contracted())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionArrow {
    pub source: String,
    pub target: String,
}

/// Load a contraction-cube vertex; the oscillator branch is pinned to
/// its +1 sign so the cube closes over concrete tables.
pub fn cube_vertex(name: &str) -> Result<BracketTable, AlgebraError> {
    let table = catalog_load(name)?;
    if name == "NHpm" {
        Ok(table.substitute_params(&[("eta", symbolic_core::rational(1, 1))])?)
    } else {
        Ok(table)
    }
}

/// Run every arrow of the kinematic contraction cube and confirm each
/// target against the catalog; the three simple rescalings map the
/// relativistic square onto the absolute-time square, and the general
/// contraction flattens every vertex onto the static group.
pub fn kinematic_contraction_suite(
) -> Result<BTreeMap<ContractionKind, Vec<ContractionArrow>>, AlgebraError> {
    let arrows: &[(ContractionKind, &[(&str, &str)])] = &[
        (
            ContractionKind::VelocitySpace,
            &[
                ("dS", "NHpm"),
                ("P", "G"),
                ("Pprime_E4", "Gprime"),
                ("Carroll", "Static"),
            ],
        ),
        (
            ContractionKind::VelocityTime,
            &[
                ("dS", "Pprime_E4"),
                ("P", "Carroll"),
                ("NHpm", "Gprime"),
                ("G", "Static"),
            ],
        ),
        (
            ContractionKind::SpaceTime,
            &[
                ("dS", "P"),
                ("Pprime_E4", "Carroll"),
                ("NHpm", "G"),
                ("Gprime", "Static"),
            ],
        ),
        (
            ContractionKind::General,
            &[
                ("dS", "Static"),
                ("P", "Static"),
                ("Pprime_E4", "Static"),
                ("Carroll", "Static"),
                ("NHpm", "Static"),
                ("G", "Static"),
                ("Gprime", "Static"),
                ("Static", "Static"),
            ],
        ),
    ];
    let mut verified = BTreeMap::new();
    for (kind, list) in arrows {
        let mut done = Vec::new();
        for &(source, target) in *list {
            let src = cube_vertex(source)?;
            let expect = cube_vertex(target)?;
            let got = iw_contract(&src, &kind.scheme_for(&src))?;
            if !got.structure_eq(&expect) {
                return Err(AlgebraError::ContractionMismatch {
                    from: source.to_string(),
                    to: target.to_string(),
                });
            }
            done.push(ContractionArrow {
                source: source.to_string(),
                target: target.to_string(),
            });
        }
        verified.insert(*kind, done);
    }
    Ok(verified)
}
