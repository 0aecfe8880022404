//! The algebra catalog: every bracket table the toolkit works with.
//!
//! Quantum-style tables carry the formal imaginary unit iota in their
//! structure constants; classical (Poisson) tables omit it. The
//! 3+1-dimensional kinematic family shares one layout (H, P_i, K_i, J_i)
//! so contractions land on catalog tables verbatim.

use symbolic_core::ParamScalar;

use crate::error::AlgebraError;
use crate::table::{BracketTable, TableBuilder};

pub const CATALOG: &[&str] = &[
    "AdS3_cov",
    "AdS3_chiral",
    "ENH_cov",
    "ENH_chiral",
    "ENH_triple",
    "Galileo_exotic",
    "NH_3+1",
    "dS",
    "P",
    "Pprime_isoP",
    "Pprime_E4",
    "Carroll",
    "NHpm",
    "G",
    "Gprime",
    "Static",
    "E4_appendix",
    "so3_extra",
    "so21_extra",
    "NCLP_NH_super",
    "osp22_linear",
];

pub fn catalog_load(name: &str) -> Result<BracketTable, AlgebraError> {
    match name {
        "AdS3_cov" => Ok(ads3_cov()),
        "AdS3_chiral" => Ok(ads3_chiral()),
        "ENH_cov" => Ok(enh_cov(false)),
        "ENH_triple" => Ok(enh_cov(true)),
        "ENH_chiral" => Ok(enh_chiral()),
        "Galileo_exotic" => Ok(galileo_exotic()),
        "NH_3+1" => Ok(kinematic_table(
            "NH_3+1",
            "Newton-Hooke NH- in 3+1 dimensions",
            inv_r2(),
            num(-1),
            num(0),
            num(0),
            num(0),
        )),
        "dS" => Ok(kinematic_table(
            "dS",
            "de Sitter so(4,1), kinematic basis",
            num(1),
            num(1),
            num(1),
            num(-1),
            num(1),
        )),
        "P" => Ok(kinematic_table(
            "P",
            "Poincare iso(3,1)",
            num(0),
            num(1),
            num(0),
            num(-1),
            num(1),
        )),
        "Pprime_isoP" => Ok(kinematic_table(
            "Pprime_isoP",
            "para-Poincare",
            num(-1),
            num(0),
            num(-1),
            num(0),
            num(1),
        )),
        "Pprime_E4" => Ok(kinematic_table(
            "Pprime_E4",
            "inhomogeneous so(4)",
            num(1),
            num(0),
            num(1),
            num(0),
            num(1),
        )),
        "Carroll" => Ok(kinematic_table(
            "Carroll",
            "Carroll group",
            num(0),
            num(0),
            num(0),
            num(0),
            num(1),
        )),
        "NHpm" => Ok(kinematic_table(
            "NHpm",
            "Newton-Hooke pair; eta = +1 expanding, -1 oscillating",
            p("eta"),
            num(1),
            num(0),
            num(0),
            num(0),
        )),
        "G" => Ok(kinematic_table(
            "G",
            "Galilei group",
            num(0),
            num(1),
            num(0),
            num(0),
            num(0),
        )),
        "Gprime" => Ok(kinematic_table(
            "Gprime",
            "para-Galilei group",
            num(1),
            num(0),
            num(0),
            num(0),
            num(0),
        )),
        "Static" => Ok(kinematic_table(
            "Static",
            "static group; the slot [P,K] admits a central extension",
            num(0),
            num(0),
            num(0),
            num(0),
            num(0),
        )),
        "E4_appendix" => Ok(kinematic_table(
            "E4_appendix",
            "euclidean e(4) reduced to kinematic names",
            num(1),
            num(0),
            num(1),
            num(0),
            num(1),
        )),
        "so3_extra" => Ok(so_extra("so3_extra", "hidden so(3), subcritical", 1)),
        "so21_extra" => Ok(so_extra("so21_extra", "hidden so(2,1), supercritical", -1)),
        "NCLP_NH_super" => Ok(nclp_nh_super()),
        "osp22_linear" => Ok(osp22_linear()),
        other => Err(AlgebraError::UnknownAlgebra(other.to_string())),
    }
}

fn num(n: i64) -> ParamScalar {
    ParamScalar::int(n)
}

fn p(name: &str) -> ParamScalar {
    ParamScalar::param(name).unwrap()
}

fn iota() -> ParamScalar {
    ParamScalar::i()
}

fn inv_r2() -> ParamScalar {
    p("R").pow(-2).unwrap()
}

fn eps3(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// 3+1 kinematic layout: [H,P_i] = hp K_i, [H,K_i] = hk P_i,
/// [P_i,P_j] = pp eps_ijk J_k, [K_i,K_j] = kk eps_ijk J_k,
/// [P_i,K_j] = pk delta_ij H, plus so(3) isotropy. Classical style.
fn kinematic_table(
    name: &str,
    source: &str,
    hp: ParamScalar,
    hk: ParamScalar,
    pp: ParamScalar,
    kk: ParamScalar,
    pk: ParamScalar,
) -> BracketTable {
    let mut b = TableBuilder::new(name, source);
    for g in [
        "H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3",
    ] {
        b = b.even(g);
    }
    let names = |fam: &str, i: usize| format!("{fam}{i}");
    // Isotropy: J rotates J, P, K as 3-vectors.
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                let sign = eps3(i, j, k);
                if sign == 0 {
                    continue;
                }
                if i < j {
                    b = b.bracket(
                        &names("J", i),
                        &names("J", j),
                        &[(num(sign), &names("J", k))],
                    );
                }
                for fam in ["P", "K"] {
                    b = b.bracket(
                        &names("J", i),
                        &names(fam, j),
                        &[(num(sign), &names(fam, k))],
                    );
                }
            }
        }
    }
    for i in 1..=3 {
        if !hp.is_zero() {
            b = b.bracket("H", &names("P", i), &[(hp.clone(), &names("K", i))]);
        }
        if !hk.is_zero() {
            b = b.bracket("H", &names("K", i), &[(hk.clone(), &names("P", i))]);
        }
        if !pk.is_zero() {
            b = b.bracket(&names("P", i), &names("K", i), &[(pk.clone(), "H")]);
        }
        for j in (i + 1)..=3 {
            let k = 6 - i - j;
            let sign = eps3(i, j, k);
            if !pp.is_zero() {
                b = b.bracket(
                    &names("P", i),
                    &names("P", j),
                    &[(&pp * &num(sign), &names("J", k))],
                );
            }
            if !kk.is_zero() {
                b = b.bracket(
                    &names("K", i),
                    &names("K", j),
                    &[(&kk * &num(sign), &names("J", k))],
                );
            }
        }
    }
    b.build()
}

/// so(2,2) in the covariant 2+1 basis (P_mu, M_munu), radius R.
fn ads3_cov() -> BracketTable {
    let i = iota();
    let r2 = inv_r2();
    let mut b = TableBuilder::new("AdS3_cov", "anti-de Sitter so(2,2), covariant basis");
    for g in ["P0", "P1", "P2", "M01", "M02", "M12"] {
        b = b.even(g);
    }
    b = b
        .bracket("P0", "M01", &[(i.clone(), "P1")])
        .bracket("P0", "M02", &[(i.clone(), "P2")])
        .bracket("P0", "P1", &[(-&(&i * &r2), "M01")])
        .bracket("P0", "P2", &[(-&(&i * &r2), "M02")])
        .bracket("M12", "P1", &[(i.clone(), "P2")])
        .bracket("M12", "P2", &[(-&i, "P1")])
        .bracket("M12", "M01", &[(i.clone(), "M02")])
        .bracket("M12", "M02", &[(-&i, "M01")])
        .bracket("M01", "P1", &[(-&i, "P0")])
        .bracket("M02", "P2", &[(-&i, "P0")])
        .bracket("M01", "M02", &[(-&i, "M12")])
        .bracket("P1", "P2", &[(-&(&i * &r2), "M12")]);
    b.build()
}

/// so(2,2) split into two chiral so(2,1) copies.
fn ads3_chiral() -> BracketTable {
    let i = iota();
    let mut b = TableBuilder::new("AdS3_chiral", "so(2,2) as two chiral so(2,1) copies");
    for g in ["Jp0", "Jp1", "Jp2", "Jm0", "Jm1", "Jm2"] {
        b = b.even(g);
    }
    for s in ["Jp", "Jm"] {
        b = b
            .bracket(&format!("{s}0"), &format!("{s}1"), &[(i.clone(), &format!("{s}2"))])
            .bracket(&format!("{s}1"), &format!("{s}2"), &[(-&i, &format!("{s}0"))])
            .bracket(&format!("{s}2"), &format!("{s}0"), &[(i.clone(), &format!("{s}1"))]);
    }
    b.build()
}

/// Doubly (or, with `triple`, triply) centrally extended Newton-Hooke
/// in 2+1 dimensions, covariant basis.
fn enh_cov(triple: bool) -> BracketTable {
    let i = iota();
    let r2 = inv_r2();
    let (name, source) = if triple {
        ("ENH_triple", "exotic Newton-Hooke with the third central extension")
    } else {
        ("ENH_cov", "exotic Newton-Hooke, covariant basis")
    };
    let mut b = TableBuilder::new(name, source);
    for g in ["H", "J", "P1", "P2", "K1", "K2", "Z", "Zt"] {
        b = b.even(g);
    }
    if triple {
        b = b.even("Ztt");
        // The third extension enters without the imaginary unit, exactly
        // as the source equation is written.
        b = b.bracket("H", "J", &[(num(1), "Ztt")]);
    }
    b = b
        .bracket("H", "K1", &[(-&i, "P1")])
        .bracket("H", "K2", &[(-&i, "P2")])
        .bracket("H", "P1", &[(&i * &r2, "K1")])
        .bracket("H", "P2", &[(&i * &r2, "K2")])
        .bracket("J", "P1", &[(i.clone(), "P2")])
        .bracket("J", "P2", &[(-&i, "P1")])
        .bracket("J", "K1", &[(i.clone(), "K2")])
        .bracket("J", "K2", &[(-&i, "K1")])
        .bracket("K1", "P1", &[(i.clone(), "Z")])
        .bracket("K2", "P2", &[(i.clone(), "Z")])
        .bracket("K1", "K2", &[(-&i, "Zt")])
        .bracket("P1", "P2", &[(-&(&i * &r2), "Zt")]);
    b.build()
}

/// Exotic Newton-Hooke in the chiral basis: two uncoupled extended
/// planar rotation algebras.
fn enh_chiral() -> BracketTable {
    let i = iota();
    let mut b = TableBuilder::new("ENH_chiral", "exotic Newton-Hooke, chiral basis");
    for g in ["Jp", "Jp1", "Jp2", "Jm", "Jm1", "Jm2", "Zp", "Zm"] {
        b = b.even(g);
    }
    for s in ["Jp", "Jm"] {
        let z = if s == "Jp" { "Zp" } else { "Zm" };
        b = b
            .bracket(&format!("{s}1"), &format!("{s}2"), &[(i.clone(), z)])
            .bracket(s, &format!("{s}1"), &[(i.clone(), &format!("{s}2"))])
            .bracket(s, &format!("{s}2"), &[(-&i, &format!("{s}1"))]);
    }
    b.build()
}

/// Planar Galilei group with both exotic central charges (m and kappa),
/// with the rotation-sector extension already set to zero.
fn galileo_exotic() -> BracketTable {
    let i = iota();
    let m = p("m");
    let kappa = p("kappa");
    let mut b = TableBuilder::new(
        "Galileo_exotic",
        "doubly centrally extended planar Galilei group",
    );
    for g in ["H", "P1", "P2", "K1", "K2", "J", "I"] {
        b = b.even(g);
    }
    b = b
        .bracket("K1", "H", &[(i.clone(), "P1")])
        .bracket("K2", "H", &[(i.clone(), "P2")])
        .bracket("J", "P1", &[(i.clone(), "P2")])
        .bracket("J", "P2", &[(-&i, "P1")])
        .bracket("J", "K1", &[(i.clone(), "K2")])
        .bracket("J", "K2", &[(-&i, "K1")])
        .bracket("P1", "K1", &[(-&(&i * &m), "I")])
        .bracket("P2", "K2", &[(-&(&i * &m), "I")])
        .bracket("K1", "K2", &[(&i * &kappa, "I")]);
    b.build()
}

/// Hidden rotational sector of the anisotropic oscillator: so(3) for the
/// subcritical phase, so(2,1) for the supercritical one.
fn so_extra(name: &str, source: &str, sign: i64) -> BracketTable {
    let mut b = TableBuilder::new(name, source);
    for g in ["I1", "I2", "I3"] {
        b = b.even(g);
    }
    b = b
        .bracket("I1", "I2", &[(num(sign), "I3")])
        .bracket("I2", "I3", &[(num(1), "I1")])
        .bracket("I3", "I1", &[(num(1), "I2")]);
    b.build()
}

/// Super-extended Newton-Hooke symmetry of the spinning noncommutative
/// Landau problem: translations, boosts, H, J, two supercharges and the
/// odd vector Sigma, centrally extended by C and Ct.
fn nclp_nh_super() -> BracketTable {
    let i = iota();
    let w = p("omega");
    let iw = &i * &w;
    let mut b = TableBuilder::new(
        "NCLP_NH_super",
        "super Newton-Hooke of the noncommutative Landau problem",
    );
    for g in ["H", "J", "P1", "P2", "K1", "K2", "C", "Ct"] {
        b = b.even(g);
    }
    for g in ["Q1", "Q2", "Sigma1", "Sigma2"] {
        b = b.odd(g);
    }
    b = b
        .bracket("K1", "K2", &[(-&i, "Ct")])
        .bracket("K1", "P1", &[(i.clone(), "C")])
        .bracket("K2", "P2", &[(i.clone(), "C")])
        .bracket("P1", "P2", &[(-&iw, "C")])
        .bracket("K1", "H", &[(i.clone(), "P1"), (iw.clone(), "K2")])
        .bracket("K2", "H", &[(i.clone(), "P2"), (-&iw, "K1")])
        .bracket("J", "P1", &[(i.clone(), "P2")])
        .bracket("J", "P2", &[(-&i, "P1")])
        .bracket("J", "K1", &[(i.clone(), "K2")])
        .bracket("J", "K2", &[(-&i, "K1")])
        .bracket("Q1", "Q1", &[(num(2), "H")])
        .bracket("Q2", "Q2", &[(num(2), "H")])
        .bracket("K1", "Q1", &[(i.clone(), "Sigma1")])
        .bracket("K2", "Q1", &[(i.clone(), "Sigma2")])
        .bracket("K1", "Q2", &[(i.clone(), "Sigma2")])
        .bracket("K2", "Q2", &[(-&i, "Sigma1")])
        .bracket("J", "Sigma1", &[(i.clone(), "Sigma2")])
        .bracket("J", "Sigma2", &[(-&i, "Sigma1")])
        .bracket("Sigma1", "Sigma1", &[(num(1), "C"), (-&w, "Ct")])
        .bracket("Sigma2", "Sigma2", &[(num(1), "C"), (-&w, "Ct")])
        .bracket("Sigma1", "H", &[(iw.clone(), "Sigma2")])
        .bracket("Sigma2", "H", &[(-&iw, "Sigma1")])
        .bracket("Sigma1", "Q1", &[(num(1), "P1"), (w.clone(), "K2")])
        .bracket("Sigma2", "Q1", &[(num(1), "P2"), (-&w, "K1")])
        .bracket("Sigma1", "Q2", &[(num(-1), "P2"), (w.clone(), "K1")])
        .bracket("Sigma2", "Q2", &[(num(1), "P1"), (w.clone(), "K2")]);
    b.build()
}

/// The linearized superconformal algebra of the subcritical phase:
/// centrally extended osp(2|2) plus the odd vector Sigma and the even
/// vectors E+-, with J acting as a central rotation charge. The
/// supercritical-regulator sign eps_B stays symbolic; the subcritical
/// phase fixes the other sign to +1.
fn osp22_linear() -> BracketTable {
    let i = iota();
    let e = p("eps_B");
    let half_i = &i * &ParamScalar::rat(1, 2);
    let half_ie = &half_i * &e;
    let two_e = &num(2) * &e;
    let mut b = TableBuilder::new(
        "osp22_linear",
        "superconformal osp(2|2) sector of the subcritical phase",
    );
    for g in ["J0", "J1", "J2", "J", "S3", "Ep1", "Ep2", "Em1", "Em2", "C"] {
        b = b.even(g);
    }
    for g in ["Qp1", "Qp2", "Qm1", "Qm2", "Sigma1", "Sigma2"] {
        b = b.odd(g);
    }
    // so(2,1) sector.
    b = b
        .bracket("J1", "J2", &[(-&i, "J0")])
        .bracket("J2", "J0", &[(i.clone(), "J1")])
        .bracket("J0", "J1", &[(i.clone(), "J2")]);
    // Supercharge anticommutators.
    b = b
        .bracket("Qp1", "Qp1", &[(two_e.clone(), "J0"), (two_e.clone(), "J1")])
        .bracket("Qp2", "Qp2", &[(two_e.clone(), "J0"), (two_e.clone(), "J1")])
        .bracket("Qm1", "Qm1", &[(two_e.clone(), "J0"), (-&two_e, "J1")])
        .bracket("Qm2", "Qm2", &[(two_e.clone(), "J0"), (-&two_e, "J1")])
        .bracket("Qp1", "Qm1", &[(two_e.clone(), "J2")])
        .bracket("Qp2", "Qm2", &[(two_e.clone(), "J2")])
        .bracket("Qp1", "Qm2", &[(e.clone(), "J"), (e.clone(), "S3")])
        .bracket("Qp2", "Qm1", &[(-&e, "J"), (-&e, "S3")]);
    // so(2,1) action on the supercharges.
    for a in ["1", "2"] {
        b = b
            .bracket("J1", &format!("Qp{a}"), &[(-&half_i, &format!("Qm{a}"))])
            .bracket("J1", &format!("Qm{a}"), &[(-&half_i, &format!("Qp{a}"))])
            .bracket("J2", &format!("Qp{a}"), &[(half_i.clone(), &format!("Qp{a}"))])
            .bracket("J2", &format!("Qm{a}"), &[(-&half_i, &format!("Qm{a}"))])
            .bracket("J0", &format!("Qp{a}"), &[(half_i.clone(), &format!("Qm{a}"))])
            .bracket("J0", &format!("Qm{a}"), &[(-&half_i, &format!("Qp{a}"))]);
    }
    // R-symmetry rotation of the supercharge doublets.
    b = b
        .bracket("S3", "Qp1", &[(i.clone(), "Qp2")])
        .bracket("S3", "Qp2", &[(-&i, "Qp1")])
        .bracket("S3", "Qm1", &[(i.clone(), "Qm2")])
        .bracket("S3", "Qm2", &[(-&i, "Qm1")]);
    // Even vector integrals.
    b = b
        .bracket("Ep1", "Ep2", &[(-&half_ie, "C")])
        .bracket("Em1", "Em2", &[(half_ie.clone(), "C")])
        .bracket("J0", "Ep1", &[(half_i.clone(), "Ep2")])
        .bracket("J0", "Ep2", &[(-&half_i, "Ep1")])
        .bracket("J0", "Em1", &[(-&half_i, "Em2")])
        .bracket("J0", "Em2", &[(half_i.clone(), "Em1")])
        .bracket("J", "Ep1", &[(i.clone(), "Ep2")])
        .bracket("J", "Ep2", &[(-&i, "Ep1")])
        .bracket("J", "Em1", &[(i.clone(), "Em2")])
        .bracket("J", "Em2", &[(-&i, "Em1")])
        .bracket("Ep1", "J1", &[(-&half_i, "Em2")])
        .bracket("Ep2", "J1", &[(half_i.clone(), "Em1")])
        .bracket("Ep1", "J2", &[(-&half_i, "Em1")])
        .bracket("Ep2", "J2", &[(-&half_i, "Em2")])
        .bracket("Em1", "J1", &[(half_i.clone(), "Ep2")])
        .bracket("Em2", "J1", &[(-&half_i, "Ep1")])
        .bracket("Em1", "J2", &[(-&half_i, "Ep1")])
        .bracket("Em2", "J2", &[(-&half_i, "Ep2")]);
    // Odd vector Sigma.
    b = b
        .bracket("S3", "Sigma1", &[(i.clone(), "Sigma2")])
        .bracket("S3", "Sigma2", &[(-&i, "Sigma1")])
        .bracket("J", "Sigma1", &[(i.clone(), "Sigma2")])
        .bracket("J", "Sigma2", &[(-&i, "Sigma1")])
        .bracket("Sigma1", "Sigma1", &[(num(1), "C")])
        .bracket("Sigma2", "Sigma2", &[(num(1), "C")]);
    // E with Q closes on Sigma.
    b = b
        .bracket("Ep1", "Qp1", &[(-&half_ie, "Sigma2")])
        .bracket("Ep2", "Qp1", &[(half_ie.clone(), "Sigma1")])
        .bracket("Ep1", "Qp2", &[(half_ie.clone(), "Sigma1")])
        .bracket("Ep2", "Qp2", &[(half_ie.clone(), "Sigma2")])
        .bracket("Ep1", "Qm1", &[(-&half_ie, "Sigma1")])
        .bracket("Ep2", "Qm1", &[(-&half_ie, "Sigma2")])
        .bracket("Ep1", "Qm2", &[(-&half_ie, "Sigma2")])
        .bracket("Ep2", "Qm2", &[(half_ie.clone(), "Sigma1")])
        .bracket("Em1", "Qp1", &[(half_ie.clone(), "Sigma2")])
        .bracket("Em2", "Qp1", &[(-&half_ie, "Sigma1")])
        .bracket("Em1", "Qp2", &[(-&half_ie, "Sigma1")])
        .bracket("Em2", "Qp2", &[(-&half_ie, "Sigma2")])
        .bracket("Em1", "Qm1", &[(-&half_ie, "Sigma1")])
        .bracket("Em2", "Qm1", &[(-&half_ie, "Sigma2")])
        .bracket("Em1", "Qm2", &[(-&half_ie, "Sigma2")])
        .bracket("Em2", "Qm2", &[(half_ie.clone(), "Sigma1")]);
    // Sigma with Q closes on E.
    b = b
        .bracket("Sigma1", "Qp1", &[(num(1), "Ep1"), (num(1), "Em1")])
        .bracket("Sigma2", "Qp1", &[(num(1), "Ep2"), (num(1), "Em2")])
        .bracket("Sigma1", "Qp2", &[(num(-1), "Ep2"), (num(-1), "Em2")])
        .bracket("Sigma2", "Qp2", &[(num(1), "Ep1"), (num(1), "Em1")])
        .bracket("Sigma1", "Qm1", &[(num(1), "Ep2"), (num(-1), "Em2")])
        .bracket("Sigma2", "Qm1", &[(num(-1), "Ep1"), (num(1), "Em1")])
        .bracket("Sigma1", "Qm2", &[(num(1), "Ep1"), (num(-1), "Em1")])
        .bracket("Sigma2", "Qm2", &[(num(1), "Ep2"), (num(-1), "Em2")]);
    b.build()
}
