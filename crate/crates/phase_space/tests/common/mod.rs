#![allow(dead_code)]

use algebra_core::{BracketTable, TableBuilder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbolic_core::{rat_to_f64, rational, ParamScalar, Rat};

pub fn p(name: &str) -> ParamScalar {
    ParamScalar::param(name).unwrap()
}

pub fn num(n: i64) -> ParamScalar {
    ParamScalar::int(n)
}

pub fn rq(n: i64, d: i64) -> Rat {
    rational(n, d)
}

pub fn iu() -> ParamScalar {
    ParamScalar::i()
}

/// Fixed-step RK4 for an autonomous first-order system; the oracle
/// integrator the exact flows are checked against.
pub fn rk4<F>(rhs: F, z0: &[f64], t_end: f64, steps: usize) -> Vec<f64>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let h = t_end / steps as f64;
    let mut z = z0.to_vec();
    let n = z.len();
    for _ in 0..steps {
        let k1 = rhs(&z);
        let mut z2 = vec![0.0; n];
        for i in 0..n {
            z2[i] = z[i] + 0.5 * h * k1[i];
        }
        let k2 = rhs(&z2);
        for i in 0..n {
            z2[i] = z[i] + 0.5 * h * k2[i];
        }
        let k3 = rhs(&z2);
        for i in 0..n {
            z2[i] = z[i] + h * k3[i];
        }
        let k4 = rhs(&z2);
        for i in 0..n {
            z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    z
}

/// Hand-derived equations of motion for the covariant oscillator in
/// coordinates (x1, x2, v1, v2, p1, p2, pi1, pi2):
/// dx = v, dv = -x/R^2, dp = (pi - m x)/R^2, dpi = m v - p.
pub fn covariant_rhs(m: f64, r: f64) -> impl Fn(&[f64]) -> Vec<f64> {
    move |z: &[f64]| {
        let r2 = r * r;
        vec![
            z[2],
            z[3],
            -z[0] / r2,
            -z[1] / r2,
            (z[6] - m * z[0]) / r2,
            (z[7] - m * z[1]) / r2,
            m * z[2] - z[4],
            m * z[3] - z[5],
        ]
    }
}

/// Closed-form solution of the covariant oscillator: (x, v) rotate at
/// frequency 1/R, and so do (u, pi) with u = p - m v.
pub fn covariant_closed(m: f64, r: f64, z0: &[f64], t: f64) -> Vec<f64> {
    let (c, s) = ((t / r).cos(), (t / r).sin());
    let mut z = vec![0.0; 8];
    for i in 0..2 {
        let (x0, v0) = (z0[i], z0[2 + i]);
        let (p0, pi0) = (z0[4 + i], z0[6 + i]);
        let u0 = p0 - m * v0;
        z[i] = x0 * c + r * v0 * s;
        z[2 + i] = v0 * c - x0 / r * s;
        let u = u0 * c + pi0 / r * s;
        let pi = pi0 * c - r * u0 * s;
        z[4 + i] = u + m * z[2 + i];
        z[6 + i] = pi;
    }
    z
}

/// Chiral-mode equations of motion from the two-mode Hamiltonian
/// H = (a+/R) eps_ij X+_i P+_j - (a-/R) eps_ij X-_i P-_j in coordinates
/// (Xp1, Xp2, Xm1, Xm2, Pp1, Pp2, Pm1, Pm2).
pub fn two_mode_rhs(alpha_p: f64, alpha_m: f64, r: f64) -> impl Fn(&[f64]) -> Vec<f64> {
    let wp = alpha_p / r;
    let wm = alpha_m / r;
    move |z: &[f64]| {
        vec![
            -wp * z[1],
            wp * z[0],
            wm * z[3],
            -wm * z[2],
            -wp * z[5],
            wp * z[4],
            wm * z[7],
            -wm * z[6],
        ]
    }
}

/// Closed-form mode rotation: X+ turns counterclockwise, X- clockwise,
/// both at their own frequency.
pub fn mode_closed(plus: bool, omega: f64, x0: [f64; 2], t: f64) -> [f64; 2] {
    let (c, s) = ((omega * t).cos(), (omega * t).sin());
    if plus {
        [x0[0] * c - x0[1] * s, x0[1] * c + x0[0] * s]
    } else {
        [x0[0] * c + x0[1] * s, x0[1] * c - x0[0] * s]
    }
}

/// Target bracket table for the anisotropic covariant charges, written
/// out independently from the chiral composition
///   H = (a+ J+ - a- J-)/R, J = J+ + J-,
///   P_i = (a+ Jm_i - a- Jp_i)/R, K_i = -eps_ij (Jp_j + Jm_j),
/// using only the chiral relations {Js_i, Js_j} = eps_ij Zs,
/// {Js, Js_i} = eps_ij Js_j with Z+ = -R^2 mu+, Z- = R^2 mu-.
/// At alpha_p = alpha_m = 1 it collapses to the doubly extended table.
pub fn aniso_cov_table(alpha_p: &Rat, alpha_m: &Rat, r: &Rat) -> BracketTable {
    let ap = ParamScalar::from_rat(alpha_p.clone());
    let am = ParamScalar::from_rat(alpha_m.clone());
    let rr = ParamScalar::from_rat(r.clone());
    let i = iu();
    let d = &(&ap - &am) / &rr;
    let aa_r2 = &(&ap * &am) / &(&rr * &rr);
    let mi = -&i;
    TableBuilder::new("ENH_aniso", "derived")
        .even("H")
        .even("J")
        .even("P1")
        .even("P2")
        .even("K1")
        .even("K2")
        .even("Z")
        .even("Zt")
        .bracket("H", "K1", &[(mi.clone(), "P1"), (&i * &d, "K2")])
        .bracket("H", "K2", &[(mi.clone(), "P2"), (&mi * &d, "K1")])
        .bracket("H", "P1", &[(&i * &aa_r2, "K1")])
        .bracket("H", "P2", &[(&i * &aa_r2, "K2")])
        .bracket("J", "P1", &[(i.clone(), "P2")])
        .bracket("J", "P2", &[(mi.clone(), "P1")])
        .bracket("J", "K1", &[(i.clone(), "K2")])
        .bracket("J", "K2", &[(mi.clone(), "K1")])
        .bracket("K1", "P1", &[(i.clone(), "Z")])
        .bracket("K2", "P2", &[(i.clone(), "Z")])
        .bracket("K1", "K2", &[(mi.clone(), "Zt")])
        .bracket(
            "P1",
            "P2",
            &[(&i * &d, "Z"), (&mi * &aa_r2, "Zt")],
        )
        .build()
}

/// Deterministic rational phase-space points with small numerators and
/// denominators, so exact evaluation stays cheap.
pub fn sample_states(dim: usize, count: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let n = rng.gen_range(-9i64..=9);
                    let d = rng.gen_range(1i64..=4);
                    rq(n, d)
                })
                .collect()
        })
        .collect()
}

pub fn to_f64(state: &[Rat]) -> Vec<f64> {
    state.iter().map(rat_to_f64).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
