//! The fixed parameter alphabet shared by the whole workspace.
//!
//! Every symbolic expression lives in the rational function field over these
//! names.  Four of them are formal symbols subject to square reductions
//! rather than free transcendentals: `s` and `c` satisfy s^2 = 1 - c^2,
//! `iota` is the imaginary unit (iota^2 = -1), and `eps_B`, `eps_1mb` are
//! signs (square = 1).  `eta` is kept free; callers bind it to +1 or -1.

/// Ordered alphabet.  The index of a name here is its exponent slot.
pub const PARAMS: [&str; 18] = [
    "m", "kappa", "R", "mu_p", "mu_m", "alpha_p", "alpha_m", "theta", "B",
    "beta", "omega", "omega_c", "s", "c", "eta", "iota", "eps_B", "eps_1mb",
];

/// Number of parameter slots.
pub const NPARAMS: usize = PARAMS.len();

pub const P_M: usize = 0;
pub const P_KAPPA: usize = 1;
pub const P_R: usize = 2;
pub const P_MU_P: usize = 3;
pub const P_MU_M: usize = 4;
pub const P_ALPHA_P: usize = 5;
pub const P_ALPHA_M: usize = 6;
pub const P_THETA: usize = 7;
pub const P_B: usize = 8;
pub const P_BETA: usize = 9;
pub const P_OMEGA: usize = 10;
pub const P_OMEGA_C: usize = 11;
pub const P_S: usize = 12;
pub const P_C: usize = 13;
pub const P_ETA: usize = 14;
pub const P_IOTA: usize = 15;
pub const P_EPS_B: usize = 16;
pub const P_EPS_1MB: usize = 17;

/// Look up a parameter index by name.
pub fn param_index(name: &str) -> Option<usize> {
    PARAMS.iter().position(|&p| p == name)
}

/// True for the formal symbols that cannot be bound to a rational number.
pub fn is_formal(idx: usize) -> bool {
    idx == P_IOTA
}

/// True for symbols whose square reduces to something of lower degree.
pub fn has_square_reduction(idx: usize) -> bool {
    matches!(idx, P_S | P_IOTA | P_EPS_B | P_EPS_1MB)
}
