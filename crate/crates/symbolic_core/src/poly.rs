//! Multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept sorted in descending exponent-vector order with no zero
//! coefficients, and square reductions (s^2 -> 1 - c^2, iota^2 -> -1,
//! eps^2 -> 1) are applied on construction, so structural equality of two
//! polynomials is semantic equality in the quotient ring.

use crate::params::{
    has_square_reduction, NPARAMS, P_C, P_EPS_1MB, P_EPS_B, P_IOTA, P_S,
};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeMap;

pub type Rat = BigRational;

/// Exponent vector, ordered lexicographically over the fixed alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono(pub [u16; NPARAMS]);

impl Mono {
    pub fn unit() -> Self {
        Mono([0; NPARAMS])
    }

    pub fn var(idx: usize) -> Self {
        let mut e = [0; NPARAMS];
        e[idx] = 1;
        Mono(e)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; NPARAMS];
        for i in 0..NPARAMS {
            e[i] = self.0[i] + other.0[i];
        }
        Mono(e)
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise division; `None` if any exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut e = [0; NPARAMS];
        for i in 0..NPARAMS {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Mono(e))
    }
}

/// Polynomial with reduced, descending-sorted terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    terms: Vec<(Mono, Rat)>,
}

/// Push one term, expanding square reductions recursively.
fn merge_reduced(out: &mut BTreeMap<Mono, Rat>, mono: Mono, coeff: Rat) {
    if coeff.is_zero() {
        return;
    }
    for idx in [P_IOTA, P_EPS_B, P_EPS_1MB, P_S] {
        if mono.0[idx] >= 2 {
            let mut base = mono;
            base.0[idx] -= 2;
            match idx {
                P_IOTA => merge_reduced(out, base, -coeff),
                P_EPS_B | P_EPS_1MB => merge_reduced(out, base, coeff),
                P_S => {
                    // s^2 = 1 - c^2
                    merge_reduced(out, base, coeff.clone());
                    let mut with_c = base;
                    with_c.0[P_C] += 2;
                    merge_reduced(out, with_c, -coeff);
                }
                _ => unreachable!(),
            }
            return;
        }
    }
    *out.entry(mono).or_insert_with(Rat::zero) += coeff;
}

fn push_reduced(out: &mut Vec<(Mono, Rat)>, mono: Mono, coeff: Rat) {
    if coeff.is_zero() {
        return;
    }
    for idx in [P_IOTA, P_EPS_B, P_EPS_1MB, P_S] {
        if mono.0[idx] >= 2 {
            let mut base = mono;
            base.0[idx] -= 2;
            match idx {
                P_IOTA => push_reduced(out, base, -coeff),
                P_EPS_B | P_EPS_1MB => push_reduced(out, base, coeff),
                P_S => {
                    // s^2 = 1 - c^2
                    push_reduced(out, base, coeff.clone());
                    let mut with_c = base;
                    with_c.0[P_C] += 2;
                    push_reduced(out, with_c, -coeff);
                }
                _ => unreachable!(),
            }
            return;
        }
    }
    out.push((mono, coeff));
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::unit(), c)],
            }
        }
    }

    pub fn var(idx: usize) -> Self {
        Poly {
            terms: vec![(Mono::var(idx), Rat::one())],
        }
    }

    pub fn from_terms(raw: Vec<(Mono, Rat)>) -> Self {
        let mut expanded = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            push_reduced(&mut expanded, m, c);
        }
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m, c) in expanded {
            let slot = acc.entry(m).or_insert_with(Rat::zero);
            *slot += c;
        }
        let mut terms: Vec<(Mono, Rat)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_unit())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(Rat::zero())
        } else if self.terms.len() == 1 && self.terms[0].0.is_unit() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Rat)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().cloned());
        Poly::from_terms(raw)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        // Merge as we go: expanding all cross terms first can cost n*m
        // entries while the reduced product stays small.
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                merge_reduced(&mut acc, ma.mul(mb), ca * cb);
            }
        }
        let mut terms: Vec<(Mono, Rat)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn contains(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    pub fn vars(&self) -> Vec<usize> {
        (0..NPARAMS).filter(|&v| self.contains(v)).collect()
    }

    /// Coefficients as polynomials in the other variables, by power of `var`.
    pub fn coeffs_in(&self, var: usize) -> BTreeMap<u16, Poly> {
        let mut out: BTreeMap<u16, Vec<(Mono, Rat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut stripped = *m;
            stripped.0[var] = 0;
            out.entry(e).or_default().push((stripped, c.clone()));
        }
        out.into_iter()
            .map(|(e, raw)| (e, Poly::from_terms(raw)))
            .collect()
    }

    pub fn coeff_of(&self, var: usize, power: u16) -> Poly {
        let raw: Vec<(Mono, Rat)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] == power)
            .map(|(m, c)| {
                let mut stripped = *m;
                stripped.0[var] = 0;
                (stripped, c.clone())
            })
            .collect();
        Poly::from_terms(raw)
    }

    pub fn mul_var_pow(&self, var: usize, power: u16) -> Poly {
        let raw: Vec<(Mono, Rat)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut lifted = *m;
                lifted.0[var] += power;
                (lifted, c.clone())
            })
            .collect();
        Poly::from_terms(raw)
    }

    /// Exact polynomial division in the plain ring; `None` when not exact.
    ///
    /// Only meaningful when neither operand mixes reduced symbols with
    /// exponent >= 2, which the construction invariant guarantees.
    pub fn exact_div(&self, div: &Poly) -> Option<Poly> {
        assert!(!div.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dm, dc) = div.leading().unwrap();
        if div.terms.len() == 1 {
            // A monomial divides iff it divides every term.
            let mut quo = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                quo.push((m.div(dm)?, c / dc));
            }
            return Some(Poly { terms: quo });
        }
        // Impossibility screens: the leading monomial and every per
        // variable degree of an exact quotient are forced.
        self.leading().unwrap().0.div(dm)?;
        for v in div.vars() {
            if self.degree_in(v) < div.degree_in(v) {
                return None;
            }
        }
        // On a non divisor the remainder chase can grow without bound
        // (term count and coefficient size both swell), so give up once
        // the partial quotient stops looking like an exact division.
        let size_cap = 8 * (self.terms.len() + div.terms.len()) + 256;
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, Rat)> = Vec::new();
        while !rem.is_zero() {
            if quo.len() >= 2048 || rem.terms.len() > size_cap {
                return None;
            }
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            if qc.numer().bits() + qc.denom().bits() > 1 << 14 {
                return None;
            }
            quo.push((qm, qc.clone()));
            let piece = Poly {
                terms: vec![(qm, qc)],
            };
            rem = rem.sub(&piece.mul_plain(div));
        }
        Some(Poly::from_terms(quo))
    }

    /// Multiplication without square reduction, for internal division only.
    fn mul_plain(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let slot = acc.entry(ma.mul(mb)).or_insert_with(Rat::zero);
                *slot += ca * cb;
            }
        }
        let mut terms: Vec<(Mono, Rat)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    /// Substitute rational values for a subset of variables.
    pub fn substitute(&self, bindings: &[(usize, Rat)]) -> Poly {
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = *m;
            for (var, val) in bindings {
                let e = mono.0[*var];
                if e > 0 {
                    let mut p = Rat::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    coeff *= p;
                    mono.0[*var] = 0;
                }
            }
            raw.push((mono, coeff));
        }
        Poly::from_terms(raw)
    }

    /// Scale so the coefficients are coprime integers and the leading one is
    /// positive.  Returns the zero polynomial unchanged.
    pub fn primitive_normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut lcm_den = BigInt::one();
        for (_, c) in &self.terms {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let mut gcd_num = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&lcm_den / c.denom());
            gcd_num = gcd_num.gcd(&scaled);
        }
        let mut factor = Rat::new(lcm_den, gcd_num);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Split into special-symbol patterns: each entry maps the exponent
    /// pattern over (s, iota, eps_B, eps_1mb) to the symbol-free cofactor.
    pub fn split_special(&self) -> BTreeMap<[u16; 4], Poly> {
        let specials = [P_S, P_IOTA, P_EPS_B, P_EPS_1MB];
        let mut out: BTreeMap<[u16; 4], Vec<(Mono, Rat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut pat = [0u16; 4];
            let mut stripped = *m;
            for (k, &sv) in specials.iter().enumerate() {
                pat[k] = m.0[sv];
                stripped.0[sv] = 0;
            }
            out.entry(pat).or_default().push((stripped, c.clone()));
        }
        out.into_iter()
            .map(|(p, raw)| (p, Poly::from_terms(raw)))
            .collect()
    }

    pub fn contains_special(&self) -> bool {
        (0..NPARAMS)
            .filter(|&v| has_square_reduction(v))
            .any(|v| self.contains(v))
    }
}

/// Evaluate one variable at a (large) integer point.
fn eval_at_int(p: &Poly, var: usize, xi: &BigInt) -> Poly {
    let val = Rat::from_integer(xi.clone());
    p.substitute(&[(var, val)])
}

/// Symmetric remainder in (-xi/2, xi/2], coefficient by coefficient.
fn smod_poly(p: &Poly, xi: &BigInt) -> Poly {
    let half = xi / BigInt::from(2);
    let raw: Vec<(Mono, Rat)> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert!(c.is_integer());
            let mut r = c.numer().mod_floor(xi);
            if r > half {
                r -= xi;
            }
            (*m, Rat::from_integer(r))
        })
        .collect();
    Poly::from_terms(raw)
}

fn max_abs_coeff(p: &Poly) -> BigInt {
    p.terms()
        .iter()
        .map(|(_, c)| c.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// One evaluation-lift pass of the heuristic gcd: evaluate the first
/// variable at a big integer, recurse on the result, and lift the deeper
/// gcd back through base-xi digits.  Integer content is deliberately kept
/// (it carries polynomial structure for the caller's reconstruction); the
/// candidate is unverified, the top-level caller trial-divides.
fn heuristic_pass(a: &Poly, b: &Poly, salt: u32) -> Option<Poly> {
    let vars = {
        let mut v = a.vars();
        for w in b.vars() {
            if !v.contains(&w) {
                v.push(w);
            }
        }
        v
    };
    let Some(&var) = vars.first() else {
        // Pure integers.
        let ga = a.as_constant().unwrap_or_else(Rat::zero);
        let gb = b.as_constant().unwrap_or_else(Rat::zero);
        let g = ga.numer().gcd(gb.numer());
        return Some(Poly::constant(Rat::from_integer(g)));
    };
    let bound = max_abs_coeff(a).max(max_abs_coeff(b));
    let mut xi: BigInt = BigInt::from(2) * bound + BigInt::from(29);
    for _ in 0..salt {
        xi = xi * BigInt::from(73794) / BigInt::from(27011);
    }
    if xi.bits() > 200_000 {
        return None;
    }
    let av = eval_at_int(a, var, &xi);
    let bv = eval_at_int(b, var, &xi);
    if av.is_zero() || bv.is_zero() {
        return None;
    }
    let gv = heuristic_pass(&av, &bv, salt)?;
    // Reconstruct a polynomial in `var` from base-xi digits.
    let mut digits: Vec<Poly> = Vec::new();
    let mut rem = gv;
    let xi_rat = Rat::from_integer(xi.clone());
    while !rem.is_zero() && digits.len() < 512 {
        let digit = smod_poly(&rem, &xi);
        rem = rem.sub(&digit).scale(&xi_rat.clone().recip());
        digits.push(digit);
    }
    let mut cand = Poly::zero();
    for (i, d) in digits.into_iter().enumerate() {
        cand = cand.add(&d.mul_var_pow(var, i as u16));
    }
    if cand.is_zero() {
        None
    } else {
        Some(cand)
    }
}

/// Whether the evaluation heuristic is worth attempting: the evaluation
/// integers grow by roughly a factor (degree+1) in bits per variable, so
/// wide, high-degree pairs are skipped rather than allowed to crawl.
fn heuristic_feasible(a: &Poly, b: &Poly) -> bool {
    if a.terms().len() + b.terms().len() > 240 {
        return false;
    }
    let mut growth: u64 = 1;
    for v in 0..NPARAMS {
        let d = a.degree_in(v).max(b.degree_in(v)) as u64;
        if d > 0 {
            growth = growth.saturating_mul(d + 1);
            if growth > 5000 {
                return false;
            }
        }
    }
    true
}

/// Componentwise-minimum exponent over every term of both polynomials: the
/// largest monomial dividing both.
fn common_monomial(a: &Poly, b: &Poly) -> Mono {
    let mut min = [u16::MAX; NPARAMS];
    for (m, _) in a.terms().iter().chain(b.terms().iter()) {
        for i in 0..NPARAMS {
            min[i] = min[i].min(m.0[i]);
        }
    }
    Mono(min)
}

/// Verified common-divisor extraction; the result is primitive with a
/// positive leading coefficient, and every factor of it has been checked by
/// exact division, so cancelling with it is always sound.
///
/// The search is best-effort by design: monomial content and exact-division
/// fast paths run first, then a size-gated evaluation heuristic iterates on
/// cofactors.  When the search finds nothing more, remaining common factors
/// (if any) simply stay uncancelled; arithmetic and equality do not depend
/// on completeness, and the search is deterministic, so canonical printing
/// is stable.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let mut ra = a.primitive_normalized();
    let mut rb = b.primitive_normalized();
    let mut total = Poly::one();
    let shared = common_monomial(&ra, &rb);
    if !shared.is_unit() {
        let carrier = Poly::from_terms(vec![(shared, Rat::one())]);
        ra = ra.exact_div(&carrier).expect("monomial content divides");
        rb = rb.exact_div(&carrier).expect("monomial content divides");
        total = total.mul(&carrier);
    }
    loop {
        let any_common = ra.vars().into_iter().any(|v| rb.contains(v));
        if !any_common {
            return total.primitive_normalized();
        }
        if ra == rb {
            return total.mul(&ra).primitive_normalized();
        }
        if ra.exact_div(&rb).is_some() {
            return total.mul(&rb).primitive_normalized();
        }
        if rb.exact_div(&ra).is_some() {
            return total.mul(&ra).primitive_normalized();
        }
        if !heuristic_feasible(&ra, &rb) {
            return total.primitive_normalized();
        }
        let mut step: Option<Poly> = None;
        for salt in 0..4 {
            match heuristic_pass(&ra, &rb, salt) {
                Some(c) if c.is_constant() => {
                    // Coprime verdict: the integer gcd of the evaluations
                    // left no polynomial structure to lift.
                    step = Some(c);
                    break;
                }
                Some(c) => {
                    if ra.exact_div(&c).is_some() && rb.exact_div(&c).is_some() {
                        step = Some(c);
                        break;
                    }
                }
                None => {}
            }
        }
        match step {
            Some(g) if !g.is_constant() => {
                ra = ra.exact_div(&g).expect("verified divisor");
                rb = rb.exact_div(&g).expect("verified divisor");
                total = total.mul(&g);
            }
            _ => return total.primitive_normalized(),
        }
    }
}
