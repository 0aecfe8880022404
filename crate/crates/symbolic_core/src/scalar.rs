//! Exact rational functions of the fixed parameter alphabet.
//!
//! A `ParamScalar` is a quotient num/den of reduced polynomials held in a
//! canonical form: the denominator is free of the reduced symbols
//! (s, iota, eps_B, eps_1mb), the common polynomial gcd is cancelled, and
//! the denominator is a primitive integer polynomial with positive leading
//! coefficient.  Structural equality is therefore semantic equality, and a
//! difference is zero exactly when the two sides agree identically.

use crate::error::SymbolicError;
use crate::params::{
    is_formal, param_index, NPARAMS, P_C, P_EPS_1MB, P_EPS_B, P_IOTA, P_S, PARAMS,
};
use crate::poly::{gcd, Mono, Poly, Rat};
use num::{One, Signed};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

/// Equality by cross-multiplication: sound for the field of fractions even
/// when a common factor survived normalization.
impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        (self.num == other.num && self.den == other.den)
            || self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for ParamScalar {}

/// Square of a reduced symbol as a symbol-free polynomial.
fn special_square(idx: usize) -> Poly {
    match idx {
        P_S => Poly::one().sub(&Poly::var(P_C).mul(&Poly::var(P_C))),
        P_IOTA => Poly::constant(-Rat::one()),
        P_EPS_B | P_EPS_1MB => Poly::one(),
        _ => unreachable!("no square reduction for parameter {idx}"),
    }
}

fn canonicalize(mut num: Poly, mut den: Poly) -> Result<ParamScalar, SymbolicError> {
    if den.is_zero() {
        return Err(SymbolicError::ZeroDenominator);
    }
    // Clear reduced symbols out of the denominator by conjugate
    // multiplication; a vanishing product means the denominator was a zero
    // divisor of the quotient ring, which is division by zero on the nose.
    for idx in [P_IOTA, P_EPS_B, P_EPS_1MB, P_S] {
        if den.degree_in(idx) > 0 {
            let d1 = den.coeff_of(idx, 1);
            let d0 = den.coeff_of(idx, 0);
            let conj = d0.sub(&d1.mul(&Poly::var(idx)));
            den = d0.mul(&d0).sub(&special_square(idx).mul(&d1).mul(&d1));
            num = num.mul(&conj);
            if den.is_zero() {
                return Err(SymbolicError::ZeroDenominator);
            }
        }
    }
    if num.is_zero() {
        return Ok(ParamScalar {
            num: Poly::zero(),
            den: Poly::one(),
        });
    }
    if let Some(c) = den.as_constant() {
        return Ok(ParamScalar {
            num: num.scale(&c.recip()),
            den: Poly::one(),
        });
    }
    // The denominator is symbol-free, so every common divisor is too; the
    // gcd can be taken against each symbol-pattern component of the
    // numerator in the plain polynomial ring.
    let mut g = den.clone();
    for (_, part) in num.split_special() {
        g = gcd(&g, &part);
        if g.is_constant() {
            break;
        }
    }
    if !g.is_constant() {
        let num_parts = num.split_special();
        let mut rebuilt = Poly::zero();
        for (pat, part) in num_parts {
            let reduced = part.exact_div(&g).expect("gcd divides numerator part");
            let mut carrier = Mono::unit();
            carrier.0[P_S] = pat[0];
            carrier.0[P_IOTA] = pat[1];
            carrier.0[P_EPS_B] = pat[2];
            carrier.0[P_EPS_1MB] = pat[3];
            let carrier = Poly::from_terms(vec![(carrier, Rat::one())]);
            rebuilt = rebuilt.add(&carrier.mul(&reduced));
        }
        num = rebuilt;
        den = den.exact_div(&g).expect("gcd divides denominator");
    }
    let canon_den = den.primitive_normalized();
    // num picks up the inverse of the factor den was scaled by.
    let lead_old = &den.leading().unwrap().1;
    let lead_new = &canon_den.leading().unwrap().1;
    let factor = lead_new / lead_old;
    Ok(ParamScalar {
        num: num.scale(&factor),
        den: canon_den,
    })
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        ParamScalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        ParamScalar {
            num: Poly::constant(Rat::from_integer(n.into())),
            den: Poly::one(),
        }
    }

    pub fn rat(n: i64, d: i64) -> Self {
        assert!(d != 0);
        ParamScalar {
            num: Poly::constant(Rat::new(n.into(), d.into())),
            den: Poly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        ParamScalar {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn param(name: &str) -> Result<Self, SymbolicError> {
        let idx = param_index(name)
            .ok_or_else(|| SymbolicError::UnknownParameter(name.to_string()))?;
        Ok(Self::param_idx(idx))
    }

    pub fn param_idx(idx: usize) -> Self {
        assert!(idx < NPARAMS);
        ParamScalar {
            num: Poly::var(idx),
            den: Poly::one(),
        }
    }

    /// The imaginary unit as a formal symbol.
    pub fn i() -> Self {
        Self::param_idx(P_IOTA)
    }

    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, SymbolicError> {
        canonicalize(num, den)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn pow(&self, n: i32) -> Result<Self, SymbolicError> {
        if n < 0 {
            return self.recip()?.pow(-n);
        }
        let mut out = ParamScalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        Ok(out)
    }

    pub fn recip(&self) -> Result<Self, SymbolicError> {
        if self.num.is_zero() {
            return Err(SymbolicError::ZeroDenominator);
        }
        canonicalize(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, SymbolicError> {
        if other.num.is_zero() {
            return Err(SymbolicError::ZeroDenominator);
        }
        canonicalize(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Split into real and imaginary parts over the formal imaginary unit.
    pub fn split_i(&self) -> (ParamScalar, ParamScalar) {
        let re = self.num.coeff_of(P_IOTA, 0);
        let im = self.num.coeff_of(P_IOTA, 1);
        (
            canonicalize(re, self.den.clone()).expect("den nonzero"),
            canonicalize(im, self.den.clone()).expect("den nonzero"),
        )
    }

    pub fn contains(&self, name: &str) -> bool {
        param_index(name)
            .map(|idx| self.num.contains(idx) || self.den.contains(idx))
            .unwrap_or(false)
    }

    pub fn params_used(&self) -> Vec<&'static str> {
        (0..NPARAMS)
            .filter(|&v| self.num.contains(v) || self.den.contains(v))
            .map(|v| PARAMS[v])
            .collect()
    }

    /// Bind a subset of parameters to rational values.  Binding every
    /// parameter of an expression yields a constant.
    pub fn substitute(&self, bindings: &[(&str, Rat)]) -> Result<Self, SymbolicError> {
        let mut resolved: Vec<(usize, Rat)> = Vec::with_capacity(bindings.len());
        for (name, val) in bindings {
            let idx = param_index(name)
                .ok_or_else(|| SymbolicError::UnknownParameter(name.to_string()))?;
            if is_formal(idx) {
                return Err(SymbolicError::NotBindable(name.to_string()));
            }
            resolved.push((idx, val.clone()));
        }
        let num = self.num.substitute(&resolved);
        let den = self.den.substitute(&resolved);
        if den.is_zero() {
            let desc = bindings
                .iter()
                .map(|(n, v)| format!("{n}={v}"))
                .collect::<Vec<_>>()
                .join(",");
            return Err(SymbolicError::PoleAtBinding(desc));
        }
        canonicalize(num, den)
    }

    /// Fully evaluate to a rational number; every remaining parameter must
    /// be bound and the expression must be free of the imaginary unit.
    pub fn eval_rat(&self, bindings: &[(&str, Rat)]) -> Result<Rat, SymbolicError> {
        let bound = self.substitute(bindings)?;
        if let Some(r) = bound.as_rat() {
            return Ok(r);
        }
        let leftover = bound
            .params_used()
            .first()
            .copied()
            .unwrap_or("iota");
        Err(SymbolicError::UnboundParameter(leftover.to_string()))
    }

    pub fn eval_f64(&self, bindings: &[(&str, Rat)]) -> Result<f64, SymbolicError> {
        let r = self.eval_rat(bindings)?;
        Ok(rat_to_f64(&r))
    }

    /// Limit as `param -> infinity`, keeping only the finite part of the
    /// Laurent expansion; any surviving positive power is an error.
    pub fn laurent_finite_part(&self, param: &str) -> Result<Self, SymbolicError> {
        let var = param_index(param)
            .ok_or_else(|| SymbolicError::UnknownParameter(param.to_string()))?;
        if self.num.is_zero() {
            return Ok(ParamScalar::zero());
        }
        let dn = self.num.degree_in(var);
        let dd = self.den.degree_in(var);
        if dn < dd {
            return Ok(ParamScalar::zero());
        }
        let ncoeffs = self.num.coeffs_in(var);
        let dcoeffs = self.den.coeffs_in(var);
        let lead = dcoeffs.get(&dd).expect("leading coefficient").clone();
        let lead = ParamScalar::from_parts(lead, Poly::one())?;
        let npoly = |k: u16| -> Poly {
            ncoeffs.get(&k).cloned().unwrap_or_else(Poly::zero)
        };
        let dpoly = |k: u16| -> Poly {
            dcoeffs.get(&k).cloned().unwrap_or_else(Poly::zero)
        };
        // Series division around infinity: coefficient k counts down from
        // the numerator's top degree.
        let order = dn - dd;
        let mut q: Vec<ParamScalar> = Vec::with_capacity(order as usize + 1);
        for k in 0..=order {
            let mut acc = ParamScalar::from_parts(npoly(dn - k), Poly::one())?;
            for (j, qj) in q.iter().enumerate() {
                let shift = k - j as u16;
                if shift > dd {
                    continue;
                }
                let dj = ParamScalar::from_parts(dpoly(dd - shift), Poly::one())?;
                acc = &acc - &(qj * &dj);
            }
            let qk = acc.div(&lead)?;
            if k < order && !qk.is_zero() {
                return Err(SymbolicError::DivergentContraction {
                    param: param.to_string(),
                    power: order - k,
                });
            }
            q.push(qk);
        }
        Ok(q.pop().expect("at least one coefficient"))
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        canonicalize(num, self.den.mul(&rhs.den)).expect("nonzero denominators")
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        canonicalize(num, self.den.mul(&rhs.den)).expect("nonzero denominators")
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        canonicalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominators")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Scale down huge integers together to stay in f64 range.
    let nb = num.bits();
    let db = den.bits();
    if nb <= 1000 && db <= 1000 {
        let n: f64 = num.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = den.to_string().parse().unwrap_or(f64::NAN);
        n / d
    } else {
        let shift = (nb.max(db) - 900) as u64;
        let n2 = num >> shift;
        let d2 = den >> shift;
        let n: f64 = n2.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = d2.to_string().parse().unwrap_or(f64::NAN);
        n / d
    }
}

fn write_mono(out: &mut String, mono: &Mono) {
    let mut first = true;
    for (idx, &e) in mono.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(PARAMS[idx]);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn write_poly(out: &mut String, p: &Poly) {
    if p.is_zero() {
        out.push('0');
        return;
    }
    for (i, (mono, coeff)) in p.terms().iter().enumerate() {
        let neg = coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = coeff.abs();
        if mono.is_unit() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            write_mono(out, mono);
        }
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.den == Poly::one() {
            write_poly(&mut s, &self.num);
        } else {
            s.push('(');
            write_poly(&mut s, &self.num);
            s.push_str(")/(");
            write_poly(&mut s, &self.den);
            s.push(')');
        }
        f.write_str(&s)
    }
}
