//! Trigonometric polynomials in a single evolution time.
//!
//! A `TrigCoeff` is  C + sum_v [ A_v cos(v t) + B_v sin(v t) ]  over a
//! finite set of positive rational frequencies, with exact `ParamScalar`
//! amplitudes.  The set is closed under addition, multiplication
//! (product-to-sum) and time differentiation, so flows built from rational
//! frequencies stay exact and "equal" means the difference collapses to the
//! zero element.

use crate::error::SymbolicError;
use crate::poly::Rat;
use crate::scalar::{rat_to_f64, ParamScalar};
use num::Zero;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrigCoeff {
    constant: ParamScalar,
    /// frequency -> (cosine amplitude, sine amplitude); frequencies > 0.
    waves: BTreeMap<Rat, (ParamScalar, ParamScalar)>,
}

impl TrigCoeff {
    pub fn zero() -> Self {
        TrigCoeff {
            constant: ParamScalar::zero(),
            waves: BTreeMap::new(),
        }
    }

    pub fn constant(c: ParamScalar) -> Self {
        TrigCoeff {
            constant: c,
            waves: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(ParamScalar::one())
    }

    pub fn cos(freq: Rat, amp: ParamScalar) -> Self {
        let mut out = TrigCoeff::zero();
        out.add_wave(freq, amp, ParamScalar::zero());
        out
    }

    pub fn sin(freq: Rat, amp: ParamScalar) -> Self {
        let mut out = TrigCoeff::zero();
        out.add_wave(freq, ParamScalar::zero(), amp);
        out
    }

    pub fn constant_part(&self) -> &ParamScalar {
        &self.constant
    }

    pub fn waves(&self) -> &BTreeMap<Rat, (ParamScalar, ParamScalar)> {
        &self.waves
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.waves.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.waves.is_empty()
    }

    pub fn as_scalar(&self) -> Option<&ParamScalar> {
        if self.waves.is_empty() {
            Some(&self.constant)
        } else {
            None
        }
    }

    /// Fold a wave term in, normalizing frequency sign and dropping zeros.
    fn add_wave(&mut self, freq: Rat, cos_amp: ParamScalar, mut sin_amp: ParamScalar) {
        if freq.is_zero() {
            self.constant = &self.constant + &cos_amp;
            return;
        }
        let key = if freq < Rat::zero() {
            sin_amp = -&sin_amp;
            -freq
        } else {
            freq
        };
        let entry = self
            .waves
            .entry(key.clone())
            .or_insert_with(|| (ParamScalar::zero(), ParamScalar::zero()));
        entry.0 = &entry.0 + &cos_amp;
        entry.1 = &entry.1 + &sin_amp;
        if entry.0.is_zero() && entry.1.is_zero() {
            self.waves.remove(&key);
        }
    }

    pub fn scale(&self, k: &ParamScalar) -> Self {
        if k.is_zero() {
            return TrigCoeff::zero();
        }
        let mut out = TrigCoeff::constant(&self.constant * k);
        for (f, (a, b)) in &self.waves {
            out.add_wave(f.clone(), a * k, b * k);
        }
        out
    }

    pub fn ddt(&self) -> Self {
        let mut out = TrigCoeff::zero();
        for (f, (a, b)) in &self.waves {
            let nu = ParamScalar::from_rat(f.clone());
            // d/dt (A cos + B sin) = (B nu) cos - (A nu) sin
            out.add_wave(f.clone(), b * &nu, -&(a * &nu));
        }
        out
    }

    pub fn substitute(&self, bindings: &[(&str, Rat)]) -> Result<Self, SymbolicError> {
        let mut out = TrigCoeff::constant(self.constant.substitute(bindings)?);
        for (f, (a, b)) in &self.waves {
            out.add_wave(f.clone(), a.substitute(bindings)?, b.substitute(bindings)?);
        }
        Ok(out)
    }

    pub fn eval_f64(&self, bindings: &[(&str, Rat)], t: f64) -> Result<f64, SymbolicError> {
        let mut acc = self.constant.eval_f64(bindings)?;
        for (f, (a, b)) in &self.waves {
            let nu = rat_to_f64(f);
            acc += a.eval_f64(bindings)? * (nu * t).cos();
            acc += b.eval_f64(bindings)? * (nu * t).sin();
        }
        Ok(acc)
    }

    /// Value at t = 0, where every cosine is 1 and every sine is 0.
    pub fn at_zero(&self) -> ParamScalar {
        let mut acc = self.constant.clone();
        for (_, (a, _)) in &self.waves {
            acc = &acc + a;
        }
        acc
    }
}

impl Add for &TrigCoeff {
    type Output = TrigCoeff;
    fn add(self, rhs: &TrigCoeff) -> TrigCoeff {
        let mut out = TrigCoeff::constant(&self.constant + &rhs.constant);
        for (f, (a, b)) in &self.waves {
            out.add_wave(f.clone(), a.clone(), b.clone());
        }
        for (f, (a, b)) in &rhs.waves {
            out.add_wave(f.clone(), a.clone(), b.clone());
        }
        out
    }
}

impl Sub for &TrigCoeff {
    type Output = TrigCoeff;
    fn sub(self, rhs: &TrigCoeff) -> TrigCoeff {
        self + &(-rhs)
    }
}

impl Neg for &TrigCoeff {
    type Output = TrigCoeff;
    fn neg(self) -> TrigCoeff {
        let mut out = TrigCoeff::constant(-&self.constant);
        for (f, (a, b)) in &self.waves {
            out.add_wave(f.clone(), -a, -b);
        }
        out
    }
}

impl Mul for &TrigCoeff {
    type Output = TrigCoeff;
    fn mul(self, rhs: &TrigCoeff) -> TrigCoeff {
        let mut out = TrigCoeff::constant(&self.constant * &rhs.constant);
        for (f, (a, b)) in &rhs.waves {
            out.add_wave(f.clone(), a * &self.constant, b * &self.constant);
        }
        for (f, (a, b)) in &self.waves {
            out.add_wave(f.clone(), a * &rhs.constant, b * &rhs.constant);
        }
        let half = ParamScalar::rat(1, 2);
        for (f1, (a1, b1)) in &self.waves {
            for (f2, (a2, b2)) in &rhs.waves {
                let sum = f1 + f2;
                let diff = f1 - f2;
                // cos cos = (cos(d) + cos(s))/2
                let cc = &(a1 * a2) * &half;
                out.add_wave(diff.clone(), cc.clone(), ParamScalar::zero());
                out.add_wave(sum.clone(), cc, ParamScalar::zero());
                // sin sin = (cos(d) - cos(s))/2
                let ss = &(b1 * b2) * &half;
                out.add_wave(diff.clone(), ss.clone(), ParamScalar::zero());
                out.add_wave(sum.clone(), -&ss, ParamScalar::zero());
                // sin(f1) cos(f2) = (sin(s) + sin(d))/2
                let sc = &(b1 * a2) * &half;
                out.add_wave(sum.clone(), ParamScalar::zero(), sc.clone());
                out.add_wave(diff.clone(), ParamScalar::zero(), sc);
                // cos(f1) sin(f2) = (sin(s) - sin(d))/2
                let cs = &(a1 * b2) * &half;
                out.add_wave(sum, ParamScalar::zero(), cs.clone());
                out.add_wave(diff, ParamScalar::zero(), -&cs);
            }
        }
        out
    }
}
