//! Naive numeric oracle: Durand–Kerner roots at about 210 digits, direct
//! evaluation, and comparisons with a fixed tolerance far below any gap that
//! occurs in the corpus. Shares no code with the certified routines.

use std::sync::Arc;

use equimod::field::{FieldElement, NumberField};
use rug::{Float, Rational};

use super::{field, random_unit, rng, small_units};

pub const BITS: u32 = 700; // about 210 decimal digits

#[derive(Clone, Debug)]
pub struct C {
    re: Float,
    im: Float,
}

impl C {
    fn new(re: Float, im: Float) -> C {
        C { re, im }
    }
    fn zero() -> C {
        C::new(Float::new(BITS), Float::new(BITS))
    }
    fn sub(&self, o: &C) -> C {
        C::new(Float::with_val(BITS, &self.re - &o.re), Float::with_val(BITS, &self.im - &o.im))
    }
    fn mul(&self, o: &C) -> C {
        let re = Float::with_val(BITS, &self.re * &o.re) - Float::with_val(BITS, &self.im * &o.im);
        let im = Float::with_val(BITS, &self.re * &o.im) + Float::with_val(BITS, &self.im * &o.re);
        C::new(re, im)
    }
    fn norm(&self) -> Float {
        Float::with_val(BITS, self.re.square_ref()) + Float::with_val(BITS, self.im.square_ref())
    }
    fn div(&self, o: &C) -> C {
        let n = o.norm();
        let conj = C::new(o.re.clone(), Float::with_val(BITS, -&o.im));
        let p = self.mul(&conj);
        C::new(p.re / &n, p.im / &n)
    }
}

fn eval(coeffs: &[Rational], z: &C) -> C {
    let mut acc = C::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z);
        acc.re += Float::with_val(BITS, c);
    }
    acc
}

/// All roots of the monic defining polynomial by Durand–Kerner.
pub fn roots(k: &NumberField) -> Vec<C> {
    let coeffs: Vec<Rational> = k.defining_poly().coeffs().iter().map(Rational::from).collect();
    let d = k.degree();
    let seed = C::new(Float::with_val(BITS, 0.4), Float::with_val(BITS, 0.9));
    let mut z: Vec<C> = Vec::with_capacity(d);
    let mut p = C::new(Float::with_val(BITS, 1), Float::new(BITS));
    for _ in 0..d {
        z.push(p.clone());
        p = p.mul(&seed);
    }
    for _ in 0..2000 {
        let mut delta = Float::new(BITS);
        for i in 0..d {
            let mut den = C::new(Float::with_val(BITS, 1), Float::new(BITS));
            for j in 0..d {
                if i != j {
                    den = den.mul(&z[i].sub(&z[j]));
                }
            }
            let step = eval(&coeffs, &z[i]).div(&den);
            let n = step.norm();
            if n > delta {
                delta = n;
            }
            z[i] = z[i].sub(&step);
        }
        if delta < Float::with_val(BITS, Float::i_exp(1, -1300)) {
            break;
        }
    }
    z
}

/// Values of `a` at every root of the defining polynomial.
pub fn values(k: &NumberField, a: &FieldElement) -> Vec<(C, bool)> {
    let tol = Float::with_val(BITS, Float::i_exp(1, -400));
    roots(k)
        .iter()
        .map(|r| {
            let mut acc = C::zero();
            for c in a.coeffs().iter().rev() {
                acc = acc.mul(r);
                acc.re += Float::with_val(BITS, c);
            }
            (acc, r.im.clone().abs() < tol)
        })
        .collect()
}

/// Representatives of the complex places: roots with positive imaginary part.
fn pair_values(k: &NumberField, a: &FieldElement) -> Vec<C> {
    let tol = Float::with_val(BITS, Float::i_exp(1, -400));
    let rs = roots(k);
    rs.iter()
        .filter(|r| r.im > tol)
        .map(|r| {
            let mut acc = C::zero();
            for c in a.coeffs().iter().rev() {
                acc = acc.mul(r);
                acc.re += Float::with_val(BITS, c);
            }
            acc
        })
        .collect()
}

fn close(a: &Float, b: &Float) -> bool {
    Float::with_val(BITS, a - b).abs() < Float::with_val(BITS, Float::i_exp(1, -500))
}

pub fn oracle_equal_modulus(k: &NumberField, a: &FieldElement) -> bool {
    let v = pair_values(k, a);
    v.iter().all(|x| close(&x.norm(), &v[0].norm()))
}

pub fn oracle_equal_conjugates(k: &NumberField, a: &FieldElement) -> bool {
    let v = pair_values(k, a);
    v.iter().all(|x| close(&x.re, &v[0].re) && close(&x.im, &v[0].im))
}

pub fn oracle_totally_positive(k: &NumberField, a: &FieldElement) -> bool {
    values(k, a).iter().filter(|(_, real)| *real).all(|(v, _)| v.re > 0)
}

pub fn elements() -> Vec<(Arc<NumberField>, FieldElement)> {
    let mut out = Vec::new();
    let mut r = rng(0xa11ce);
    let fields = [
        field(&[-1, -1, 0, 0, 0, 1]),
        field(&[-1, -1, 0, 0, 0, 0, 1]),
        field(&[1, 1, 1, 1, 1]),
        field(&[1, 0, 0, 0, 1]),
        field(&[-1, 0, -1, 0, 0, 1]),
        field(&[-1, 0, -2, 0, 1]),
    ];
    for k in &fields {
        let pool = small_units(k, 1);
        for _ in 0..6 {
            let u = random_unit(k, &pool, &mut r);
            out.push((k.clone(), u));
        }
        // rationals and small non-units exercise the relaxed precondition
        out.push((k.clone(), FieldElement::from_i64s(k, &[3])));
        out.push((k.clone(), FieldElement::from_i64s(k, &[2, -1, 1])));
    }
    // cases where equality holds without being vacuous
    let z5 = &fields[2];
    for c in [[0, 1, 0, 0], [0, 0, 3, 0], [0, 0, 0, -2]] {
        out.push((z5.clone(), FieldElement::from_i64s(z5, &c)));
    }
    let z8 = &fields[3];
    for c in [[1, 0, 1, 0], [2, 0, -3, 0], [0, 0, 1, 0], [5, 0, 1, 0]] {
        out.push((z8.clone(), FieldElement::from_i64s(z8, &c)));
    }
    out
}

