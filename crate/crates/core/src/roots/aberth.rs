//! Aberth–Ehrlich simultaneous iteration in plain (non-interval) MPFR
//! arithmetic. Output is only an approximation; certification happens in the
//! caller.

use rug::float::Constant;
use rug::Float;

use crate::poly::IntPoly;

const COLD_BITS: u32 = 128;
const COLD_ITERATIONS: usize = 2000;
const WARM_ITERATIONS: usize = 60;

#[derive(Clone, Debug)]
pub(crate) struct Cf {
    pub re: Float,
    pub im: Float,
}

impl Cf {
    fn new(prec: u32) -> Cf {
        Cf { re: Float::new(prec), im: Float::new(prec) }
    }

    fn with_prec(&self, prec: u32) -> Cf {
        Cf { re: Float::with_val(prec, &self.re), im: Float::with_val(prec, &self.im) }
    }

    fn add(&self, o: &Cf) -> Cf {
        let p = self.re.prec();
        Cf { re: Float::with_val(p, &self.re + &o.re), im: Float::with_val(p, &self.im + &o.im) }
    }

    fn sub(&self, o: &Cf) -> Cf {
        let p = self.re.prec();
        Cf { re: Float::with_val(p, &self.re - &o.re), im: Float::with_val(p, &self.im - &o.im) }
    }

    fn mul(&self, o: &Cf) -> Cf {
        let p = self.re.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Cf { re, im }
    }

    fn norm_sq(&self) -> Float {
        let p = self.re.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.re.prec(), self.re.hypot_ref(&self.im))
    }

    /// `None` on division by an exact zero.
    fn div(&self, o: &Cf) -> Option<Cf> {
        let n = o.norm_sq();
        if n.is_zero() {
            return None;
        }
        let conj = Cf { re: o.re.clone(), im: Float::with_val(o.im.prec(), -&o.im) };
        let num = self.mul(&conj);
        Some(Cf { re: num.re / &n, im: num.im / &n })
    }

    fn one(prec: u32) -> Cf {
        Cf { re: Float::with_val(prec, 1), im: Float::new(prec) }
    }
}

/// `(f(z), f'(z))` by Horner.
fn horner(coeffs: &[Float], z: &Cf) -> (Cf, Cf) {
    let p = z.re.prec();
    let mut val = Cf::new(p);
    let mut der = Cf::new(p);
    for c in coeffs.iter().rev() {
        der = der.mul(z).add(&val);
        val = val.mul(z);
        val.re += c;
    }
    (val, der)
}

fn initial_points(f: &IntPoly, prec: u32) -> Vec<Cf> {
    let d = f.degree();
    let lc = Float::with_val(prec, f.lc()).abs();
    let mut r = Float::new(prec);
    for i in 0..d {
        let a = f.coeff(i);
        if a == 0 {
            continue;
        }
        let ratio = Float::with_val(prec, &a).abs() / &lc;
        let root = Float::with_val(prec, ratio.root_ref((d - i) as u32));
        if root > r {
            r = root;
        }
    }
    if r.is_zero() {
        r = Float::with_val(prec, 1);
    }
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    (0..d)
        .map(|k| {
            // offset breaks the symmetry of the circle with the real axis
            let angle = Float::with_val(prec, &two_pi * k as u32) / d as u32 + Float::with_val(prec, 0.7f64);
            let (s, c) = angle.sin_cos(Float::new(prec));
            Cf { re: Float::with_val(prec, &r * &c), im: Float::with_val(prec, &r * &s) }
        })
        .collect()
}

/// `sum |a_i| |z|^i`, the scale of the rounding error in `horner`.
fn abs_horner(coeffs: &[Float], z: &Cf) -> Float {
    let r = z.abs();
    let mut acc = Float::new(r.prec());
    for c in coeffs.iter().rev() {
        acc = acc * &r + Float::with_val(r.prec(), c.abs_ref());
    }
    acc
}

fn iterate(coeffs: &[Float], z: &mut [Cf], prec: u32, max_iter: usize) {
    let d = z.len();
    let tol_exp = -(prec as i32) + 6;
    // |f(z)| below this multiple of the rounding scale is numerically a root
    let noise = Float::with_val(prec, Float::i_exp(1, -(prec as i32))) * (8 * d as u32);
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..d {
            let (val, der) = horner(coeffs, &z[i]);
            if val.re.is_zero() && val.im.is_zero() {
                continue;
            }
            let at_noise_floor = val.abs() <= Float::with_val(prec, &noise * &abs_horner(coeffs, &z[i]));
            let Some(ratio) = val.div(&der) else {
                converged = false;
                // nudge off a critical point
                z[i].re += Float::with_val(prec, Float::i_exp(1, tol_exp / 2));
                continue;
            };
            let mut sum = Cf::new(prec);
            for j in 0..d {
                if j != i {
                    if let Some(inv) = Cf::one(prec).div(&z[i].sub(&z[j])) {
                        sum = sum.add(&inv);
                    }
                }
            }
            let denom = Cf::one(prec).sub(&ratio.mul(&sum));
            let w = ratio.div(&denom).unwrap_or(ratio);
            let scale = {
                let a = z[i].abs();
                if a > 1 {
                    a
                } else {
                    Float::with_val(prec, 1)
                }
            };
            let tol = Float::with_val(prec, Float::i_exp(1, tol_exp)) * &scale;
            if w.abs() > tol && !at_noise_floor {
                converged = false;
            }
            z[i] = z[i].sub(&w);
        }
        if converged {
            break;
        }
    }
}

/// Approximations of all complex roots of `f` at `bits` of precision.
pub(crate) fn approximate_roots(f: &IntPoly, bits: u32) -> Vec<Cf> {
    let cold = COLD_BITS.min(bits);
    let coeffs: Vec<Float> = f.coeffs().iter().map(|c| Float::with_val(cold, c)).collect();
    let mut z = initial_points(f, cold);
    iterate(&coeffs, &mut z, cold, COLD_ITERATIONS);
    if bits > cold {
        let coeffs: Vec<Float> = f.coeffs().iter().map(|c| Float::with_val(bits, c)).collect();
        let mut warm: Vec<Cf> = z.iter().map(|c| c.with_prec(bits)).collect();
        iterate(&coeffs, &mut warm, bits, WARM_ITERATIONS);
        z = warm;
    }
    z
}
