//! Outward-rounded real and complex interval arithmetic on MPFR floats.
//!
//! Every operation rounds the lower endpoint down and the upper endpoint up,
//! so the exact result of the operation on any points of the inputs lies in
//! the output. Operations run at the larger precision of their operands.

use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Integer, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

fn down<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Down).0
}

fn up<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

fn min_f(a: Float, b: Float) -> Float {
    if b < a {
        b
    } else {
        a
    }
}

fn max_f(a: Float, b: Float) -> Float {
    if b > a {
        b
    } else {
        a
    }
}

impl Interval {
    /// `lo <= hi` is required.
    pub fn new(lo: Float, hi: Float) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero(prec: u32) -> Self {
        Self::point(Float::new(prec))
    }

    pub fn from_int(n: &Integer, prec: u32) -> Self {
        Interval { lo: down(prec, n), hi: up(prec, n) }
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_int(&Integer::from(n), prec)
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Interval { lo: down(prec, q), hi: up(prec, q) }
    }

    /// `[c - r, c + r]`.
    pub fn ball(c: &Float, r: &Float) -> Self {
        let prec = c.prec().max(r.prec());
        Interval { lo: down(prec, c - r), hi: up(prec, c + r) }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    fn prec2(&self, o: &Interval) -> u32 {
        self.prec().max(o.prec())
    }

    pub fn add(&self, o: &Interval) -> Interval {
        let p = self.prec2(o);
        Interval { lo: down(p, &self.lo + &o.lo), hi: up(p, &self.hi + &o.hi) }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        let p = self.prec2(o);
        Interval { lo: down(p, &self.lo - &o.hi), hi: up(p, &self.hi - &o.lo) }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: Float::with_val(self.hi.prec(), -&self.hi), hi: Float::with_val(self.lo.prec(), -&self.lo) }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = self.prec2(o);
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo = down(p, pairs[0].0 * pairs[0].1);
        let mut hi = up(p, pairs[0].0 * pairs[0].1);
        for (a, b) in &pairs[1..] {
            lo = min_f(lo, down(p, *a * *b));
            hi = max_f(hi, up(p, *a * *b));
        }
        Interval { lo, hi }
    }

    pub fn mul_int(&self, k: &Integer) -> Interval {
        self.mul(&Interval::from_int(k, self.prec()))
    }

    pub fn sqr(&self) -> Interval {
        let p = self.prec();
        if self.contains_zero() {
            let m = max_f(up(p, self.lo.abs_ref()), up(p, self.hi.abs_ref()));
            Interval { lo: Float::new(p), hi: up(p, m.square_ref()) }
        } else {
            let (a, b) = (self.mig(), self.mag());
            Interval { lo: down(p, a.square_ref()), hi: up(p, b.square_ref()) }
        }
    }

    /// `None` when the divisor contains zero.
    pub fn div(&self, o: &Interval) -> Option<Interval> {
        if o.contains_zero() {
            return None;
        }
        let p = self.prec2(o);
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo = down(p, pairs[0].0 / pairs[0].1);
        let mut hi = up(p, pairs[0].0 / pairs[0].1);
        for (a, b) in &pairs[1..] {
            lo = min_f(lo, down(p, *a / *b));
            hi = max_f(hi, up(p, *a / *b));
        }
        Some(Interval { lo, hi })
    }

    pub fn abs(&self) -> Interval {
        let p = self.prec();
        if self.contains_zero() {
            Interval { lo: Float::new(p), hi: self.mag() }
        } else {
            Interval { lo: self.mig(), hi: self.mag() }
        }
    }

    /// Square root of the nonnegative part.
    pub fn sqrt(&self) -> Interval {
        let p = self.prec();
        let lo = if self.lo > 0 { down(p, self.lo.sqrt_ref()) } else { Float::new(p) };
        let hi = if self.hi > 0 { up(p, self.hi.sqrt_ref()) } else { Float::new(p) };
        Interval { lo, hi }
    }

    /// `None` unless the interval is strictly positive.
    pub fn ln(&self) -> Option<Interval> {
        if !self.is_positive() {
            return None;
        }
        let p = self.prec();
        Some(Interval { lo: down(p, self.lo.ln_ref()), hi: up(p, self.hi.ln_ref()) })
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec();
        Interval { lo: down(p, self.lo.exp_ref()), hi: up(p, self.hi.exp_ref()) }
    }

    /// `x^(1/n)` for a strictly positive interval.
    pub fn root(&self, n: u32) -> Option<Interval> {
        if n == 1 {
            return Some(self.clone());
        }
        let p = self.prec();
        if !self.is_positive() {
            return None;
        }
        let lo = down(p, self.lo.root_ref(n));
        let hi = up(p, self.hi.root_ref(n));
        Some(Interval { lo, hi })
    }

    pub fn pow(&self, n: u32) -> Interval {
        let mut acc = Interval::from_i64(1, self.prec());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }

    /// Upper bound of `|x|` over the interval.
    pub fn mag(&self) -> Float {
        let p = self.prec();
        max_f(up(p, self.lo.abs_ref()), up(p, self.hi.abs_ref()))
    }

    /// Lower bound of `|x|` over the interval.
    pub fn mig(&self) -> Float {
        let p = self.prec();
        if self.contains_zero() {
            Float::new(p)
        } else {
            min_f(down(p, self.lo.abs_ref()), down(p, self.hi.abs_ref()))
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.lo <= *q && self.hi >= *q
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0
    }

    /// `Some(sign)` once zero is excluded.
    pub fn sign(&self) -> Option<i32> {
        if self.is_positive() {
            Some(1)
        } else if self.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn mid(&self) -> Float {
        let p = self.prec() + 1;
        Float::with_val(p, &self.lo + &self.hi) / 2u32
    }

    /// Upper bound of the distance from the midpoint to either endpoint.
    pub fn rad(&self) -> Float {
        let p = self.prec();
        let m = self.mid();
        max_f(up(p, &self.hi - &m), up(p, &m - &self.lo))
    }

    pub fn width(&self) -> Float {
        up(self.prec(), &self.hi - &self.lo)
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval { lo: min_f(self.lo.clone(), o.lo.clone()), hi: max_f(self.hi.clone(), o.hi.clone()) }
    }

    pub fn intersects(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    /// Certified strict comparison: `Some(Less)` when every point of `self` is
    /// below every point of `o`.
    pub fn certainly_cmp(&self, o: &Interval) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

/// Rectangular complex interval.
#[derive(Clone, Debug, PartialEq)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CInterval { re, im }
    }

    pub fn real(re: Interval) -> Self {
        let p = re.prec();
        CInterval { re, im: Interval::zero(p) }
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Self::real(Interval::from_rational(q, prec))
    }

    /// Axis-aligned box around the disk of radius `r` centered at `(re, im)`.
    pub fn disk(re: &Float, im: &Float, r: &Float) -> Self {
        CInterval { re: Interval::ball(re, r), im: Interval::ball(im, r) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> CInterval {
        CInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> CInterval {
        CInterval { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, k: &Interval) -> CInterval {
        CInterval { re: self.re.mul(k), im: self.im.mul(k) }
    }

    pub fn abs_sq(&self) -> Interval {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> Interval {
        self.abs_sq().sqrt()
    }

    pub fn div(&self, o: &CInterval) -> Option<CInterval> {
        let den = o.abs_sq();
        let num = self.mul(&o.conj());
        Some(CInterval { re: num.re.div(&den)?, im: num.im.div(&den)? })
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn intersects(&self, o: &CInterval) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn hull(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.hull(&o.re), im: self.im.hull(&o.im) }
    }

    /// Upper bound on the distance from the box midpoint to any point.
    pub fn rad(&self) -> Float {
        let p = self.prec();
        let (a, b) = (self.re.rad(), self.im.rad());
        up(p, a.hypot_ref(&b))
    }
}

/// Decimal rendering of `q` rounded to `places` digits after the point.
pub fn format_rational(q: &Rational, places: usize) -> String {
    let scale = Integer::from(Integer::u_pow_u(10, places as u32));
    let scaled = Rational::from(q * &scale);
    let (neg, abs) = (scaled < 0, Rational::from(scaled.abs_ref()));
    let mut n = abs.clone().floor().numer().clone();
    if Rational::from(&abs - &n) * 2u32 >= 1u32 {
        n += 1;
    }
    let digits = n.to_string();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (ip, fp) = padded.split_at(padded.len() - places);
        format!("{ip}.{fp}")
    };
    if neg && n != 0 {
        format!("-{body}")
    } else {
        body
    }
}

/// Decimal rendering of a float with `places` fractional digits.
pub fn format_float(x: &Float, places: usize) -> String {
    match x.to_rational() {
        Some(q) => format_rational(&q, places),
        None => x.to_string(),
    }
}

/// Short scientific rendering used for error radii, e.g. `"3.1e-70"`.
pub fn format_error(x: &Float) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let up2 = Float::with_val_round(24, x, Round::Up).0;
    let s = up2.to_string_radix(10, Some(2));
    // rug renders "3.1e-70" already; normalize an absent exponent
    if s.contains('e') {
        s
    } else {
        format!("{s}e0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn third_is_enclosed() {
        let t = Interval::from_rational(&q(1, 3), P);
        assert!(t.lo() < t.hi());
        assert!(t.contains_rational(&q(1, 3)));
        let three = t.mul_int(&Integer::from(3));
        assert!(three.contains_rational(&q(1, 1)));
    }

    #[test]
    fn sqrt2_squared_contains_two() {
        let s = Interval::from_i64(2, P).sqrt();
        assert!(s.sqr().contains_rational(&q(2, 1)));
        assert!(s.width() < Float::with_val(P, 1e-35));
    }

    #[test]
    fn division_by_zero_interval_is_refused() {
        let z = Interval::new(Float::with_val(P, -1), Float::with_val(P, 1));
        assert!(Interval::from_i64(1, P).div(&z).is_none());
    }

    #[test]
    fn complex_product_of_i_with_itself() {
        let i = CInterval::new(Interval::zero(P), Interval::from_i64(1, P));
        let m = i.mul(&i);
        assert!(m.re.contains_rational(&q(-1, 1)));
        assert!(m.im.contains_zero());
        assert!(i.abs().contains_rational(&q(1, 1)));
    }

    #[test]
    fn ln_and_exp_round_trip() {
        let x = Interval::from_rational(&q(7, 2), P);
        let y = x.ln().unwrap().exp();
        assert!(y.contains_rational(&q(7, 2)));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&q(1, 3), 5), "0.33333");
        assert_eq!(format_rational(&q(-2, 3), 3), "-0.667");
        assert_eq!(format_rational(&q(6, 1), 0), "6");
        assert_eq!(format_rational(&q(-1, 1000), 2), "0.00");
        assert_eq!(format_rational(&q(12345, 100), 1), "123.5");
    }
}
