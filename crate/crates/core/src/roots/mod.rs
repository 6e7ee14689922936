//! Certified complex root isolation.
//!
//! Roots are approximated by Aberth–Ehrlich iteration and then certified with
//! inclusion disks: for approximations `z_1..z_d` of the roots of `f` the disk
//! around `z_i` of radius `d |f(z_i)| / (|lc f| prod_{j != i} |z_i - z_j|)`
//! contains a root, and a connected union of `m` such disks contains exactly
//! `m` roots. Pairwise disjoint disks therefore isolate one root each. Real
//! roots are reconciled with the exact Sturm count, and disks centered on the
//! real axis contain a real root by conjugate symmetry.

mod aberth;
mod separation;

use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{format_error, format_float, CInterval, Interval};
use crate::poly::{real_root_count, IntPoly, RatPoly};

pub use separation::{root_separation_bound, SeparationBound};

/// Numeric precision policy, in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    pub working_digits: u32,
    pub escalation_factor: u32,
    pub max_digits: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext { working_digits: 64, escalation_factor: 2, max_digits: 4096 }
    }
}

impl PrecisionContext {
    pub fn new(working_digits: u32, escalation_factor: u32, max_digits: u32) -> Result<Self> {
        if working_digits < 32 {
            return Err(Error::InvalidInput(format!("working digits {working_digits} < 32")));
        }
        if max_digits < working_digits {
            return Err(Error::InvalidInput(format!(
                "max digits {max_digits} below working digits {working_digits}"
            )));
        }
        if escalation_factor < 2 {
            return Err(Error::InvalidInput("escalation factor must be at least 2".into()));
        }
        Ok(PrecisionContext { working_digits, escalation_factor, max_digits })
    }

    /// Digit levels tried in order: working, working*factor, ..., max.
    pub fn levels(&self) -> Vec<u32> {
        self.levels_from(self.working_digits)
    }

    /// Levels strictly above `digits`, ending at `max_digits`.
    pub fn levels_above(&self, digits: u32) -> Vec<u32> {
        let next = digits.saturating_mul(self.escalation_factor);
        if digits >= self.max_digits {
            return Vec::new();
        }
        self.levels_from(next.min(self.max_digits))
    }

    fn levels_from(&self, start: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut d = start;
        loop {
            out.push(d.min(self.max_digits));
            if d >= self.max_digits {
                return out;
            }
            d = d.saturating_mul(self.escalation_factor);
        }
    }
}

/// Binary precision used for `digits` decimal digits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Real,
    ComplexUpper,
    ComplexLower,
}

/// A closed disk containing exactly one root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBox {
    pub center_re: Float,
    /// exactly zero for real roots
    pub center_im: Float,
    pub radius: Float,
    pub kind: RootKind,
    pub pair_id: Option<usize>,
    pub digits: u32,
}

impl RootBox {
    /// Rectangle enclosing the disk; the imaginary part is `[0, 0]` for real
    /// roots.
    pub fn enclosure(&self) -> CInterval {
        if self.kind == RootKind::Real {
            CInterval::real(self.real_interval())
        } else {
            CInterval::disk(&self.center_re, &self.center_im, &self.radius)
        }
    }

    /// Enclosure of the real part.
    pub fn real_interval(&self) -> Interval {
        Interval::ball(&self.center_re, &self.radius)
    }

    /// Rigorous test that the two disks share a point.
    fn meets(&self, o: &RootBox) -> bool {
        let (a, b) = (self.center_point(), o.center_point());
        let dist = a.sub(&b).abs();
        let reach = Interval::point(self.radius.clone()).add(&Interval::point(o.radius.clone()));
        dist.lo() <= reach.hi()
    }

    fn center_point(&self) -> CInterval {
        CInterval::new(Interval::point(self.center_re.clone()), Interval::point(self.center_im.clone()))
    }

    pub fn to_summary(&self, places: usize) -> RootSummary {
        RootSummary {
            re: format_float(&self.center_re, places),
            im: format_float(&self.center_im, places),
            radius: format_error(&self.radius),
            kind: self.kind,
            pair_id: self.pair_id,
        }
    }
}

/// Serializable view of a `RootBox`.
#[derive(Clone, Debug, Serialize)]
pub struct RootSummary {
    pub re: String,
    pub im: String,
    pub radius: String,
    pub kind: RootKind,
    pub pair_id: Option<usize>,
}

pub fn eval_int_poly(f: &IntPoly, z: &CInterval) -> CInterval {
    let p = z.prec();
    let mut acc = CInterval::real(Interval::zero(p));
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CInterval::real(Interval::from_int(c, p)));
    }
    acc
}

pub fn eval_rat_poly(f: &RatPoly, z: &CInterval) -> CInterval {
    let p = z.prec();
    let mut acc = CInterval::real(Interval::zero(p));
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CInterval::from_rational(c, p));
    }
    acc
}

pub fn eval_rat_poly_real(f: &RatPoly, x: &Interval) -> Interval {
    let p = x.prec();
    let mut acc = Interval::zero(p);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Interval::from_rational(c, p));
    }
    acc
}

struct Candidate {
    re: Float,
    im: Float,
    kind: RootKind,
}

/// One certification attempt at `digits`; `None` when the disks produced at
/// this precision are not disjoint or not consistent with the `s` real roots.
pub(crate) fn isolate_at(f: &IntPoly, s: usize, digits: u32) -> Option<Vec<RootBox>> {
    let d = f.degree();
    let bits = digits_to_bits(digits);
    let mut approx = aberth::approximate_roots(f, bits);
    approx.sort_by(|a, b| a.im.cmp_abs(&b.im).unwrap_or(Ordering::Equal));
    let mut cands: Vec<Candidate> = Vec::with_capacity(d);
    for z in &approx[..s] {
        cands.push(Candidate { re: z.re.clone(), im: Float::new(bits), kind: RootKind::Real });
    }
    let uppers: Vec<_> = approx[s..].iter().filter(|z| z.im > 0).collect();
    if 2 * uppers.len() != d - s {
        return None;
    }
    for z in &uppers {
        cands.push(Candidate { re: z.re.clone(), im: z.im.clone(), kind: RootKind::ComplexUpper });
    }
    for z in &uppers {
        cands.push(Candidate { re: z.re.clone(), im: Float::with_val(bits, -&z.im), kind: RootKind::ComplexLower });
    }

    let points: Vec<CInterval> = cands
        .iter()
        .map(|c| CInterval::new(Interval::point(c.re.clone()), Interval::point(c.im.clone())))
        .collect();
    let lc = Interval::from_int(&f.lc(), bits).abs();
    let dd = Interval::from_i64(d as i64, bits);
    let mut radii = Vec::with_capacity(d);
    for i in 0..d {
        let val = eval_int_poly(f, &points[i]).abs();
        let mut prod = lc.clone();
        for j in 0..d {
            if j != i {
                prod = prod.mul(&points[i].sub(&points[j]).abs());
            }
        }
        let w = val.div(&prod)?;
        radii.push(w.mul(&dd).hi().clone());
    }
    // conjugate disks share the larger radius
    let t = (d - s) / 2;
    for k in 0..t {
        let (u, l) = (s + k, s + t + k);
        let r = if radii[u] > radii[l] { radii[u].clone() } else { radii[l].clone() };
        radii[u] = r.clone();
        radii[l] = r;
    }
    for i in 0..d {
        for j in i + 1..d {
            let dist = points[i].sub(&points[j]).abs();
            let reach = Interval::point(radii[i].clone()).add(&Interval::point(radii[j].clone()));
            if dist.lo() <= reach.hi() {
                return None;
            }
        }
    }
    for k in 0..t {
        if radii[s + k] >= cands[s + k].im {
            return None;
        }
    }

    let mut boxes: Vec<RootBox> = cands
        .into_iter()
        .zip(radii)
        .map(|(c, r)| RootBox {
            center_re: c.re,
            center_im: c.im,
            radius: Float::with_val_round(bits, &r, Round::Up).0,
            kind: c.kind,
            pair_id: None,
            digits,
        })
        .collect();
    order_boxes(&mut boxes, s);
    Some(boxes)
}

fn upper_cmp(a: &RootBox, b: &RootBox) -> Ordering {
    match a.real_interval().certainly_cmp(&b.real_interval()) {
        Some(o) => o,
        None => a.center_im.partial_cmp(&b.center_im).unwrap_or(Ordering::Equal),
    }
}

/// Embedding order: real roots ascending, then upper-half-plane
/// representatives by (real part, imaginary part), then their conjugates.
fn order_boxes(boxes: &mut Vec<RootBox>, s: usize) {
    let t = (boxes.len() - s) / 2;
    let mut reals: Vec<RootBox> = boxes[..s].to_vec();
    reals.sort_by(|a, b| a.center_re.partial_cmp(&b.center_re).unwrap_or(Ordering::Equal));
    let mut uppers: Vec<RootBox> = boxes[s..s + t].to_vec();
    uppers.sort_by(upper_cmp);
    let mut out = reals;
    for (k, u) in uppers.iter_mut().enumerate() {
        u.pair_id = Some(k);
    }
    let lowers: Vec<RootBox> = uppers
        .iter()
        .map(|u| RootBox {
            center_im: Float::with_val(u.center_im.prec(), -&u.center_im),
            kind: RootKind::ComplexLower,
            ..u.clone()
        })
        .collect();
    out.extend(uppers);
    out.extend(lowers);
    *boxes = out;
}

fn check_input(f: &IntPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::InvalidInput("constant polynomial has no roots".into()));
    }
    real_root_count(f)
}

/// Isolates all complex roots of the squarefree `f`, escalating precision
/// until the inclusion disks are disjoint.
pub fn isolate_roots(f: &IntPoly, ctx: &PrecisionContext) -> Result<Vec<RootBox>> {
    let s = check_input(f)?;
    for digits in ctx.levels() {
        if let Some(b) = isolate_at(f, s, digits) {
            return Ok(b);
        }
    }
    Err(Error::PrecisionExhausted { digits: ctx.max_digits, context: format!("isolating the roots of {f}") })
}

/// Transfers the labels of `base` to a finer isolation: each base disk must
/// meet exactly one fine disk, which then holds the same root.
pub(crate) fn relabel(base: &[RootBox], fine: &[RootBox]) -> Option<Vec<RootBox>> {
    base.iter()
        .map(|b| {
            let mut hits = fine.iter().filter(|x| x.meets(b));
            let hit = hits.next()?;
            if hits.next().is_some() {
                return None;
            }
            Some(RootBox { kind: b.kind, pair_id: b.pair_id, ..hit.clone() })
        })
        .collect()
}

/// Re-isolates the root in `rb` until its radius is at most `eps`.
pub fn refine_root(f: &IntPoly, rb: &RootBox, eps: &Rational, ctx: &PrecisionContext) -> Result<RootBox> {
    if rb.radius <= *eps {
        return Ok(rb.clone());
    }
    let s = check_input(f)?;
    let base = std::slice::from_ref(rb);
    for digits in ctx.levels_above(rb.digits) {
        let Some(fine) = isolate_at(f, s, digits) else { continue };
        if let Some(mut v) = relabel(base, &fine) {
            let b = v.pop().expect("one box");
            if b.radius <= *eps {
                return Ok(b);
            }
        }
    }
    Err(Error::PrecisionExhausted { digits: ctx.max_digits, context: format!("refining a root of {f}") })
}

/// Sign of `value(alpha)` where `alpha` is the real root of `g` isolated by
/// `rb`. The value must be nonzero; a zero value exhausts precision.
pub fn certified_sign(g: &IntPoly, rb: &RootBox, value: &RatPoly, ctx: &PrecisionContext) -> Result<i32> {
    if rb.kind != RootKind::Real {
        return Err(Error::InvalidInput("certified_sign needs a real root".into()));
    }
    let mut cur = rb.clone();
    loop {
        let bits = digits_to_bits(cur.digits);
        let x = Interval::ball(&Float::with_val(bits, &cur.center_re), &cur.radius);
        if let Some(sg) = eval_rat_poly_real(value, &x).sign() {
            return Ok(sg);
        }
        let Some(&next) = ctx.levels_above(cur.digits).first() else {
            return Err(Error::PrecisionExhausted {
                digits: ctx.max_digits,
                context: "sign of a real embedding value".into(),
            });
        };
        let s = check_input(g)?;
        let fine = isolate_at(g, s, next).and_then(|fine| relabel(std::slice::from_ref(&cur), &fine));
        match fine {
            Some(mut v) => cur = v.pop().expect("one box"),
            None => cur.digits = next,
        }
    }
}
