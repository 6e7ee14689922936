//! Mahler measures, absolute Weil heights and Kronecker's test.
//!
//! Heights are absolute: `H(a) = M(f)^(1/deg f)` with `f` the primitive
//! minimal polynomial of `a`. The height relative to a field of degree `D`
//! is `H^D`.

mod enumerate;

use rug::{Float, Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_unit, min_poly, FieldElement};
use crate::interval::{format_error, format_float, format_rational, Interval};
use crate::poly::{conjugate_ratio_poly, factor_int_poly, is_irreducible, real_root_count, IntPoly, DEFAULT_DEGREE_CAP};
use crate::roots::{digits_to_bits, eval_int_poly, isolate_at, isolate_roots, PrecisionContext, RootBox};

pub use enumerate::{
    enumerate_bounded_height, search_equal_modulus_units, EnumEntry, EnumerationOptions, DEFAULT_ENUMERATION_BUDGET,
};

/// Height or Mahler measure with a certified error radius. `exact` is set
/// when the value is a known rational.
#[derive(Clone, Debug, PartialEq)]
pub struct HeightValue {
    pub value: Float,
    pub error: Float,
    pub exact: Option<Rational>,
}

impl HeightValue {
    pub fn exact(q: Rational) -> HeightValue {
        HeightValue { value: Float::with_val(256, &q), error: Float::new(256), exact: Some(q) }
    }

    pub fn from_interval(x: &Interval) -> HeightValue {
        HeightValue { value: x.mid(), error: x.rad(), exact: None }
    }

    pub fn interval(&self) -> Interval {
        match &self.exact {
            Some(q) => Interval::from_rational(q, self.value.prec().max(64)),
            None => Interval::ball(&self.value, &self.error),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn is_exactly_one(&self) -> bool {
        self.exact.as_ref().is_some_and(|q| *q == 1)
    }

    /// `H^n`, e.g. the height relative to a field of degree `n`.
    pub fn pow(&self, n: u32) -> HeightValue {
        match &self.exact {
            Some(q) => HeightValue::exact(Rational::from(rug::ops::Pow::pow(q, n as i32))),
            None => HeightValue::from_interval(&self.interval().pow(n)),
        }
    }

    /// `H^(1/n)` for `H >= 0`.
    pub fn root(&self, n: u32) -> HeightValue {
        if n == 1 || self.is_exactly_one() {
            return self.clone();
        }
        let i = self.interval();
        let i = Interval::new(i.lo().clone().max(&Float::new(i.prec())), i.hi().clone());
        HeightValue::from_interval(&i.root(n).expect("nonnegative"))
    }

    pub fn summary(&self, places: usize) -> HeightSummary {
        match &self.exact {
            Some(q) => HeightSummary {
                value: if *q.denom() == 1 { q.numer().to_string() } else { format_rational(q, places) },
                error: "0".into(),
                exact: true,
            },
            None => HeightSummary {
                value: format_float(&self.value, places),
                error: format_error(&self.error),
                exact: false,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightSummary {
    pub value: String,
    pub error: String,
    pub exact: bool,
}

/// Anything with a primitive irreducible minimal polynomial over the integers.
pub trait Algebraic {
    /// Primitive, irreducible, positive leading coefficient.
    fn minimal_polynomial(&self) -> IntPoly;
}

impl Algebraic for FieldElement {
    fn minimal_polynomial(&self) -> IntPoly {
        min_poly(self).primitive_integer()
    }
}

/// A root of an irreducible integer polynomial, selected by its isolating box.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicNumber {
    pub min_poly: IntPoly,
    pub root: RootBox,
}

impl AlgebraicNumber {
    /// The root with index `index` in the usual embedding order (reals
    /// ascending, upper half plane, then conjugates).
    pub fn new(f: &IntPoly, index: usize) -> Result<AlgebraicNumber> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.degree() == 0 {
            return Err(Error::InvalidInput("minimal polynomial must have degree >= 1".into()));
        }
        let f = f.primitive_part();
        if !is_irreducible(&f, DEFAULT_DEGREE_CAP)? {
            return Err(Error::Reducible { factor: factor_int_poly(&f, DEFAULT_DEGREE_CAP)?.factors[0].0.to_string() });
        }
        let boxes = isolate_roots(&f, &PrecisionContext::default())?;
        let root = boxes
            .get(index)
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("root index {index} out of range for degree {}", f.degree())))?;
        Ok(AlgebraicNumber { min_poly: f, root })
    }
}

impl Algebraic for AlgebraicNumber {
    fn minimal_polynomial(&self) -> IntPoly {
        self.min_poly.clone()
    }
}

fn max_one(x: &Interval) -> Interval {
    let one = Float::with_val(x.prec(), 1);
    Interval::new(x.lo().clone().max(&one), x.hi().clone().max(&one))
}

/// Certified `M(g)` for a squarefree `g` at `digits`, plus its exact integer
/// value when every root is certified on one side of the unit circle.
pub(crate) struct MahlerAt {
    pub value: Interval,
    pub exact: Option<Integer>,
}

pub(crate) fn mahler_squarefree_at(g: &IntPoly, digits: u32) -> Result<Option<MahlerAt>> {
    let s = real_root_count(g)?;
    let Some(boxes) = isolate_at(g, s, digits) else { return Ok(None) };
    let prec = digits_to_bits(digits);
    let one = Float::with_val(prec, 1);
    let mut acc = Interval::from_int(&g.lc().abs(), prec);
    let (mut inside, mut outside) = (0, 0);
    for b in &boxes {
        let m = b.enclosure().abs();
        if *m.hi() < one {
            inside += 1;
        } else if *m.lo() > one {
            outside += 1;
        }
        acc = acc.mul(&max_one(&m));
    }
    let exact = if inside == boxes.len() {
        Some(g.lc().abs())
    } else if outside == boxes.len() {
        Some(g.coeff(0).abs())
    } else {
        None
    };
    Ok(Some(MahlerAt { value: acc, exact }))
}

/// `M(f) = |lc f| prod max(1, |a_i|)` within `eps`.
pub fn mahler_measure(f: &IntPoly, eps: &Rational) -> Result<HeightValue> {
    mahler_measure_with(f, eps, &PrecisionContext::default())
}

pub fn mahler_measure_with(f: &IntPoly, eps: &Rational, ctx: &PrecisionContext) -> Result<HeightValue> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = f.content().abs();
    let parts = f.squarefree_decomposition();
    if parts.is_empty() {
        return Ok(HeightValue::exact(Rational::from(content)));
    }
    if parts.iter().all(|(g, _)| g.degree() == 1) {
        let mut m = content;
        for (g, e) in &parts {
            m *= Integer::from(rug::ops::Pow::pow(g.coeff(0).abs().max(g.lc().abs()), *e));
        }
        return Ok(HeightValue::exact(Rational::from(m)));
    }
    for level in ctx.levels() {
        let mut acc = Interval::from_int(&content, digits_to_bits(level));
        let mut done = true;
        for (g, e) in &parts {
            match mahler_squarefree_at(g, level)? {
                Some(m) => acc = acc.mul(&m.value.pow(*e)),
                None => {
                    done = false;
                    break;
                }
            }
        }
        if done && acc.rad() <= *eps {
            return Ok(HeightValue::from_interval(&acc));
        }
    }
    Err(Error::PrecisionExhausted { digits: ctx.max_digits, context: format!("Mahler measure of {f}") })
}

fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Exact Kronecker test for a primitive irreducible `f`: some `n` with
/// `phi(n) = deg f` and `f | x^n - 1`. Since `phi(n) >= sqrt(n/2)`, `n`
/// ranges up to `2 deg^2`.
pub fn is_cyclotomic(f: &IntPoly) -> bool {
    let d = f.degree();
    if d == 0 || f.coeff(0) == 0 {
        return false;
    }
    let lc = f.lc();
    if lc != 1 && lc != -1 {
        return false;
    }
    let monic: Vec<Integer> = f.coeffs().iter().map(|c| Integer::from(c * &lc)).collect();
    // r = x^n mod f, as coefficients of 1..x^(d-1)
    let mut r = vec![Integer::new(); d];
    r[0] = Integer::from(1);
    for n in 1..=(2 * d * d) as u64 {
        let top = r[d - 1].clone();
        for i in (1..d).rev() {
            r[i] = r[i - 1].clone();
        }
        r[0] = Integer::new();
        if top != 0 {
            for (ri, ci) in r.iter_mut().zip(&monic) {
                *ri -= Integer::from(&top * ci);
            }
        }
        if totient(n) == d as u64 && r[0] == 1 && r[1..].iter().all(|c| *c == 0) {
            return true;
        }
    }
    false
}

pub fn is_root_of_unity<A: Algebraic>(a: &A) -> bool {
    is_cyclotomic(&a.minimal_polynomial())
}

/// `M(f)^(1/deg f)` for a primitive irreducible `f`; exact when `f` is
/// linear or cyclotomic.
pub fn height_of_min_poly(f: &IntPoly, eps: &Rational) -> Result<HeightValue> {
    let d = f.degree();
    if d == 0 {
        return Err(Error::InvalidInput("constant minimal polynomial".into()));
    }
    if d == 1 {
        return Ok(HeightValue::exact(Rational::from(f.coeff(0).abs().max(f.coeff(1).abs()))));
    }
    if is_cyclotomic(f) {
        return Ok(HeightValue::exact(Rational::from(1)));
    }
    Ok(mahler_measure(f, eps)?.root(d as u32))
}

/// Absolute multiplicative height; `H(0) = 1`.
pub fn height_algebraic<A: Algebraic>(a: &A, eps: &Rational) -> Result<HeightValue> {
    height_of_min_poly(&a.minimal_polynomial(), eps)
}

/// Height of the point `[c_0 : ... : c_n]` over the rationals: clear
/// denominators, remove the common gcd, take the largest absolute value.
pub fn projective_height_rational(coords: &[Rational]) -> Result<Integer> {
    if coords.iter().all(|c| *c == 0) {
        return Err(Error::InvalidInput("projective point needs a nonzero coordinate".into()));
    }
    let mut l = Integer::from(1);
    for c in coords {
        l.lcm_mut(c.denom());
    }
    let ints: Vec<Integer> = coords.iter().map(|c| Integer::from(c.numer() * Integer::from(l.div_exact_ref(c.denom())))).collect();
    let mut g = Integer::new();
    for c in &ints {
        g.gcd_mut(c);
    }
    Ok(ints.iter().map(|c| Integer::from(c / &g).abs()).max().expect("nonempty"))
}

/// Height of `sigma_{s+2}(u) / sigma_{s+1}(u)`, the affine coordinate of the
/// point `[sigma_{s+1}(u) : sigma_{s+2}(u)]`; requires `t = 2`. Every
/// non-archimedean place contributes 1 because both coordinates are units.
pub fn unit_point_height(u: &FieldElement, eps: &Rational, degree_cap: usize) -> Result<HeightValue> {
    let (s, t) = u.field().signature();
    if t != 2 {
        return Err(Error::InvalidSignature { s, t, reason: "unit point height needs exactly two complex places".into() });
    }
    ratio_height(u, 1, eps, degree_cap).map(|(h, _)| h)
}

/// Heights of `sigma_{s+k}(u) / sigma_{s+1}(u)` for `k = 2..t`, each with the
/// minimal polynomial of the ratio. A substitute for the joint height of the
/// whole point when `t >= 3`.
pub fn unit_ratio_heights(u: &FieldElement, eps: &Rational, degree_cap: usize) -> Result<Vec<(HeightValue, IntPoly)>> {
    let (s, t) = u.field().signature();
    if t < 2 {
        return Err(Error::InvalidSignature { s, t, reason: "ratio heights need at least two complex places".into() });
    }
    (1..t).map(|k| ratio_height(u, k, eps, degree_cap)).collect()
}

/// The ratio's minimal polynomial is the unique irreducible factor of the
/// squarefree ratio polynomial not certified nonzero at the ratio.
pub fn ratio_height(u: &FieldElement, k: usize, eps: &Rational, degree_cap: usize) -> Result<(HeightValue, IntPoly)> {
    if u.is_zero() || !is_unit(u)? {
        return Err(Error::NotUnit);
    }
    let field = u.field();
    let (s, t) = field.signature();
    if k == 0 || k >= t {
        return Err(Error::InvalidInput(format!("ratio index {k} out of range for t = {t}")));
    }
    let x_minus_one = IntPoly::from_i64s(&[-1, 1]);
    if u.as_rational().is_some() {
        return Ok((HeightValue::exact(Rational::from(1)), x_minus_one));
    }
    let m = u.minimal_polynomial();
    let r_poly = conjugate_ratio_poly(&m)?.squarefree_part()?;
    let factors = factor_int_poly(&r_poly, degree_cap)?.factors;
    for level in field.ctx().levels() {
        let (_, emb) = field.embed_at(u, level)?;
        let Some(r) = emb[s + k].div(&emb[s]) else { continue };
        let live: Vec<&IntPoly> = factors.iter().map(|(g, _)| g).filter(|g| eval_int_poly(g, &r).contains_zero()).collect();
        match live.len() {
            0 => return Err(Error::Internal("ratio is not a root of its ratio polynomial".into())),
            1 => return Ok((height_of_min_poly(live[0], eps)?, live[0].clone())),
            _ => continue,
        }
    }
    Err(Error::PrecisionExhausted { digits: field.ctx().max_digits, context: "identifying the ratio's minimal polynomial".into() })
}
