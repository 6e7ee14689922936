//! Exact decisions about the archimedean absolute values of units.
//!
//! Every decision compares algebraic numbers that are roots of one known
//! squarefree integer polynomial `Q`. With enclosures narrower than half of a
//! root separation bound `delta` of `Q`, two such numbers are equal exactly
//! when their enclosures meet, so the numeric comparison is a proof.

mod subgroup;

use rug::ops::Pow;
use rug::{Float, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_unit, min_poly, FieldElement, NumberField};
use crate::interval::{format_error, format_float, format_rational, CInterval, Interval};
use crate::poly::{all_products_poly, IntPoly};
use crate::roots::{root_separation_bound, SeparationBound};

pub use subgroup::{analyze_subgroup, rank, GeneratorReport, RankReport, SubgroupReport, UnitSubgroup};

/// Evidence attached to a decision.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub method: CertificateMethod,
    pub precision_digits: u32,
    /// root separation bound of the polynomial whose roots are compared
    #[serde(serialize_with = "opt_rational")]
    pub separation_bound: Option<Rational>,
    /// for `false`: certified lower bound of the smallest gap between values
    /// found unequal; for `true`: certified upper bound of their spread
    #[serde(serialize_with = "opt_rational")]
    pub margin: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    /// fewer than two values to compare
    Vacuous,
    /// the element is rational, so every embedding agrees
    Rational,
    /// enclosures compared below the separation bound
    Separation,
    /// signs read from enclosures that exclude zero
    Sign,
}

fn opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(q) => s.serialize_str(&format_rational_sci(q)),
    }
}

/// Decimal rendering that keeps tiny bounds readable.
pub(crate) fn format_rational_sci(q: &Rational) -> String {
    if *q == 0 {
        return "0".into();
    }
    let f = Float::with_val(64, q);
    if f.clone().abs() >= 1e-3 {
        format_rational(q, 12)
    } else {
        format_error(&f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decision {
    pub value: bool,
    pub certificate: Certificate,
}

impl Decision {
    fn vacuous(value: bool, digits: u32) -> Decision {
        Decision {
            value,
            certificate: Certificate {
                method: CertificateMethod::Vacuous,
                precision_digits: digits,
                separation_bound: None,
                margin: None,
            },
        }
    }

    fn rational(digits: u32) -> Decision {
        Decision {
            value: true,
            certificate: Certificate {
                method: CertificateMethod::Rational,
                precision_digits: digits,
                separation_bound: None,
                margin: None,
            },
        }
    }
}

fn require_nonzero(u: &FieldElement) -> Result<()> {
    if u.is_zero() {
        Err(Error::InvalidInput("element must be nonzero".into()))
    } else {
        Ok(())
    }
}

fn float_to_rational(x: &Float) -> Rational {
    x.to_rational().unwrap_or_default()
}

/// Enclosures of `|sigma(u)|` for each archimedean place, real places first.
fn place_moduli(field: &NumberField, vals: &[CInterval]) -> Vec<Interval> {
    let (s, t) = field.signature();
    (0..s + t).map(|i| vals[i].abs()).collect()
}

/// `(n_i log |sigma_i(u)|)_i` over the `s + t` places with `n_i = 1` for real
/// and `2` for complex places, each enclosure narrower than `10^-w` for the
/// field's working digits `w`.
pub fn log_embedding(u: &FieldElement) -> Result<(u32, Vec<Interval>)> {
    log_embedding_at(u, u.field().ctx().working_digits)
}

/// As [`log_embedding`] with enclosures narrower than `10^-digits`. Returns
/// the isolation digits that achieved it.
pub fn log_embedding_at(u: &FieldElement, digits: u32) -> Result<(u32, Vec<Interval>)> {
    require_nonzero(u)?;
    if !is_unit(u)? {
        return Err(Error::NotUnit);
    }
    let field = u.field();
    let ctx = *field.ctx();
    let (s, _) = field.signature();
    let target = Float::with_val(64, Pow::pow(Float::with_val(64, 10), -(digits as i32)));
    let mut levels = vec![digits];
    levels.extend(ctx.levels_above(digits));
    for level in levels {
        let (used, vals) = field.embed_at(u, level)?;
        let mods = place_moduli(field, &vals);
        let logs: Option<Vec<Interval>> = mods
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let l = m.ln()?;
                Some(if i < s { l } else { l.mul_int(&rug::Integer::from(2)) })
            })
            .collect();
        if let Some(v) = logs {
            if v.iter().all(|x| x.width() <= target) {
                return Ok((used, v));
            }
        }
    }
    Err(Error::PrecisionExhausted { digits: ctx.max_digits, context: format!("log embedding of {u}") })
}

/// Decimal view of an interval: midpoint and radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealValue {
    pub value: String,
    pub error: String,
}

impl RealValue {
    pub fn from_interval(x: &Interval, places: usize) -> RealValue {
        RealValue { value: format_float(&x.mid(), places), error: format_error(&x.rad()) }
    }
}

/// Groups the values by pairwise intersection of their enclosures, which is
/// exact equality once every width is below half the separation bound.
fn compare_below_separation(vals: &[Interval]) -> (bool, Rational) {
    let base = &vals[0];
    let mut all_equal = true;
    let mut min_gap: Option<Float> = None;
    let mut max_spread = Float::new(base.prec());
    for v in &vals[1..] {
        if base.intersects(v) {
            let hull = base.hull(v);
            if hull.width() > max_spread {
                max_spread = hull.width();
            }
        } else {
            all_equal = false;
            let gap = if v.lo() > base.hi() {
                Float::with_val(v.prec(), v.lo() - base.hi())
            } else {
                Float::with_val(v.prec(), base.lo() - v.hi())
            };
            if min_gap.as_ref().is_none_or(|g| gap < *g) {
                min_gap = Some(gap);
            }
        }
    }
    if all_equal {
        (true, float_to_rational(&max_spread))
    } else {
        (false, float_to_rational(&min_gap.expect("an unequal pair")))
    }
}

/// Searches the precision levels for enclosures of radius below `delta / 4`.
fn enclose_below<F>(field: &NumberField, delta: &Rational, what: &str, mut compute: F) -> Result<(u32, Vec<Interval>)>
where
    F: FnMut(u32) -> Result<(u32, Vec<Interval>)>,
{
    let quarter = Rational::from(delta / 4u32);
    for level in field.ctx().levels() {
        let (used, vals) = compute(level)?;
        if vals.iter().all(|v| v.rad() < quarter) {
            return Ok((used, vals));
        }
    }
    Err(Error::PrecisionExhausted { digits: field.ctx().max_digits, context: what.to_string() })
}

/// `|sigma_{s+1}(u)| = ... = |sigma_{s+t}(u)|`, decided exactly.
///
/// The squared moduli `sigma_{s+k}(u) conj(sigma_{s+k}(u))` are products of
/// two roots of the minimal polynomial `m` of `u` (possibly the same root
/// twice when `deg m < d`), hence roots of the squarefree part of
/// `Res_y(m(y), y^deg m m(x/y))`.
pub fn is_equal_modulus(u: &FieldElement) -> Result<Decision> {
    require_nonzero(u)?;
    let field = u.field();
    let (s, t) = field.signature();
    let base = field.ctx().working_digits;
    if t <= 1 {
        return Ok(Decision::vacuous(true, base));
    }
    if u.as_rational().is_some() {
        return Ok(Decision::rational(base));
    }
    let m = min_poly(u).primitive_integer();
    let q = all_products_poly(&m)?.squarefree_part()?;
    let delta = match root_separation_bound(&q)? {
        SeparationBound::NoPairs => return Ok(Decision::vacuous(true, base)),
        SeparationBound::Bound(d) => d,
    };
    let (digits, vals) = enclose_below(field, &delta, "equal-modulus decision", |level| {
        let (used, emb) = field.embed_at(u, level)?;
        Ok((used, (0..t).map(|k| emb[s + k].abs_sq()).collect()))
    })?;
    let (value, margin) = compare_below_separation(&vals);
    Ok(Decision {
        value,
        certificate: Certificate {
            method: CertificateMethod::Separation,
            precision_digits: digits,
            separation_bound: Some(delta),
            margin: Some(margin),
        },
    })
}

/// Squared moduli `|sigma_{s+k}(u)|^2`, `k = 1..t`, as enclosures.
pub fn pair_moduli_squared(u: &FieldElement) -> Result<Vec<Interval>> {
    let field = u.field();
    let (s, t) = field.signature();
    let (_, emb) = field.embed_at(u, field.ctx().working_digits)?;
    Ok((0..t).map(|k| emb[s + k].abs_sq()).collect())
}

/// `sigma_{s+1}(u) = ... = sigma_{s+t}(u)` as complex numbers, decided
/// exactly through the separation bound of the minimal polynomial of `u`.
pub fn is_equal_conjugates(u: &FieldElement) -> Result<Decision> {
    let field = u.field();
    let (s, t) = field.signature();
    let base = field.ctx().working_digits;
    if t <= 1 {
        return Ok(Decision::vacuous(true, base));
    }
    if u.as_rational().is_some() {
        return Ok(Decision::rational(base));
    }
    let m: IntPoly = min_poly(u).primitive_integer();
    let delta = match root_separation_bound(&m)? {
        SeparationBound::NoPairs => return Ok(Decision::rational(base)),
        SeparationBound::Bound(d) => d,
    };
    let quarter = Rational::from(&delta / 4u32);
    for level in field.ctx().levels() {
        let (used, emb) = field.embed_at(u, level)?;
        let vals: Vec<&CInterval> = (0..t).map(|k| &emb[s + k]).collect();
        if vals.iter().any(|v| v.rad() >= quarter) {
            continue;
        }
        let mut all_equal = true;
        let mut min_gap: Option<Float> = None;
        let mut max_spread = Float::new(vals[0].prec());
        for v in &vals[1..] {
            let diff = vals[0].sub(v).abs();
            if vals[0].intersects(v) {
                if *diff.hi() > max_spread {
                    max_spread = diff.hi().clone();
                }
            } else {
                all_equal = false;
                if min_gap.as_ref().is_none_or(|g| diff.lo() < g) {
                    min_gap = Some(diff.lo().clone());
                }
            }
        }
        let margin = if all_equal { max_spread } else { min_gap.expect("unequal pair") };
        return Ok(Decision {
            value: all_equal,
            certificate: Certificate {
                method: CertificateMethod::Separation,
                precision_digits: used,
                separation_bound: Some(delta),
                margin: Some(float_to_rational(&margin)),
            },
        });
    }
    Err(Error::PrecisionExhausted { digits: field.ctx().max_digits, context: "equal-conjugates decision".into() })
}

/// `sigma_i(u) > 0` at every real place; vacuous when `s = 0`.
pub fn is_totally_positive(u: &FieldElement) -> Result<Decision> {
    require_nonzero(u)?;
    let field = u.field();
    let (s, _) = field.signature();
    let base = field.ctx().working_digits;
    if s == 0 {
        return Ok(Decision::vacuous(true, base));
    }
    for level in field.ctx().levels() {
        let (used, emb) = field.embed_at(u, level)?;
        let signs: Option<Vec<i32>> = emb[..s].iter().map(|v| v.re.sign()).collect();
        if let Some(signs) = signs {
            let margin = emb[..s]
                .iter()
                .map(|v| v.re.mig())
                .min_by(|a, b| a.partial_cmp(b).expect("finite"))
                .expect("s >= 1");
            return Ok(Decision {
                value: signs.iter().all(|&x| x > 0),
                certificate: Certificate {
                    method: CertificateMethod::Sign,
                    precision_digits: used,
                    separation_bound: None,
                    margin: Some(float_to_rational(&margin)),
                },
            });
        }
    }
    Err(Error::PrecisionExhausted { digits: field.ctx().max_digits, context: "sign of a real embedding".into() })
}
