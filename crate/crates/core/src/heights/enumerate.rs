//! Finite enumeration of algebraic numbers of bounded degree and height, and
//! exhaustive search for equal-modulus units in an exponent box.

use rayon::prelude::*;
use rug::{Integer, Rational};

use super::{height_of_min_poly, is_cyclotomic, mahler_squarefree_at, HeightValue};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{is_irreducible, IntPoly, DEFAULT_DEGREE_CAP};
use crate::roots::PrecisionContext;
use crate::units::{is_equal_modulus, UnitSubgroup};

pub const DEFAULT_ENUMERATION_BUDGET: u128 = 5_000_000;
pub const MAX_ENUMERATION_DEGREE: usize = 6;

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    /// cap on the number of candidate polynomials examined
    pub budget: u128,
    pub ctx: PrecisionContext,
    /// error radius of the reported heights
    pub eps: Rational,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_ENUMERATION_BUDGET,
            ctx: PrecisionContext::default(),
            eps: Rational::from((1, Integer::from(Integer::u_pow_u(10, 30)))),
        }
    }
}

/// One minimal polynomial; it accounts for `deg` algebraic numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumEntry {
    pub poly: IntPoly,
    pub height: HeightValue,
    pub root_of_unity: bool,
}

impl EnumEntry {
    /// `coeffs_json<TAB>height<TAB>is_root_of_unity`, coefficients ascending.
    pub fn line(&self, places: usize) -> String {
        let coeffs: Vec<String> = self.poly.coeffs().iter().map(|c| c.to_string()).collect();
        format!("[{}]\t{}\t{}", coeffs.join(","), self.height.summary(places).value, self.root_of_unity)
    }
}

fn binomial(n: usize, k: usize) -> Integer {
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

/// `|a_i| <= binom(d, i) M(f)` and `M(f) <= H^d` give the coefficient boxes.
fn coefficient_bounds(d: usize, bound: &Rational) -> Vec<Integer> {
    (0..=d).map(|i| Rational::from(bound * binomial(d, i)).floor().numer().clone()).collect()
}

fn candidate_count(bounds: &[Integer]) -> u128 {
    let d = bounds.len() - 1;
    let mut n: u128 = bounds[d].to_u128().unwrap_or(u128::MAX);
    for b in &bounds[..d] {
        let width = Integer::from(b * 2u32) + 1u32;
        n = n.saturating_mul(width.to_u128().unwrap_or(u128::MAX));
    }
    n
}

/// `M(f) <= bound` for a primitive irreducible `f`, decided exactly or by
/// enclosures that stay clear of the bound.
fn within_bound(f: &IntPoly, bound: &Rational, ctx: &PrecisionContext) -> Result<bool> {
    let is_x = f.degree() == 1 && f.coeff(0) == 0;
    if is_x || is_cyclotomic(f) {
        return Ok(*bound >= 1);
    }
    if *bound <= 1 {
        // Kronecker: M(f) = 1 only for x and cyclotomic polynomials
        return Ok(false);
    }
    if f.degree() == 1 {
        return Ok(Rational::from(f.coeff(0).abs().max(f.coeff(1).abs())) <= *bound);
    }
    // Landau: M(f) <= ||f||_2
    if Rational::from(f.norm2_sq()) <= Rational::from(bound * bound) {
        return Ok(true);
    }
    for level in ctx.levels() {
        let Some(m) = mahler_squarefree_at(f, level)? else { continue };
        if let Some(e) = m.exact {
            return Ok(Rational::from(e) <= *bound);
        }
        let lo = m.value.lo().to_rational().expect("finite");
        let hi = m.value.hi().to_rational().expect("finite");
        if hi <= *bound {
            return Ok(true);
        }
        if lo > *bound {
            return Ok(false);
        }
    }
    Err(Error::BoundaryTie { poly: f.to_string(), bound: bound.to_string() })
}

fn examine(coeffs: &[Integer], bound: &Rational, opts: &EnumerationOptions) -> Result<Option<EnumEntry>> {
    let d = coeffs.len() - 1;
    if d >= 2 && coeffs[0] == 0 {
        return Ok(None);
    }
    let f = IntPoly::new(coeffs.to_vec());
    if f.content() != 1 || !is_irreducible(&f, DEFAULT_DEGREE_CAP)? {
        return Ok(None);
    }
    if !within_bound(&f, bound, &opts.ctx)? {
        return Ok(None);
    }
    let height = height_of_min_poly(&f, &opts.eps)?;
    let root_of_unity = is_cyclotomic(&f);
    Ok(Some(EnumEntry { poly: f, height, root_of_unity }))
}

/// Every primitive irreducible `f` with positive leading coefficient,
/// `deg f <= deg_max` and `M(f) <= h_max^deg f`: the minimal polynomials of
/// all algebraic numbers of degree at most `deg_max` and height at most
/// `h_max`. Sorted by degree, then coefficients.
pub fn enumerate_bounded_height(deg_max: usize, h_max: &Rational, opts: &EnumerationOptions) -> Result<Vec<EnumEntry>> {
    if deg_max == 0 || deg_max > MAX_ENUMERATION_DEGREE {
        return Err(Error::InvalidInput(format!("degree must be between 1 and {MAX_ENUMERATION_DEGREE}")));
    }
    if *h_max < 1 {
        return Err(Error::InvalidInput("height bound must be at least 1".into()));
    }
    let plans: Vec<(usize, Rational, Vec<Integer>)> = (1..=deg_max)
        .map(|d| {
            let bound = Rational::from(rug::ops::Pow::pow(h_max, d as i32));
            let b = coefficient_bounds(d, &bound);
            (d, bound, b)
        })
        .collect();
    let needed = plans.iter().fold(0u128, |acc, (_, _, b)| acc.saturating_add(candidate_count(b)));
    if needed > opts.budget {
        return Err(Error::BudgetExceeded { needed, cap: opts.budget });
    }
    let mut out = Vec::new();
    for (d, bound, b) in &plans {
        // work units: leading coefficient and the coefficient below it
        let lcs: Vec<Integer> = (1..=b[*d].to_i64().expect("bounded")).map(Integer::from).collect();
        let next = &b[d - 1];
        let units: Vec<(Integer, Integer)> = lcs
            .iter()
            .flat_map(|lc| {
                let n = next.to_i64().expect("bounded");
                (-n..=n).map(move |c| (lc.clone(), Integer::from(c)))
            })
            .collect();
        let found: Vec<Vec<EnumEntry>> = units
            .par_iter()
            .map(|(lc, c)| {
                let mut found = Vec::new();
                let mut coeffs = vec![Integer::new(); d + 1];
                coeffs[*d] = lc.clone();
                coeffs[d - 1] = c.clone();
                let free = d - 1;
                for (i, ci) in coeffs.iter_mut().enumerate().take(free) {
                    *ci = Integer::from(-&b[i]);
                }
                loop {
                    if let Some(e) = examine(&coeffs, bound, opts)? {
                        found.push(e);
                    }
                    // odometer over a_0 .. a_{d-2}
                    let mut i = 0;
                    while i < free && coeffs[i] == b[i] {
                        coeffs[i] = Integer::from(-&b[i]);
                        i += 1;
                    }
                    if i == free {
                        break;
                    }
                    coeffs[i] += 1;
                }
                Ok(found)
            })
            .collect::<Result<_>>()?;
        out.extend(found.into_iter().flatten());
    }
    out.sort_by(|a, b| a.poly.canonical_cmp(&b.poly));
    Ok(out)
}

/// Products `+-prod g_i^e_i` with `|e_i| <= exponent_box` whose complex
/// conjugates share one modulus, in lexicographic exponent order with the
/// positive sign first. Repeated elements are listed once.
pub fn search_equal_modulus_units(u: &UnitSubgroup, exponent_box: u32) -> Result<Vec<FieldElement>> {
    let field = u.field();
    let n = u.generators().len();
    let b = exponent_box as i64;
    let mut exps = vec![vec![]];
    for _ in 0..n {
        exps = exps.into_iter().flat_map(|e: Vec<i64>| (-b..=b).map(move |x| [e.clone(), vec![x]].concat())).collect();
    }
    let hits: Vec<Option<FieldElement>> = exps
        .par_iter()
        .map(|e| {
            let mut acc = FieldElement::one(field);
            for (g, &k) in u.generators().iter().zip(e) {
                acc = acc.mul(&g.pow(k)?)?;
            }
            Ok(if is_equal_modulus(&acc)?.value { Some(acc) } else { None })
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<FieldElement> = Vec::new();
    for h in hits.into_iter().flatten() {
        for x in [h.clone(), h.neg()] {
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    Ok(out)
}
