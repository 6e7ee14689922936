use std::fmt;
use std::sync::Arc;

use rug::{Integer, Rational};

use super::NumberField;
use crate::error::{Error, Result};
use crate::poly::{parse_rat_poly, resultant_in_y, IntPoly, RatPoly};

/// Element `c_0 + c_1 theta + ... + c_{d-1} theta^(d-1)` of a number field.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    /// length exactly `d`
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    /// Reduces an arbitrary polynomial in `theta` modulo the defining
    /// polynomial.
    pub fn from_poly(field: &Arc<NumberField>, g: &RatPoly) -> FieldElement {
        let r = g.rem(&field.defining_poly().to_rat());
        let mut coeffs = r.into_coeffs();
        coeffs.resize(field.degree(), Rational::new());
        FieldElement { field: field.clone(), coeffs }
    }

    pub fn from_coeffs(field: &Arc<NumberField>, coeffs: Vec<Rational>) -> FieldElement {
        Self::from_poly(field, &RatPoly::new(coeffs))
    }

    pub fn from_i64s(field: &Arc<NumberField>, coeffs: &[i64]) -> FieldElement {
        Self::from_coeffs(field, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> FieldElement {
        Self::from_coeffs(field, vec![q])
    }

    pub fn one(field: &Arc<NumberField>) -> FieldElement {
        Self::from_rational(field, Rational::from(1))
    }

    pub fn zero(field: &Arc<NumberField>) -> FieldElement {
        Self::from_rational(field, Rational::new())
    }

    pub fn theta(field: &Arc<NumberField>) -> FieldElement {
        Self::from_poly(field, &RatPoly::new(vec![Rational::new(), Rational::from(1)]))
    }

    /// Parses a JSON coefficient array (`["3", "2"]`) or a polynomial in `x`
    /// standing for `theta` (`"3 + 2x"`).
    pub fn parse(field: &Arc<NumberField>, s: &str) -> Result<FieldElement> {
        Ok(Self::from_poly(field, &parse_rat_poly(s)?))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    /// Coefficients as exact strings, e.g. `["3", "2"]`.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|c| *c == 0)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| *c == 0) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, o: &FieldElement) -> Result<()> {
        if self.field.same_as(&o.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        Ok(Self::from_poly(&self.field, &self.as_poly().add(&o.as_poly())))
    }

    pub fn sub(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        Ok(Self::from_poly(&self.field, &self.as_poly().sub(&o.as_poly())))
    }

    pub fn mul(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        Ok(Self::from_poly(&self.field, &self.as_poly().mul(&o.as_poly())))
    }

    pub fn neg(&self) -> FieldElement {
        Self::from_poly(&self.field, &self.as_poly().neg())
    }

    /// Inverse through the extended gcd with the defining polynomial.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field.defining_poly().to_rat();
        let (g, s, _) = self.as_poly().ext_gcd(&f);
        if g.degree() != 0 {
            return Err(Error::Internal("element shares a factor with an irreducible modulus".into()));
        }
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn div(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        self.mul(&o.inv()?)
    }

    /// `self^e`, negative exponents through the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.field);
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            b = b.mul(&b)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Characteristic polynomial `prod (x - sigma_i(a))`, monic of degree `d`.
    pub fn char_poly(&self) -> RatPoly {
        let f = self.field.defining_poly();
        let g = self.as_poly();
        let den = g.denominator_lcm();
        // G(x, y) = den x - den g(y): Res_y(f, G) = den^d prod (x - g(alpha_i))
        let mut cols: Vec<IntPoly> = g
            .coeffs()
            .iter()
            .map(|c| IntPoly::constant(-Rational::from(c * &den).numer().clone()))
            .collect();
        if cols.is_empty() {
            cols.push(IntPoly::zero());
        }
        cols[0] = &cols[0] + &IntPoly::new(vec![Integer::new(), den.clone()]);
        let r = resultant_in_y(f, &cols).expect("nonzero inputs");
        r.to_rat().monic()
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &FieldElement) -> bool {
        self.field.same_as(&o.field) && self.coeffs == o.coeffs
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({} mod {})", self.as_poly(), self.field.defining_poly())
    }
}

pub fn elem_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b),
    }
}

/// Monic minimal polynomial: the squarefree part of the characteristic
/// polynomial, which is a power of it.
pub fn min_poly(a: &FieldElement) -> RatPoly {
    a.char_poly().squarefree_part().expect("characteristic polynomial is nonzero")
}

/// `(norm, trace)` read off the characteristic polynomial.
pub fn norm_trace(a: &FieldElement) -> (Rational, Rational) {
    let c = a.char_poly();
    let d = c.degree();
    let mut norm = c.coeff(0);
    if d % 2 == 1 {
        norm = -norm;
    }
    (norm, -c.coeff(d - 1))
}

pub fn is_algebraic_integer(a: &FieldElement) -> bool {
    min_poly(a).to_int().is_some()
}

/// Integral with norm `+-1`.
pub fn is_unit(a: &FieldElement) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::InvalidInput("0 is not a unit".into()));
    }
    if !is_algebraic_integer(a) {
        return Ok(false);
    }
    let (n, _) = norm_trace(a);
    Ok(n == 1 || n == -1)
}

/// `u = 1 (mod alpha O_K)`, i.e. `(u - 1) / alpha` is an algebraic integer.
pub fn congruence_check(u: &FieldElement, alpha: &FieldElement) -> Result<bool> {
    u.check(alpha)?;
    if alpha.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !is_unit(u)? {
        return Err(Error::NotUnit);
    }
    if !is_algebraic_integer(alpha) {
        return Err(Error::NotIntegral);
    }
    let q = u.sub(&FieldElement::one(u.field()))?.div(alpha)?;
    Ok(is_algebraic_integer(&q))
}
