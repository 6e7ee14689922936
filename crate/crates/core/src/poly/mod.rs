//! Exact dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored in ascending degree order and kept canonical: no
//! trailing zero coefficients, so the zero polynomial has an empty vector.

mod conjugate;
mod factor;
pub(crate) mod modp;
mod parse;
mod resultant;
mod sturm;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};

pub use conjugate::{all_products_poly, conjugate_product_poly, conjugate_ratio_poly, resultant_in_y};
pub use factor::{
    factor_int_poly, irreducibility_witness, is_irreducible, Factorization, IrreducibilityVerdict,
    DEFAULT_DEGREE_CAP,
};
pub use parse::{parse_int_poly, parse_rational, parse_rat_poly, parse_rational_list};
pub use resultant::{discriminant, resultant, sylvester_resultant};
pub use sturm::{real_root_count, sturm_count, sturm_sequence, Bound};

/// Least nonnegative residue of `a` modulo `m > 0`.
pub(crate) fn modulo(a: &Integer, m: &Integer) -> Integer {
    let mut r = Integer::from(a % m);
    if r < 0 {
        r += m;
    }
    r
}

/// Polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

/// Polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

fn trim<T: PartialEq<i32>>(c: &mut Vec<T>) {
    while c.last().is_some_and(|x| *x == 0) {
        c.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::from(1))
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut v = vec![Integer::new(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn lc(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == 1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in &self.coeffs {
            g.gcd_mut(c);
            if g == 1 {
                break;
            }
        }
        g
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc() < 0 {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn scale(&self, k: &Integer) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| Integer::from(c * k)).collect())
    }

    /// Divides every coefficient by `k`, which must divide all of them.
    pub fn div_scalar_exact(&self, k: &Integer) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| Integer::from(c.div_exact_ref(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Integer::from(c * i as u64))
                .collect(),
        )
    }

    /// `x^d f(1/x)`.
    pub fn reciprocal(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// `f(-x)`.
    pub fn negate_variable(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { Integer::from(-c) } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm2_sq(&self) -> Integer {
        self.coeffs.iter().map(|c| Integer::from(c.square_ref())).sum()
    }

    pub fn max_abs_coeff(&self) -> Integer {
        self.coeffs
            .iter()
            .map(|c| Integer::from(c.abs_ref()))
            .max()
            .unwrap_or_default()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| Rational::from(c.clone())).collect())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo_rem by zero polynomial");
        if self.is_zero() || self.degree() < b.degree() {
            return self.clone();
        }
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut steps = self.degree() - db + 1;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= Integer::from(&lr * bc);
            }
            trim(&mut r);
            steps -= 1;
        }
        let mut out = IntPoly::new(r);
        if steps > 0 {
            out = out.scale(&Integer::from(Pow::pow(&lb, steps as u32)));
        }
        out
    }

    /// Exact division over the integers; `None` if `b` does not divide `self`
    /// in `Z[x]`.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < b.degree() {
            return None;
        }
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![Integer::new(); self.degree() - db + 1];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let lr = r.last().unwrap();
            if !lr.is_divisible(&lb) {
                return None;
            }
            let t = Integer::from(lr.div_exact_ref(&lb));
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= Integer::from(&t * bc);
            }
            q[k] = t;
            trim(&mut r);
        }
        if r.is_empty() {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading
    /// coefficient times the gcd of the contents. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let c = Integer::from(self.content().gcd_ref(&other.content()));
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    fn normalize_sign(&self) -> IntPoly {
        if self.lc() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Squarefree part: the product of the distinct irreducible factors,
    /// primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.primitive_part();
        if p.degree() == 0 {
            return Ok(IntPoly::one());
        }
        let g = p.gcd(&p.derivative());
        let q = p
            .div_exact(&g)
            .ok_or_else(|| Error::Internal("gcd does not divide polynomial".into()))?;
        Ok(q.primitive_part())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == 0
    }

    /// Yun's squarefree decomposition of the primitive part:
    /// `pp(f) = prod a_i^i` with pairwise coprime squarefree `a_i`.
    /// Returns `(a_i, i)` for nonconstant `a_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u32)> {
        let mut out = Vec::new();
        let f = self.primitive_part();
        if f.degree() == 0 {
            return out;
        }
        let f = f.to_rat();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divrem(&a0).0;
        let mut c = df.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.primitive_integer(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Compares coefficient vectors lexicographically, degree first.
    pub fn canonical_cmp(&self, other: &IntPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::new(vec![Rational::from(1)])
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let l = self.lc();
        RatPoly::new(self.coeffs.iter().map(|c| Rational::from(c / &l)).collect())
    }

    pub fn scale(&self, k: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| Rational::from(c * k)).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RatPoly::new(out)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * i as u64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, b: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.degree() < b.degree() || self.is_zero() {
            return (RatPoly::zero(), self.clone());
        }
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::new(); self.degree() - db + 1];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let t = Rational::from(r.last().unwrap() / &lb);
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= Rational::from(&t * bc);
            }
            // the top coefficient cancels exactly
            r.pop();
            trim(&mut r);
            q[k] = t;
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn rem(&self, b: &RatPoly) -> RatPoly {
        self.divrem(b).1
    }

    /// Monic greatest common divisor; `gcd(a, 0) = monic(a)`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let g = self.primitive_integer().gcd(&other.primitive_integer());
        g.to_rat().monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lc().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> Integer {
        let mut l = Integer::from(1);
        for c in &self.coeffs {
            l.lcm_mut(c.denom());
        }
        l
    }

    /// Clears denominators and divides by the content; positive leading
    /// coefficient. Exact.
    pub fn primitive_integer(&self) -> IntPoly {
        let l = self.denominator_lcm();
        let ip = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| Integer::from(c.numer() * Integer::from(l.div_exact_ref(c.denom()))))
                .collect(),
        );
        ip.primitive_part()
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| *c.denom() == 1) {
            Some(IntPoly::new(self.coeffs.iter().map(|c| c.numer().clone()).collect()))
        } else {
            None
        }
    }

    /// Monic squarefree part.
    pub fn squarefree_part(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.primitive_integer().squarefree_part()?.to_rat().monic())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::new(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += Integer::from(a * b);
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| Integer::from(-c)).collect())
    }
}

fn write_terms<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl DoubleEndedIterator<Item = (usize, T, bool, bool)>,
) -> fmt::Result {
    // (power, |coeff|, negative, coeff_is_one)
    let mut first = true;
    for (i, abs, neg, is_one) in terms.rev() {
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match i {
            0 => write!(f, "{abs}")?,
            _ => {
                if !is_one {
                    write!(f, "{abs}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| {
                    let a = Integer::from(c.abs_ref());
                    let one = a == 1;
                    (i, a, *c < 0, one)
                }),
        )
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| {
                    let a = Rational::from(c.abs_ref());
                    let one = a == 1;
                    let shown = if *a.denom() != 1 && i > 0 {
                        format!("({a})")
                    } else {
                        a.to_string()
                    };
                    (i, shown, *c < 0, one)
                }),
        )
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = p(&[-1, 0, 1]).to_rat();
        let b = p(&[-1, 1]).to_rat();
        assert_eq!(a.gcd(&b), p(&[-1, 1]).to_rat());
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = p(&[2, 4, 6]).to_rat();
        assert_eq!(a.gcd(&RatPoly::zero()), a.monic());
        assert_eq!(RatPoly::zero().gcd(&a), a.monic());
    }

    #[test]
    fn quartic_is_coprime_to_derivative() {
        // x^4 - 2x^2 - 1 has discriminant -1024 != 0, so gcd with f' is 1
        let f = p(&[-1, 0, -2, 0, 1]);
        assert_eq!(discriminant(&f).unwrap(), Integer::from(-1024));
        assert_eq!(f.to_rat().gcd(&f.derivative().to_rat()), RatPoly::one());
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(p(&[1, -2, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).squarefree_part().unwrap(), p(&[0, 1]));
        let f = p(&[-1, 0, -2, 0, 1]);
        assert_eq!(f.squarefree_part().unwrap(), f);
        assert_eq!(IntPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 x
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2)) * &p(&[0, 1]);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn ext_gcd_inverts_mod_f() {
        let f = p(&[-2, 0, 1]).to_rat();
        let theta = p(&[0, 1]).to_rat();
        let (g, s, _) = theta.ext_gcd(&f);
        assert_eq!(g, RatPoly::one());
        assert_eq!(s, RatPoly::new(vec![Rational::new(), Rational::from((1, 2))]));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[-1, 0, -2, 0, 1]).to_string(), "x^4 - 2x^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
