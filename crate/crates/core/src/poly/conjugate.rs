//! Polynomials whose roots are ratios or products of pairs of roots of `f`,
//! built as resultants in an auxiliary variable.

use rug::{Integer, Rational};

use super::{sylvester_resultant, IntPoly, RatPoly};
use crate::error::{Error, Result};

/// `Res_y(f(y), G(x, y))` where `G = sum_j g[j](x) y^j`.
///
/// The formal `y`-degree of `G` is `g.len() - 1` even when `g` has a zero
/// leading entry. Computed by evaluating at `x = 0..=D` and interpolating,
/// with `D = deg f * max_j deg g[j]`.
pub fn resultant_in_y(f: &IntPoly, g: &[IntPoly]) -> Result<IntPoly> {
    if f.is_zero() || g.iter().all(IntPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let bound = f.degree() * g.iter().map(IntPoly::degree).max().unwrap_or(0);
    let xs: Vec<Integer> = (0..=bound as u64).map(Integer::from).collect();
    let values: Vec<Integer> = xs
        .iter()
        .map(|x0| {
            let b: Vec<Integer> = g.iter().map(|gj| gj.eval(x0)).collect();
            sylvester_resultant(f.coeffs(), &b)
        })
        .collect();
    let r = interpolate(&xs, &values);
    r.to_int()
        .ok_or_else(|| Error::Internal("resultant interpolation left a fraction".into()))
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Integer], ys: &[Integer]) -> RatPoly {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.iter().map(|y| Rational::from(y)).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = Rational::from(&dd[i] - &dd[i - 1]);
            let den = Integer::from(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // Horner on the Newton form, innermost factor first
    let mut acc = RatPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = RatPoly::new(vec![Rational::from(-&xs[i]), Rational::from(1)]);
        acc = acc.mul(&lin).add(&RatPoly::constant(dd[i].clone()));
    }
    acc
}

/// `Res_y(f(y), f(x y))`, vanishing exactly on the ratios `a_j / a_i` of roots
/// of `f`. Multiplicities are kept: `(x - 1)^deg f` divides the result.
pub fn conjugate_ratio_poly(f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.coeff(0) == 0 {
        return Err(Error::ZeroRoot);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let g: Vec<IntPoly> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| IntPoly::monomial(a.clone(), j))
        .collect();
    resultant_in_y(f, &g)
}

/// `Res_y(f(y), y^d f(x / y))`, vanishing on every product `a_i a_j` of roots
/// of `f`, squares included.
pub fn all_products_poly(f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    let mut g = vec![IntPoly::zero(); d + 1];
    for (j, a) in f.coeffs().iter().enumerate() {
        g[d - j] = IntPoly::monomial(a.clone(), j);
    }
    resultant_in_y(f, &g)
}

/// Squarefree primitive polynomial vanishing exactly on the products
/// `a_i a_j`, `i < j`, of distinct roots of the squarefree `f`.
pub fn conjugate_product_poly(f: &IntPoly) -> Result<IntPoly> {
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if f.degree() < 2 {
        return Ok(IntPoly::one());
    }
    let full = all_products_poly(f)?;
    // Res_y(f(y), x - y^2) removes one copy of each square a_i^2
    let squares = resultant_in_y(f, &[IntPoly::x(), IntPoly::zero(), IntPoly::from_i64s(&[-1])])?;
    let (q, r) = full.to_rat().divrem(&squares.to_rat());
    if !r.is_zero() {
        return Err(Error::Internal("square factor does not divide product resultant".into()));
    }
    Ok(q.primitive_integer().squarefree_part()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::resultant;
    use rug::ops::Pow;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ratio_poly_of_sqrt2() {
        assert_eq!(conjugate_ratio_poly(&p(&[-2, 0, 1])).unwrap(), p(&[4, 0, -8, 0, 4]));
    }

    #[test]
    fn ratio_poly_of_linear() {
        assert_eq!(conjugate_ratio_poly(&p(&[-5, 1])).unwrap(), p(&[-5, 5]));
        assert_eq!(conjugate_ratio_poly(&p(&[0, 1])), Err(Error::ZeroRoot));
    }

    #[test]
    fn ratio_poly_of_i_vanishes_at_plus_minus_one() {
        let r = conjugate_ratio_poly(&p(&[1, 0, 1])).unwrap();
        assert_eq!(r.eval(&Integer::from(1)), 0);
        assert_eq!(r.eval(&Integer::from(-1)), 0);
        assert_eq!(r.degree(), 4);
    }

    #[test]
    fn product_poly_small_cases() {
        assert_eq!(conjugate_product_poly(&p(&[-2, 0, 1])).unwrap(), p(&[2, 1]));
        assert_eq!(conjugate_product_poly(&p(&[1, 0, 1])).unwrap(), p(&[-1, 1]));
        // roots r, z, conj(z) of x^3 - x - 1 with r z conj(z) = 1: products are
        // 1/r, r z, r conj(z)
        let q = conjugate_product_poly(&p(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(q.degree(), 3);
        // 1/r is a root of x^3 + x^2 - 1 (reversed cubic)
        let rev = p(&[-1, -1, 0, 1]).reciprocal().primitive_part();
        assert!(q.gcd(&rev).degree() >= 1);
    }

    #[test]
    fn evaluation_matches_direct_resultant_at_integer_points() {
        let f = p(&[3, -1, 0, 2]);
        let r = conjugate_ratio_poly(&f).unwrap();
        for x0 in [-3i64, 7, 11] {
            let x0 = Integer::from(x0);
            let g = IntPoly::new(
                f.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, a)| Integer::from(a * Integer::from(Pow::pow(&x0, j as u32))))
                    .collect(),
            );
            assert_eq!(r.eval(&x0), resultant(&f, &g).unwrap());
        }
    }
}
