//! Resultants and discriminants.
//!
//! Convention: `Res(a, b) = lc(a)^deg(b) * prod b(alpha)` over the roots
//! `alpha` of `a`, so `Res(a, b) = (-1)^(deg a * deg b) Res(b, a)` and
//! `disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)`.

use rug::ops::Pow;
use rug::Integer;

use super::IntPoly;
use crate::error::{Error, Result};

/// Resultant by the subresultant polynomial remainder sequence.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<Integer> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (ca, cb) = (a.content(), b.content());
    let mut t = Integer::from(Pow::pow(&ca, b.degree() as u32)) * Integer::from(Pow::pow(&cb, a.degree() as u32));
    if a.lc() < 0 && b.degree() % 2 == 1 {
        t = -t;
    }
    if b.lc() < 0 && a.degree() % 2 == 1 {
        t = -t;
    }
    // primitive parts carry positive leading coefficients; the sign of the
    // removed content was folded into t above
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    let mut s = 1i32;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            s = -s;
        }
    }
    if b.degree() == 0 {
        let h = Integer::from(Pow::pow(&b.lc(), a.degree() as u32));
        return Ok(t * h * s);
    }
    let mut g = Integer::from(1);
    let mut h = Integer::from(1);
    loop {
        let delta = (a.degree() - b.degree()) as u32;
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(Integer::new());
        }
        let divisor = Integer::from(&g * Integer::from(Pow::pow(&h, delta)));
        a = b;
        b = r.div_scalar_exact(&divisor);
        g = a.lc();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            Integer::from(Pow::pow(&g, delta)).div_exact(&Integer::from(Pow::pow(&h, delta - 1)))
        };
        if b.degree() == 0 {
            let da = a.degree() as u32;
            let num = Integer::from(Pow::pow(&b.lc(), da));
            let hh = if da == 0 {
                num
            } else {
                num.div_exact(&Integer::from(Pow::pow(&h, da - 1)))
            };
            return Ok(t * hh * s);
        }
    }
}

/// Discriminant `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`; requires `deg f >= 1`.
pub fn discriminant(f: &IntPoly) -> Result<Integer> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::InvalidInput("discriminant of a constant".into()));
    }
    if d == 1 {
        return Ok(Integer::from(1));
    }
    let r = resultant(f, &f.derivative())?;
    let mut disc = r.div_exact(&f.lc());
    if (d * (d - 1) / 2) % 2 == 1 {
        disc = -disc;
    }
    Ok(disc)
}

/// Determinant of the Sylvester matrix built with the *formal* degrees
/// `a.len() - 1` and `b.len() - 1` (leading zeros are kept), evaluated by
/// fraction-free Bareiss elimination.
pub fn sylvester_resultant(a: &[Integer], b: &[Integer]) -> Integer {
    let m = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = m + n;
    if size == 0 {
        return Integer::from(1);
    }
    let mut mat = vec![vec![Integer::new(); size]; size];
    // rows hold coefficients from the highest degree down
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

pub(crate) fn bareiss_det(mut mat: Vec<Vec<Integer>>) -> Integer {
    let n = mat.len();
    let mut sign = 1i32;
    let mut prev = Integer::from(1);
    for k in 0..n {
        if mat[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| mat[r][k] != 0) else {
                return Integer::new();
            };
            mat.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = Integer::from(&mat[i][j] * &mat[k][k]) - Integer::from(&mat[i][k] * &mat[k][j]);
                mat[i][j] = v.div_exact(&prev);
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), -1);
        // (2-3)(2-3) over the roots +-sqrt(2)
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(), 1);
        // Res(x^2-2, 2x) = (2 sqrt2)(-2 sqrt2) = -8
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[0, 2])).unwrap(), -8);
        assert_eq!(discriminant(&p(&[-2, 0, 1])).unwrap(), 8);
        assert_eq!(discriminant(&p(&[1, 0, 1])).unwrap(), -4);
        assert!(resultant(&p(&[1]), &IntPoly::zero()).is_err());
    }

    #[test]
    fn quadratic_discriminant_matches_formula() {
        for (a, b, c) in [(1i64, 3i64, -7i64), (5, -2, 9), (-3, 4, 4), (2, 0, -6)] {
            let f = p(&[c, b, a]);
            assert_eq!(discriminant(&f).unwrap(), b * b - 4 * a * c);
        }
    }

    #[test]
    fn common_root_gives_zero() {
        let a = &p(&[-1, 1]) * &p(&[2, 0, 1]);
        let b = &p(&[-1, 1]) * &p(&[5, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), 0);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 1..6)
            .prop_map(|v| IntPoly::from_i64s(&v))
            .prop_filter("nonzero", |q| !q.is_zero())
    }

    proptest! {
        #[test]
        fn subresultant_matches_sylvester(a in small_poly(), b in small_poly()) {
            let r = resultant(&a, &b).unwrap();
            prop_assert_eq!(r, sylvester_resultant(a.coeffs(), b.coeffs()));
        }

        #[test]
        fn resultant_antisymmetry(a in small_poly(), b in small_poly()) {
            let r1 = resultant(&a, &b).unwrap();
            let r2 = resultant(&b, &a).unwrap();
            let sign = if (a.degree() * b.degree()) % 2 == 1 { -1 } else { 1 };
            prop_assert_eq!(r1, r2 * sign);
        }
    }
}
