//! A priori lower bound on the distance between distinct roots.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::poly::{discriminant, IntPoly};

/// Minimum root distance bound; `NoPairs` for polynomials of degree <= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationBound {
    NoPairs,
    Bound(Rational),
}

impl SeparationBound {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            SeparationBound::NoPairs => None,
            SeparationBound::Bound(q) => Some(q),
        }
    }
}

const TARGET_BITS: u32 = 96;

/// Rational `q <= sqrt(x)` with about `TARGET_BITS` significant bits.
pub(crate) fn sqrt_lower(x: &Rational) -> Rational {
    debug_assert!(*x > 0);
    let nb = x.numer().significant_bits() as i64;
    let db = x.denom().significant_bits() as i64;
    let mut k = ((2 * TARGET_BITS as i64 - (nb - db)) / 2 + 2).max(0) as u32;
    loop {
        // floor(sqrt(floor(x * 4^k))) / 2^k
        let scaled = Integer::from(x.numer() << (2 * k)) / x.denom();
        let root = scaled.sqrt();
        if root > 0 {
            return Rational::from((root, Integer::from(1) << k));
        }
        k += 32;
    }
}

/// `delta = sqrt(3 |disc f|) / (d^((d+2)/2) * ||f||_2^(d-1))`, rounded down to
/// a rational. Its square is the exact rational `3|disc| / (d^(d+2) N^(d-1))`
/// with `N = ||f||_2^2`.
pub fn root_separation_bound(f: &IntPoly) -> Result<SeparationBound> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d <= 1 {
        return Ok(SeparationBound::NoPairs);
    }
    let disc = discriminant(f)?;
    if disc == 0 {
        return Err(Error::NotSquarefree);
    }
    let num = Integer::from(disc.abs_ref()) * 3u32;
    let den = Integer::from(Integer::u_pow_u(d as u32, d as u32 + 2)) * Integer::from(Pow::pow(&f.norm2_sq(), d as u32 - 1));
    Ok(SeparationBound::Bound(sqrt_lower(&Rational::from((num, Integer::from(den))))))
}
