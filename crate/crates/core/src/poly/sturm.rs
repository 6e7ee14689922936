//! Sturm sequences and exact real-root counting.

use std::cmp::Ordering;

use rug::{Integer, Rational};

use super::IntPoly;
use crate::error::{Error, Result};

/// An extended rational endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn cmp_bound(&self, other: &Bound) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<i64> for Bound {
    fn from(v: i64) -> Self {
        Bound::Finite(Rational::from(v))
    }
}

impl From<Rational> for Bound {
    fn from(v: Rational) -> Self {
        Bound::Finite(v)
    }
}

/// Sturm sequence of a squarefree polynomial, each term scaled by a positive
/// constant to stay in `Z[x]`.
pub fn sturm_sequence(f: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![f.clone()];
    if f.degree() == 0 {
        return seq;
    }
    seq.push(f.derivative());
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree() == 0 {
            break;
        }
        // -rem(a, b) up to a positive factor: prem multiplies by lc(b)^k
        let k = a.degree() - b.degree() + 1;
        let mut r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        let flip = !(b.lc() < 0 && k % 2 == 1);
        if flip {
            r = -&r;
        }
        let c = r.content();
        seq.push(r.div_scalar_exact(&c));
    }
    seq
}

fn sign_at(p: &IntPoly, x: &Bound) -> i32 {
    match x {
        Bound::PosInf => p.lc().cmp0() as i32,
        Bound::NegInf => {
            let s = p.lc().cmp0() as i32;
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }
        Bound::Finite(q) => {
            // sign of den^deg * p(num/den), den > 0
            let (num, den) = (q.numer(), q.denom());
            let d = p.degree() as u32;
            let mut acc = Integer::new();
            let mut den_pow = Integer::from(1);
            let mut num_pows = Vec::with_capacity(p.coeffs().len());
            let mut np = Integer::from(1);
            for _ in 0..=d {
                num_pows.push(np.clone());
                np *= num;
            }
            for i in (0..=d as usize).rev() {
                acc += Integer::from(&p.coeff(i) * &num_pows[i]) * &den_pow;
                den_pow *= den;
            }
            acc.cmp0() as i32
        }
    }
}

fn variations(seq: &[IntPoly], x: &Bound) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of the squarefree `f` in `(lo, hi]`.
pub fn sturm_count(f: &IntPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if lo.cmp_bound(hi) != Ordering::Less {
        return Err(Error::InvalidInput("sturm_count needs lo < hi".into()));
    }
    if f.degree() == 0 {
        return Ok(0);
    }
    let seq = sturm_sequence(f);
    let (vl, vh) = (variations(&seq, lo), variations(&seq, hi));
    Ok(vl.saturating_sub(vh))
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn real_root_count(f: &IntPoly) -> Result<usize> {
    sturm_count(f, &Bound::NegInf, &Bound::PosInf)
}
