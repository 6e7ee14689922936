//! Dense polynomials over a prime field `F_p` with `p < 2^31`.

use rand::Rng;
use rug::Integer;

use super::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PolyModP {
    pub p: u64,
    /// ascending, trimmed
    pub c: Vec<u64>,
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn small_primes(count: usize, start: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = start.max(2);
    while out.len() < count {
        if (2..).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

impl PolyModP {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyModP { p, c }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let pi = Integer::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|a| super::modulo(a, &pi).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, c: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mul_mod(a, k, self.p)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(
            p,
            (0..n)
                .map(|i| (self.c.get(i).unwrap_or(&0) + p - o.c.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn divrem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero());
        let p = self.p;
        if self.c.len() < b.c.len() {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(b.lc(), p);
        let db = b.degree();
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len() - db];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let t = mul_mod(*r.last().unwrap(), inv, p);
            if t != 0 {
                for (i, &bc) in b.c.iter().enumerate() {
                    r[k + i] = (r[k + i] + p - mul_mod(t, bc, p)) % p;
                }
            }
            q[k] = t;
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.divrem(b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| mul_mod(a, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() >= 1 && self.gcd(&self.derivative()).degree() == 0
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn pow_mod_big(&self, e: &Integer, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.significant_bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.get_bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

}

/// Distinct-degree factorization of a monic squarefree polynomial.
/// Returns `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = PolyModP::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    if rest.degree() > 0 {
        let dd = rest.degree();
        out.push((rest, dd));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting for odd `p`.
pub(crate) fn equal_degree<R: Rng>(f: &PolyModP, d: usize, rng: &mut R) -> Vec<PolyModP> {
    let p = f.p;
    if f.degree() == d {
        return vec![f.monic()];
    }
    let n = f.degree();
    loop {
        let a = PolyModP::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() == 0 {
            continue;
        }
        let g = a.gcd(f);
        let split = if g.degree() > 0 && g.degree() < n {
            g
        } else {
            let e = (Integer::from(Integer::u_pow_u(p as u32, d as u32)) - 1u32) / 2u32;
            let b = a.pow_mod_big(&e, f).sub(&PolyModP::one(p));
            let g = b.gcd(f);
            if g.degree() == 0 || g.degree() == n {
                continue;
            }
            g
        };
        let other = f.divrem(&split).0;
        let mut out = equal_degree(&split, d, rng);
        out.extend(equal_degree(&other, d, rng));
        return out;
    }
}

/// Complete factorization of a squarefree polynomial into monic irreducibles,
/// sorted canonically.
pub(crate) fn factor_squarefree<R: Rng>(f: &PolyModP, rng: &mut R) -> Vec<PolyModP> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree(&g, d, rng));
    }
    out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
    out
}

/// Irreducibility test for a squarefree polynomial modulo `p`.
pub(crate) fn is_irreducible_mod_p(f: &PolyModP) -> bool {
    let dd = distinct_degree(f);
    dd.len() == 1 && dd[0].1 == f.degree()
}
