//! Factorization over the integers.
//!
//! Squarefree decomposition, then for each squarefree part: factorization
//! modulo a good prime (distinct-degree + Cantor–Zassenhaus), quadratic Hensel
//! lifting past twice the Mignotte coefficient bound, and naive subset
//! recombination.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};

use super::modp::{factor_squarefree, is_irreducible_mod_p, small_primes, PolyModP};
use super::{discriminant, IntPoly};
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 24;

const WITNESS_PRIMES: usize = 10;
const CANDIDATE_PRIMES: usize = 5;
const RATIONAL_ROOT_LIMIT: u64 = 1 << 40;

/// `f = content * prod factor^multiplicity`, factors primitive, irreducible,
/// with positive leading coefficient, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Integer,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    /// `f mod prime` is irreducible and `prime` divides neither `lc(f)` nor
    /// `disc(f)`.
    ProvedIrreducible { prime: u64 },
    /// `factor` is a nontrivial divisor of `f` in `Z[x]`.
    ProvedReducible { factor: IntPoly },
    Unknown,
}

/// Cheap sound irreducibility filter; never claims irreducibility wrongly.
pub fn irreducibility_witness(f: &IntPoly) -> IrreducibilityVerdict {
    let f = f.primitive_part();
    if f.degree() == 0 {
        return IrreducibilityVerdict::Unknown;
    }
    let g = f.gcd(&f.derivative());
    if g.degree() > 0 {
        return IrreducibilityVerdict::ProvedReducible { factor: g.primitive_part() };
    }
    if f.degree() > 1 && f.coeff(0) == 0 {
        return IrreducibilityVerdict::ProvedReducible { factor: IntPoly::x() };
    }
    let disc = discriminant(&f).expect("degree >= 1");
    let bad = Integer::from(&disc * &f.lc());
    let mut tried = 0;
    let mut n = 3u64;
    while tried < WITNESS_PRIMES {
        let p = small_primes(1, n)[0];
        n = p + 1;
        if bad.is_divisible(&Integer::from(p)) {
            continue;
        }
        tried += 1;
        if is_irreducible_mod_p(&PolyModP::from_int(&f, p)) {
            return IrreducibilityVerdict::ProvedIrreducible { prime: p };
        }
    }
    if f.degree() > 1 {
        if let Some(r) = find_rational_root(&f) {
            let lin = IntPoly::new(vec![Integer::from(-r.numer()), r.denom().clone()]);
            return IrreducibilityVerdict::ProvedReducible { factor: lin };
        }
    }
    IrreducibilityVerdict::Unknown
}

fn divisors(n: &Integer) -> Option<Vec<Integer>> {
    let n = Integer::from(n.abs_ref());
    let v = n.to_u64()?;
    if v > RATIONAL_ROOT_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(Integer::from(d));
            if d * d != v {
                large.push(Integer::from(v / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

fn find_rational_root(f: &IntPoly) -> Option<Rational> {
    let nums = divisors(&f.coeff(0))?;
    let dens = divisors(&f.lc())?;
    for b in &dens {
        for a in &nums {
            for s in [1, -1] {
                let r = Rational::from((Integer::from(a * s), b.clone()));
                if *r.denom() != *b {
                    continue;
                }
                if f.eval_rational(&r) == 0 {
                    return Some(r);
                }
            }
        }
    }
    None
}

/// Exact irreducibility over the rationals (witness, then full factoring).
pub fn is_irreducible(f: &IntPoly, degree_cap: usize) -> Result<bool> {
    if f.degree() == 0 {
        return Ok(false);
    }
    match irreducibility_witness(f) {
        IrreducibilityVerdict::ProvedIrreducible { .. } => Ok(true),
        IrreducibilityVerdict::ProvedReducible { .. } => Ok(false),
        IrreducibilityVerdict::Unknown => Ok(factor_int_poly(f, degree_cap)?.is_irreducible()),
    }
}

/// Complete factorization into primitive irreducibles over the rationals.
pub fn factor_int_poly(f: &IntPoly, degree_cap: usize) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() > degree_cap {
        return Err(Error::DegreeCapExceeded { degree: f.degree(), cap: degree_cap });
    }
    let mut content = f.content();
    if f.lc() < 0 {
        content = -content;
    }
    let mut factors = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree_int(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { content, factors })
}

/// Factors a primitive squarefree polynomial with positive leading coefficient.
fn factor_squarefree_int(f: &IntPoly) -> Vec<IntPoly> {
    if f.degree() <= 1 {
        return vec![f.clone()];
    }
    let lc = f.lc();
    let mut choice: Option<(u64, Vec<PolyModP>)> = None;
    let mut good = 0;
    let mut n = 3u64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    while good < CANDIDATE_PRIMES {
        let p = small_primes(1, n)[0];
        n = p + 1;
        if lc.is_divisible(&Integer::from(p)) {
            continue;
        }
        let fp = PolyModP::from_int(f, p);
        if fp.degree() != f.degree() || !fp.is_squarefree() {
            continue;
        }
        good += 1;
        let fs = factor_squarefree(&fp, &mut rng);
        if fs.len() == 1 {
            return vec![f.clone()];
        }
        if choice.as_ref().is_none_or(|(_, c)| fs.len() < c.len()) {
            choice = Some((p, fs));
        }
    }
    let (p, modular) = choice.expect("at least one good prime");

    // Mignotte: every factor g of f, scaled so its leading coefficient is
    // lc(f), has coefficients below lc(f) * 2^deg * ||f||_2.
    let norm = Integer::from(f.norm2_sq().sqrt_ref()) + 1u32;
    let bound = Integer::from(&lc * &norm) << (f.degree() as u32);
    let target = Integer::from(&bound * 2u32);
    let pz = Integer::from(p);
    let mut modulus = pz.clone();
    while modulus <= target {
        modulus *= &pz;
    }
    let lifted = hensel_lift(f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn reduce(f: &IntPoly, m: &Integer) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| super::modulo(c, m)).collect())
}

fn symmetric(f: &IntPoly, m: &Integer) -> IntPoly {
    let half = Integer::from(m >> 1);
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = super::modulo(c, m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &Integer) -> IntPoly {
    reduce(&(a * b), m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic_mod(a: &IntPoly, b: &IntPoly, m: &Integer) -> (IntPoly, IntPoly) {
    debug_assert!(b.is_monic());
    let a = reduce(a, m);
    if a.degree() < b.degree() || a.is_zero() {
        return (IntPoly::zero(), a);
    }
    let db = b.degree();
    let mut r: Vec<Integer> = a.coeffs().to_vec();
    let mut q = vec![Integer::new(); a.degree() - db + 1];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let t = r.pop().unwrap();
        for (i, bc) in b.coeffs().iter().take(db).enumerate() {
            r[k + i] -= Integer::from(&t * bc);
            r[k + i] = super::modulo(&r[k + i], m);
        }
        q[k] = t;
        while r.last().is_some_and(|c| *c == 0) {
            r.pop();
        }
    }
    (IntPoly::new(q), IntPoly::new(r))
}

fn to_int_poly(f: &PolyModP) -> IntPoly {
    IntPoly::new(f.c.iter().map(|&a| Integer::from(a)).collect())
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` mod `m` to the
/// same identities mod `m2 = m^2`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &Integer,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = reduce(&(f - &(g * h)), m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, m2), h, m2);
    let g_new = reduce(&(&(g + &(t * &e)) + &(&q * g)), m2);
    let h_new = reduce(&(h + &r), m2);
    let b = reduce(&(&(&(s * &g_new) + &(t * &h_new)) - &IntPoly::one()), m2);
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, m2), &h_new, m2);
    let s_new = reduce(&(s - &d), m2);
    let t_new = reduce(&(&(t - &(t * &b)) - &(&c * &g_new)), m2);
    (g_new, h_new, s_new, t_new)
}

/// Lifts `f = lc(f) * prod factors (mod p)` to monic factors modulo `target`.
fn hensel_lift(f: &IntPoly, factors: &[PolyModP], p: u64, target: &Integer) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let inv = Integer::from(f.lc().invert_ref(target).expect("lc invertible"));
        return vec![reduce(&f.scale(&inv), target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lcp = PolyModP::from_int(&IntPoly::constant(f.lc()), p);
    let g0 = left.iter().fold(lcp, |acc, u| acc.mul(u));
    let h0 = right.iter().fold(PolyModP::one(p), |acc, u| acc.mul(u));
    let (_, s0, t0) = g0.ext_gcd(&h0);
    let (mut g, mut h, mut s, mut t) = (to_int_poly(&g0), to_int_poly(&h0), to_int_poly(&s0), to_int_poly(&t0));
    let mut m = Integer::from(p);
    while m < *target {
        let m2 = Integer::from(m.square_ref());
        let next = hensel_step(f, &g, &h, &s, &t, &m2);
        (g, h, s, t) = next;
        m = m2;
    }
    let g = reduce(&g, target);
    let h = reduce(&h, target);
    let mut out = hensel_lift(&g, left, p, target);
    out.extend(hensel_lift(&h, right, p, target));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &Integer) -> Vec<IntPoly> {
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for combo in combinations(lifted.len(), size) {
            let lc = f.lc();
            let mut g = IntPoly::constant(lc.clone());
            for &i in &combo {
                g = mul_mod(&g, &lifted[i], modulus);
            }
            let g = symmetric(&g, modulus).primitive_part();
            if g.degree() == 0 {
                continue;
            }
            if let Some(q) = f.div_exact(&g) {
                found.push(g);
                f = q.primitive_part();
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.degree() > 0 {
        found.push(f);
    }
    found
}
