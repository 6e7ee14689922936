//! Number fields `Q(theta)` with `theta` a root of a monic irreducible integer
//! polynomial, and exact arithmetic on their elements.

mod element;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::CInterval;
use crate::poly::{
    discriminant, factor_int_poly, irreducibility_witness, real_root_count, IntPoly, IrreducibilityVerdict,
    DEFAULT_DEGREE_CAP,
};
use crate::roots::{eval_rat_poly, isolate_at, isolate_roots, relabel, PrecisionContext, RootBox, RootSummary};

pub use element::{
    congruence_check, elem_arith, is_algebraic_integer, is_unit, min_poly, norm_trace, ArithOp, FieldElement,
};

/// How irreducibility of the defining polynomial was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum IrreducibilityProof {
    /// irreducible modulo this prime, which divides neither lc nor disc
    ModularPrime { prime: u64 },
    Factorization,
    Linear,
}

pub struct NumberField {
    poly: IntPoly,
    signature: (usize, usize),
    embeddings: Vec<RootBox>,
    ctx: PrecisionContext,
    proof: IrreducibilityProof,
    /// finer isolations keyed by digits, labeled consistently with `embeddings`
    cache: Mutex<BTreeMap<u32, Vec<RootBox>>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({}, signature {:?})", self.poly, self.signature)
    }
}

/// Builds `Q[x]/(f)` for a monic irreducible `f`, with the default precision
/// context and degree cap.
pub fn new_field(f: &IntPoly) -> Result<Arc<NumberField>> {
    NumberField::new(f, PrecisionContext::default(), DEFAULT_DEGREE_CAP)
}

impl NumberField {
    pub fn new(f: &IntPoly, ctx: PrecisionContext, degree_cap: usize) -> Result<Arc<NumberField>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.degree() == 0 {
            return Err(Error::InvalidInput("defining polynomial must have degree >= 1".into()));
        }
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let proof = if f.degree() == 1 {
            IrreducibilityProof::Linear
        } else {
            match irreducibility_witness(f) {
                IrreducibilityVerdict::ProvedIrreducible { prime } => IrreducibilityProof::ModularPrime { prime },
                IrreducibilityVerdict::ProvedReducible { factor } => {
                    return Err(Error::Reducible { factor: factor.to_string() })
                }
                IrreducibilityVerdict::Unknown => {
                    let fz = factor_int_poly(f, degree_cap)?;
                    if !fz.is_irreducible() {
                        return Err(Error::Reducible { factor: fz.factors[0].0.to_string() });
                    }
                    IrreducibilityProof::Factorization
                }
            }
        };
        let s = real_root_count(f)?;
        let t = (f.degree() - s) / 2;
        let embeddings = isolate_roots(f, &ctx)?;
        Ok(Arc::new(NumberField {
            poly: f.clone(),
            signature: (s, t),
            embeddings,
            ctx,
            proof,
            cache: Mutex::new(BTreeMap::new()),
        }))
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn irreducibility_proof(&self) -> &IrreducibilityProof {
        &self.proof
    }

    pub fn discriminant(&self) -> Integer {
        discriminant(&self.poly).expect("degree >= 1")
    }

    /// Embeddings in label order: `s` real, `t` upper representatives, then
    /// their conjugates at the same positions.
    pub fn embeddings(&self) -> &[RootBox] {
        &self.embeddings
    }

    /// Same labels as `embeddings`, isolated at no fewer than `digits`.
    /// Returns the digits actually used.
    pub fn embeddings_at(&self, digits: u32) -> Result<(u32, Vec<RootBox>)> {
        let base = self.embeddings[0].digits;
        if digits <= base {
            return Ok((base, self.embeddings.clone()));
        }
        {
            let cache = self.cache.lock().expect("cache lock");
            if let Some((d, v)) = cache.range(digits..).next() {
                return Ok((*d, v.clone()));
            }
        }
        let s = self.signature.0;
        let mut level = digits.min(self.ctx.max_digits);
        loop {
            if let Some(fine) = isolate_at(&self.poly, s, level) {
                if let Some(v) = relabel(&self.embeddings, &fine) {
                    self.cache.lock().expect("cache lock").insert(level, v.clone());
                    return Ok((level, v));
                }
            }
            if level >= self.ctx.max_digits {
                return Err(Error::PrecisionExhausted {
                    digits: self.ctx.max_digits,
                    context: format!("embeddings of {}", self.poly),
                });
            }
            level = level.saturating_mul(self.ctx.escalation_factor).min(self.ctx.max_digits);
        }
    }

    /// Enclosures of `sigma_i(a)` for every embedding at `digits`.
    pub fn embed_at(&self, a: &FieldElement, digits: u32) -> Result<(u32, Vec<CInterval>)> {
        let (used, boxes) = self.embeddings_at(digits)?;
        let g = a.as_poly();
        Ok((used, boxes.iter().map(|b| eval_rat_poly(&g, &b.enclosure())).collect()))
    }

    /// Enclosures of every `sigma_i(a)` whose midpoint radius is at most
    /// `eps`, escalating precision from the working level.
    pub fn embed_within(&self, a: &FieldElement, eps: &Rational) -> Result<(u32, Vec<CInterval>)> {
        for digits in self.ctx.levels() {
            let (used, vals) = self.embed_at(a, digits)?;
            if vals.iter().all(|v| v.rad() <= *eps) {
                return Ok((used, vals));
            }
        }
        Err(Error::PrecisionExhausted {
            digits: self.ctx.max_digits,
            context: format!("embedding {a} to radius {}", eps.to_f64()),
        })
    }

    pub fn summary(&self, places: usize) -> FieldSummary {
        FieldSummary {
            degree: self.degree(),
            signature: [self.signature.0, self.signature.1],
            defining_poly: self.poly.to_string(),
            coeffs: self.poly.coeffs().iter().map(|c| c.to_string()).collect(),
            discriminant: self.discriminant().to_string(),
            irreducibility: self.proof.clone(),
            embeddings: self.embeddings.iter().map(|b| b.to_summary(places)).collect(),
        }
    }

    pub fn same_as(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || self.poly == other.poly
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldSummary {
    pub degree: usize,
    pub signature: [usize; 2],
    pub defining_poly: String,
    pub coeffs: Vec<String>,
    pub discriminant: String,
    pub irreducibility: IrreducibilityProof,
    pub embeddings: Vec<RootSummary>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootKind;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn signatures() {
        assert_eq!(new_field(&p(&[-2, 0, 1])).unwrap().signature(), (2, 0));
        assert_eq!(new_field(&p(&[-1, 0, -2, 0, 1])).unwrap().signature(), (2, 1));
        assert_eq!(new_field(&p(&[1, 1, 1, 1, 1])).unwrap().signature(), (0, 2));
    }

    #[test]
    fn rejects_bad_defining_polynomials() {
        assert_eq!(new_field(&p(&[-2, 0, 2])).unwrap_err(), Error::NotMonic);
        assert_eq!(
            new_field(&p(&[-1, 0, 1])).unwrap_err(),
            Error::Reducible { factor: "x - 1".into() }
        );
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) is invisible to the modular test
        assert!(matches!(new_field(&p(&[4, 0, 0, 0, 1])).unwrap_err(), Error::Reducible { .. }));
    }

    #[test]
    fn embedding_labels_follow_the_convention() {
        let k = new_field(&p(&[1, 1, 1, 1, 1])).unwrap();
        let e = k.embeddings();
        assert_eq!(e[0].kind, RootKind::ComplexUpper);
        assert_eq!(e[1].kind, RootKind::ComplexUpper);
        assert_eq!(e[2].kind, RootKind::ComplexLower);
        assert!(e[0].center_re < e[1].center_re);
        assert_eq!(e[0].center_re, e[2].center_re);
    }

    #[test]
    fn finer_embeddings_keep_labels() {
        let k = new_field(&p(&[-1, -1, 0, 0, 0, 1])).unwrap();
        let (d, fine) = k.embeddings_at(300).unwrap();
        assert!(d >= 300);
        for (a, b) in k.embeddings().iter().zip(&fine) {
            assert_eq!(a.kind, b.kind);
            assert!((a.center_re.to_f64() - b.center_re.to_f64()).abs() < 1e-40);
            assert!((a.center_im.to_f64() - b.center_im.to_f64()).abs() < 1e-40);
        }
    }
}
