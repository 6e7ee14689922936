//! Signature arithmetic, the LCK admissibility criterion and the consistency
//! audit `lck => t = 1`.

use std::sync::Arc;

use rayon::prelude::*;
use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_unit, FieldElement, NumberField};
use crate::heights::{unit_point_height, HeightSummary};
use crate::units::{is_equal_modulus, is_totally_positive, rank, Decision, RankReport, UnitSubgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignaturePair {
    pub s: usize,
    pub t: usize,
}

impl SignaturePair {
    pub fn new(s: usize, t: usize) -> SignaturePair {
        SignaturePair { s, t }
    }

    pub fn degree(&self) -> usize {
        self.s + 2 * self.t
    }
}

/// A candidate subfield signature `(s', t')` with `[K:L] = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CaseRecord {
    pub s_prime: usize,
    pub t_prime: usize,
    #[serde(rename = "D")]
    pub d: usize,
}

/// Lexicographically smallest `(m, q)` with `m >= 0`, `q >= 2` and
/// `s = (2t + 2m) q - 2t`.
pub fn dubickas_feasible(sig: SignaturePair) -> Result<Option<(usize, usize)>> {
    let SignaturePair { s, t } = sig;
    if s < 1 || t < 1 {
        return Err(Error::InvalidSignature { s, t, reason: "needs s >= 1 and t >= 1".into() });
    }
    let n = sig.degree();
    // q >= 2 forces 2t + 2m <= n / 2
    let mut m = 0;
    while 4 * (t + m) <= n {
        let w = 2 * (t + m);
        if n % w == 0 && n / w >= 2 {
            return Ok(Some((m, n / w)));
        }
        m += 1;
    }
    Ok(None)
}

/// All `(s', t', D)` with `t' in {0, 1}`, `(s' + 2t') D = s + 2t`, `D >= t`,
/// `(s' - 1) D <= s` and `s' + t' - 1 >= s`. Empty whenever `t >= 2`.
pub fn signature_case_analysis(sig: SignaturePair) -> Vec<CaseRecord> {
    let SignaturePair { s, t } = sig;
    let n = sig.degree();
    let mut out = Vec::new();
    for d in (1..=n).filter(|d| n % d == 0) {
        for t_prime in 0..=1usize {
            let Some(s_prime) = (n / d).checked_sub(2 * t_prime) else { continue };
            if s_prime + 2 * t_prime == 0 {
                continue;
            }
            let tower = d >= t;
            let real_places = (s_prime as i128 - 1) * d as i128 <= s as i128;
            let rank = s_prime + t_prime >= s + 1;
            if tower && real_places && rank {
                out.push(CaseRecord { s_prime, t_prime, d });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Signature,
    Units,
    TotalPositivity,
    Rank,
    EqualModulus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub condition: Condition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorVerdict {
    pub element: Vec<String>,
    pub unit: bool,
    pub totally_positive: Decision,
    pub equal_modulus: Decision,
}

#[derive(Clone, Debug, Serialize)]
pub struct LckVerdict {
    pub signature: [usize; 2],
    pub all_units: bool,
    pub all_totally_positive: bool,
    pub rank_equals_s: bool,
    pub all_equal_modulus: bool,
    pub lck: bool,
    pub reasons: Vec<Reason>,
    /// absent when some generator is not a unit
    pub rank: Option<RankReport>,
    pub certificates: Vec<GeneratorVerdict>,
}

impl LckVerdict {
    pub fn fails(&self, c: Condition) -> bool {
        self.reasons.iter().any(|r| r.condition == c)
    }
}

fn generator_verdict(g: &FieldElement) -> Result<GeneratorVerdict> {
    if g.is_zero() {
        return Err(Error::InvalidInput("generators must be nonzero".into()));
    }
    Ok(GeneratorVerdict {
        element: g.to_strings(),
        unit: is_unit(g)?,
        totally_positive: is_totally_positive(g)?,
        equal_modulus: is_equal_modulus(g)?,
    })
}

/// The subgroup generated by `gens` gives an LCK structure when every
/// generator is a totally positive unit with all complex conjugates of one
/// modulus, and the generators have rank `s`.
pub fn lck_admissible(field: &Arc<NumberField>, gens: &[FieldElement]) -> Result<LckVerdict> {
    let (s, t) = field.signature();
    if s < 1 || t < 1 {
        return Err(Error::InvalidSignature { s, t, reason: "admissibility needs s >= 1 and t >= 1".into() });
    }
    if gens.iter().any(|g| !g.field().same_as(field)) {
        return Err(Error::FieldMismatch);
    }
    let certificates = gens.par_iter().map(generator_verdict).collect::<Result<Vec<_>>>()?;
    let mut reasons = Vec::new();
    for (i, c) in certificates.iter().enumerate() {
        if !c.unit {
            reasons.push(Reason { condition: Condition::Units, generator: Some(i), detail: "not a unit".into() });
        }
    }
    for (i, c) in certificates.iter().enumerate() {
        if !c.totally_positive.value {
            reasons.push(Reason {
                condition: Condition::TotalPositivity,
                generator: Some(i),
                detail: "negative at a real place".into(),
            });
        }
    }
    let all_units = certificates.iter().all(|c| c.unit);
    let rank = if all_units { Some(rank(&UnitSubgroup::new(field, gens.to_vec())?)?) } else { None };
    let rank_equals_s = rank.as_ref().is_some_and(|r| r.certified == s);
    match &rank {
        Some(r) if r.certified != s => reasons.push(Reason {
            condition: Condition::Rank,
            generator: None,
            detail: format!("rank {} differs from s = {s}", r.certified),
        }),
        None => reasons.push(Reason {
            condition: Condition::Rank,
            generator: None,
            detail: "rank undefined: not all generators are units".into(),
        }),
        _ => {}
    }
    for (i, c) in certificates.iter().enumerate() {
        if !c.equal_modulus.value {
            reasons.push(Reason {
                condition: Condition::EqualModulus,
                generator: Some(i),
                detail: "complex conjugates of different moduli".into(),
            });
        }
    }
    let all_totally_positive = certificates.iter().all(|c| c.totally_positive.value);
    let all_equal_modulus = certificates.iter().all(|c| c.equal_modulus.value);
    Ok(LckVerdict {
        signature: [s, t],
        all_units,
        all_totally_positive,
        rank_equals_s,
        all_equal_modulus,
        lck: all_units && all_totally_positive && rank_equals_s && all_equal_modulus,
        reasons,
        rank,
        certificates,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AuditStatus {
    Consistent,
    Inconsistent,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum PointHeight {
    Value(HeightSummary),
    Error { error: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub signature: [usize; 2],
    pub status: AuditStatus,
    /// false when the signature admits no LCK question (`s = 0` or `t = 0`)
    pub applicable: bool,
    pub lck: bool,
    pub reasons: Vec<Reason>,
    /// generators failing equal modulus while everything else holds
    pub violating_generators: Vec<usize>,
    pub case_analysis: Vec<CaseRecord>,
    /// heights of `[sigma_{s+1}(g) : sigma_{s+2}(g)]`, for `t = 2` only
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_point_heights: Option<Vec<PointHeight>>,
    pub certificates: Option<LckVerdict>,
    pub violations: Vec<String>,
}

/// Runs the admissibility check and verifies it against `lck => t = 1`,
/// with the subfield case analysis as corroborating evidence.
pub fn main_theorem_audit(field: &Arc<NumberField>, gens: &[FieldElement], degree_cap: usize) -> Result<AuditReport> {
    let (s, t) = field.signature();
    let sig = SignaturePair::new(s, t);
    let case_analysis = signature_case_analysis(sig);
    let mut violations = Vec::new();
    if t >= 2 && !case_analysis.is_empty() {
        violations.push(format!("case analysis for (s, t) = ({s}, {t}) is nonempty"));
    }
    let unit_point_heights = if t == 2 {
        let eps = Rational::from((1, Integer::from(Integer::u_pow_u(10, 30))));
        let hs = gens
            .iter()
            .map(|g| match unit_point_height(g, &eps, degree_cap) {
                Ok(h) => PointHeight::Value(h.summary(20)),
                Err(e) => PointHeight::Error { error: e.to_string() },
            })
            .collect();
        Some(hs)
    } else {
        None
    };
    let verdict = match lck_admissible(field, gens) {
        Ok(v) => Some(v),
        Err(Error::InvalidSignature { reason, .. }) => {
            return Ok(AuditReport {
                signature: [s, t],
                status: AuditStatus::Consistent,
                applicable: false,
                lck: false,
                reasons: vec![Reason { condition: Condition::Signature, generator: None, detail: reason }],
                violating_generators: vec![],
                case_analysis,
                unit_point_heights,
                certificates: None,
                violations,
            })
        }
        Err(e) => return Err(e),
    };
    let v = verdict.expect("set above");
    if v.lck && t != 1 {
        violations.push(format!("admissible subgroup in a field with t = {t}"));
    }
    let others_hold = v.all_units && v.all_totally_positive && v.rank_equals_s;
    let violating_generators: Vec<usize> = if t >= 2 && others_hold {
        v.certificates.iter().enumerate().filter(|(_, c)| !c.equal_modulus.value).map(|(i, _)| i).collect()
    } else {
        vec![]
    };
    if t >= 2 && others_hold && violating_generators.is_empty() {
        violations.push("no generator violates equal modulus although t >= 2".into());
    }
    Ok(AuditReport {
        signature: [s, t],
        status: if violations.is_empty() { AuditStatus::Consistent } else { AuditStatus::Inconsistent },
        applicable: true,
        lck: v.lck,
        reasons: v.reasons.clone(),
        violating_generators,
        case_analysis,
        unit_point_heights,
        certificates: Some(v),
        violations,
    })
}
