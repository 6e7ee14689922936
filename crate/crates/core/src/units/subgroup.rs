//! Finitely generated subgroups of the unit group and their rank.

use std::sync::Arc;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use super::{is_equal_conjugates, is_equal_modulus, is_totally_positive, log_embedding_at, Decision, RealValue};
use crate::error::{Error, Result};
use crate::field::{is_unit, FieldElement, NumberField};
use crate::interval::Interval;

#[derive(Clone, Debug)]
pub struct UnitSubgroup {
    field: Arc<NumberField>,
    generators: Vec<FieldElement>,
}

impl UnitSubgroup {
    /// Every generator must be a unit of the maximal order of `field`.
    pub fn new(field: &Arc<NumberField>, generators: Vec<FieldElement>) -> Result<UnitSubgroup> {
        for g in &generators {
            if !g.field().same_as(field) {
                return Err(Error::FieldMismatch);
            }
            if g.is_zero() || !is_unit(g)? {
                return Err(Error::NotUnit);
            }
        }
        Ok(UnitSubgroup { field: field.clone(), generators })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn generators(&self) -> &[FieldElement] {
        &self.generators
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    /// size of a minor of the log-embedding matrix proved nonsingular
    pub certified: usize,
    pub estimate: usize,
    pub precision_digits: u32,
}

/// Greedy partial-pivoting elimination on midpoints. Returns the pivot
/// `(row, column)` pairs in elimination order.
fn pivot_pattern(rows: &[Vec<Interval>], tau: &Float) -> Vec<(usize, usize)> {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Float>> = rows.iter().map(|r| r.iter().map(|x| x.mid()).collect()).collect();
    let mut used_rows = vec![false; n];
    let mut pivots = Vec::new();
    for col in 0..m {
        let best = (0..n)
            .filter(|&i| !used_rows[i])
            .max_by(|&i, &j| a[i][col].clone().abs().partial_cmp(&a[j][col].clone().abs()).expect("finite"));
        let Some(p) = best else { break };
        if a[p][col].clone().abs() <= *tau {
            continue;
        }
        used_rows[p] = true;
        pivots.push((p, col));
        for i in 0..n {
            if used_rows[i] {
                continue;
            }
            let factor = Float::with_val(a[i][col].prec(), &a[i][col] / &a[p][col]);
            for k in col..m {
                let sub = Float::with_val(a[i][k].prec(), &factor * &a[p][k]);
                a[i][k] -= sub;
            }
        }
    }
    pivots
}

/// Interval elimination on the minor picked by `pivots`; true when every
/// pivot excludes zero, which proves the minor nonsingular.
fn minor_is_nonsingular(rows: &[Vec<Interval>], pivots: &[(usize, usize)]) -> bool {
    let r = pivots.len();
    let mut a: Vec<Vec<Interval>> =
        pivots.iter().map(|&(i, _)| pivots.iter().map(|&(_, j)| rows[i][j].clone()).collect()).collect();
    for k in 0..r {
        if a[k][k].contains_zero() {
            return false;
        }
        for i in k + 1..r {
            let Some(factor) = a[i][k].div(&a[k][k]) else { return false };
            for j in k..r {
                a[i][j] = a[i][j].sub(&factor.mul(&a[k][j]));
            }
        }
    }
    true
}

/// Rank of the log-embedding lattice of `U`, with a certified lower bound.
/// Precision escalates until the estimated rank is proved.
pub fn rank(u: &UnitSubgroup) -> Result<RankReport> {
    let field = &u.field;
    let (s, t) = field.signature();
    if u.generators.is_empty() {
        return Ok(RankReport { certified: 0, estimate: 0, precision_digits: field.ctx().working_digits });
    }
    for level in field.ctx().levels() {
        let mut used = level;
        let mut rows = Vec::with_capacity(u.generators.len());
        for g in &u.generators {
            let (d, v) = log_embedding_at(g, level)?;
            used = used.max(d);
            rows.push(v);
        }
        let prec = rows[0][0].prec();
        let tau = Float::with_val(prec, Pow::pow(Float::with_val(prec, 10), -((level / 2) as i32)));
        let pivots = pivot_pattern(&rows, &tau);
        let estimate = pivots.len();
        if estimate > s + t - 1 {
            return Err(Error::Internal(format!("rank estimate {estimate} exceeds s + t - 1 = {}", s + t - 1)));
        }
        if minor_is_nonsingular(&rows, &pivots) {
            return Ok(RankReport { certified: estimate, estimate, precision_digits: used });
        }
    }
    Err(Error::PrecisionExhausted { digits: field.ctx().max_digits, context: "rank certification".into() })
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub element: Vec<String>,
    pub unit: bool,
    pub log_embedding: Vec<RealValue>,
    pub totally_positive: Decision,
    pub equal_modulus: Decision,
    pub equal_conjugates: Decision,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupFlags {
    pub rank_equals_s: bool,
    pub rank_within_dirichlet: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupReport {
    pub signature: [usize; 2],
    pub generators: Vec<GeneratorReport>,
    pub rank: RankReport,
    pub flags: SubgroupFlags,
}

fn generator_report(g: &FieldElement) -> Result<GeneratorReport> {
    let (_, logs) = log_embedding_at(g, g.field().ctx().working_digits)?;
    Ok(GeneratorReport {
        element: g.to_strings(),
        unit: true,
        log_embedding: logs.iter().map(|x| RealValue::from_interval(x, 20)).collect(),
        totally_positive: is_totally_positive(g)?,
        equal_modulus: is_equal_modulus(g)?,
        equal_conjugates: is_equal_conjugates(g)?,
    })
}

/// Per-generator decisions plus the certified rank. Generators are analyzed
/// in parallel; the report keeps their input order.
pub fn analyze_subgroup(u: &UnitSubgroup) -> Result<SubgroupReport> {
    let (s, t) = u.field.signature();
    let generators = u.generators.par_iter().map(generator_report).collect::<Result<Vec<_>>>()?;
    let rank = rank(u)?;
    Ok(SubgroupReport {
        signature: [s, t],
        generators,
        flags: SubgroupFlags {
            rank_equals_s: rank.certified == s,
            rank_within_dirichlet: rank.estimate + 1 <= s + t,
        },
        rank,
    })
}
