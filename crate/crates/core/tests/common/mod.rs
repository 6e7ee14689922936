#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use equimod::field::{is_unit, new_field, FieldElement, NumberField};
use equimod::poly::IntPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn field(c: &[i64]) -> Arc<NumberField> {
    new_field(&IntPoly::from_i64s(c)).expect("corpus field")
}

/// Six fields covering signatures (1,1), (2,1) twice, (1,2), (2,2), (0,2).
pub fn corpus() -> Vec<Arc<NumberField>> {
    vec![
        field(&[-1, -1, 0, 1]),
        field(&[-1, 0, -2, 0, 1]),
        field(&[-1, -1, 0, 0, 1]),
        field(&[-1, -1, 0, 0, 0, 1]),
        field(&[-1, -1, 0, 0, 0, 0, 1]),
        field(&[1, 1, 1, 1, 1]),
    ]
}

/// Units other than +-1 whose power-basis coefficients lie in `[-bound, bound]`.
pub fn small_units(k: &Arc<NumberField>, bound: i64) -> Vec<FieldElement> {
    let d = k.degree();
    let width = (2 * bound + 1) as usize;
    let mut out = Vec::new();
    for idx in 0..width.pow(d as u32) {
        let mut n = idx;
        let c: Vec<i64> = (0..d)
            .map(|_| {
                let v = (n % width) as i64 - bound;
                n /= width;
                v
            })
            .collect();
        let e = FieldElement::from_i64s(k, &c);
        if e.is_zero() || e.as_rational().is_some() {
            continue;
        }
        if is_unit(&e).unwrap() {
            out.push(e);
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Product of one to three units from `pool` raised to exponents in `[-3, 3]`.
pub fn random_unit(k: &Arc<NumberField>, pool: &[FieldElement], rng: &mut ChaCha8Rng) -> FieldElement {
    let mut acc = FieldElement::one(k);
    for _ in 0..rng.gen_range(1..=3) {
        let g = &pool[rng.gen_range(0..pool.len())];
        let e = rng.gen_range(-3i64..=3);
        acc = acc.mul(&g.pow(e).unwrap()).unwrap();
    }
    acc
}
