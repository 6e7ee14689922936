use equimod::poly::{
    discriminant, factor_int_poly, real_root_count, resultant, sylvester_resultant, IntPoly, DEFAULT_DEGREE_CAP,
};
use equimod::roots::{isolate_roots, root_separation_bound, PrecisionContext, RootKind, SeparationBound};
use proptest::prelude::*;
use rug::{Float, Integer};

fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 2..=max_deg + 1).prop_filter_map("nonconstant", |mut c| {
        if *c.last().unwrap() == 0 {
            *c.last_mut().unwrap() = 1;
        }
        let f = IntPoly::from_i64s(&c);
        (f.degree() >= 1).then_some(f)
    })
}

fn squarefree(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_deg).prop_filter("squarefree", |f| f.is_squarefree())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_routes_agree(a in poly(5), b in poly(5)) {
        let prs = resultant(&a, &b).unwrap();
        let det = sylvester_resultant(a.coeffs(), b.coeffs());
        prop_assert_eq!(prs, det);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(a in poly(3), b in poly(3), c in poly(2)) {
        let r = resultant(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert_eq!(r, Integer::new());
    }

    #[test]
    fn factorization_round_trips(a in poly(4), b in poly(3), k in -3i64..=3) {
        let k = if k == 0 { 1 } else { k };
        let f = (&(&a * &b) * &a).scale(&Integer::from(k));
        let fz = factor_int_poly(&f, DEFAULT_DEGREE_CAP).unwrap();
        prop_assert_eq!(fz.expand(), f);
        for (g, _) in &fz.factors {
            prop_assert!(g.is_primitive());
            prop_assert!(factor_int_poly(g, DEFAULT_DEGREE_CAP).unwrap().is_irreducible());
        }
    }

    #[test]
    fn sturm_count_and_complex_pairs_fill_the_degree(f in squarefree(6)) {
        let s = real_root_count(&f).unwrap();
        let boxes = isolate_roots(&f, &PrecisionContext::default()).unwrap();
        let upper = boxes.iter().filter(|b| b.kind == RootKind::ComplexUpper).count();
        prop_assert_eq!(s + 2 * upper, f.degree());
        prop_assert_eq!(boxes.iter().filter(|b| b.kind == RootKind::Real).count(), s);
    }

    #[test]
    fn separation_bound_is_sound(f in squarefree(6)) {
        prop_assume!(f.degree() >= 2);
        let SeparationBound::Bound(delta) = root_separation_bound(&f).unwrap() else { unreachable!() };
        let ctx = PrecisionContext::new(50, 2, 4096).unwrap();
        let boxes = isolate_roots(&f, &ctx).unwrap();
        let delta = Float::with_val(200, &delta);
        for (i, a) in boxes.iter().enumerate() {
            for b in &boxes[i + 1..] {
                let dre = Float::with_val(200, &a.center_re - &b.center_re);
                let dim = Float::with_val(200, &a.center_im - &b.center_im);
                let dist = Float::with_val(200, dre.hypot_ref(&dim));
                let slack = Float::with_val(200, &a.radius + &b.radius);
                prop_assert!(Float::with_val(200, &dist + &slack) >= delta);
            }
        }
    }

    #[test]
    fn discriminant_sign_counts_complex_pairs(f in squarefree(5)) {
        // sign(disc) = (-1)^t for a real polynomial with t pairs of complex roots
        let s = real_root_count(&f).unwrap();
        let t = (f.degree() - s) / 2;
        let d = discriminant(&f).unwrap();
        prop_assert_eq!(d.cmp0() == std::cmp::Ordering::Greater, t % 2 == 0);
    }
}
