mod common;

use liedens::lnd::{
    apply_derivation, delta_degree, diagonal_torus_weight, is_in_kernel, sl2_coordinate_ring,
    sl2_standard_derivations, MultiPoly, QuotientRing, TorusWeight, DEFAULT_DEGREE_CAP,
};
use proptest::prelude::*;

const SAMPLES: u32 = 128;

fn poly(seed: u64, max_degree: u32) -> MultiPoly {
    let mut rng = common::rng(seed);
    common::random_poly(&mut rng, 4, max_degree)
}

fn ring() -> QuotientRing {
    sl2_coordinate_ring()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(SAMPLES))]

    #[test]
    fn leibniz(sf in any::<u64>(), sg in any::<u64>()) {
        let r = ring();
        let (d1, d2) = sl2_standard_derivations();
        let f = r.normal_form(&poly(sf, 4));
        let g = r.normal_form(&poly(sg, 4));
        for d in [&d1, &d2] {
            let lhs = apply_derivation(&r, d, &r.normal_form(&(&f * &g)));
            let rhs = r.normal_form(&(&(&apply_derivation(&r, d, &f) * &g) + &(&f * &apply_derivation(&r, d, &g))));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn linearity(sf in any::<u64>(), sg in any::<u64>()) {
        let r = ring();
        let (d1, _) = sl2_standard_derivations();
        let f = poly(sf, 4);
        let g = poly(sg, 4);
        let lhs = apply_derivation(&r, &d1, &r.normal_form(&(&f + &g)));
        let rhs = &apply_derivation(&r, &d1, &r.normal_form(&f)) + &apply_derivation(&r, &d1, &r.normal_form(&g));
        prop_assert_eq!(lhs, r.normal_form(&rhs));
    }

    #[test]
    fn normal_form_is_idempotent(s in any::<u64>()) {
        let r = ring();
        let f = poly(s, 5);
        let nf = r.normal_form(&f);
        prop_assert!(r.is_normal(&nf));
        prop_assert_eq!(r.normal_form(&nf), nf.clone());
        // f - nf(f) lies in the ideal: it has normal form zero
        prop_assert!(r.normal_form(&(&f - &nf)).is_zero());
    }

    #[test]
    fn degree_is_additive(sf in any::<u64>(), sg in any::<u64>()) {
        let r = ring();
        let (d1, d2) = sl2_standard_derivations();
        let f = r.normal_form(&poly(sf, 3));
        let g = r.normal_form(&poly(sg, 3));
        let fg = r.normal_form(&(&f * &g));
        prop_assume!(!f.is_zero() && !g.is_zero() && !fg.is_zero());
        for d in [&d1, &d2] {
            let deg = |x| delta_degree(&r, d, x, DEFAULT_DEGREE_CAP).unwrap();
            prop_assert_eq!(deg(&fg), deg(&f) + deg(&g));
        }
    }

    #[test]
    fn torus_weight_is_additive(sf in any::<u64>(), sg in any::<u64>()) {
        let r = ring();
        let mut rng = common::rng(sf ^ sg.rotate_left(17));
        let f = common::random_term(&mut rng, 4, 4);
        let g = common::random_term(&mut rng, 4, 4);
        let TorusWeight(wf) = diagonal_torus_weight(&f).unwrap();
        let TorusWeight(wg) = diagonal_torus_weight(&g).unwrap();
        let fg = r.normal_form(&(&f * &g));
        prop_assert_eq!(diagonal_torus_weight(&fg).unwrap(), TorusWeight(wf + wg));
    }

    #[test]
    fn format_parse_round_trip(s in any::<u64>()) {
        let r = ring();
        let f = r.normal_form(&poly(s, 5));
        let text = r.format(&f);
        prop_assert_eq!(r.parse(&text).unwrap(), f);
    }

    #[test]
    fn kernel_products_have_low_degree(i in 0usize..2, j in 0usize..2) {
        let r = ring();
        let (d1, d2) = sl2_standard_derivations();
        let a = r.gen(["a1", "a2"][i]).unwrap();
        let b = r.gen(["b1", "b2"][j]).unwrap();
        prop_assert!(is_in_kernel(&r, &d1, &a));
        prop_assert!(is_in_kernel(&r, &d2, &b));
        let ab = r.normal_form(&(&a * &b));
        prop_assert!(delta_degree(&r, &d1, &ab, DEFAULT_DEGREE_CAP).unwrap() <= 1);
        prop_assert!(delta_degree(&r, &d2, &ab, DEFAULT_DEGREE_CAP).unwrap() <= 1);
    }
}
