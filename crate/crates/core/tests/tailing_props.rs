mod common;

use proptest::prelude::*;

use common::random_borel;
use ginbetti::invariants::{h1_twist, scheme_profile};
use ginbetti::tailing::{
    analyze, betti_from_normality, degree_genus_from_tailing, normality_from_betti,
    vanishing_sections, xi_inverse, xi_matrix,
};

fn codims() -> impl Strategy<Value = (usize, usize)> {
    (2usize..12).prop_flat_map(|n| (Just(n), 1..n))
}

proptest! {
    #[test]
    fn xi_inverse_is_an_inverse((n, e) in codims()) {
        let xi = xi_matrix(n, e).unwrap();
        let inv = xi_inverse(n, e).unwrap();
        let k = xi.size();
        prop_assert_eq!(k, n - e + 1);
        let product = xi.mul(&inv).unwrap();
        for (i, row) in product.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                prop_assert_eq!(*v, i128::from(i == j));
            }
        }
    }

    #[test]
    fn normality_round_trip((n, e) in codims(), raw in prop::collection::vec(0i128..40, 11)) {
        let h = &raw[..n - e + 1];
        let b = betti_from_normality(h, n, e).unwrap();
        prop_assert_eq!(normality_from_betti(&b, n, e).unwrap(), h.to_vec());
        prop_assert!(b.iter().all(|v| *v >= 0), "Xi has nonnegative entries");
    }

    #[test]
    fn gin_tailing_reading(seed in any::<u64>(), nv in 4usize..8, count in 1usize..5) {
        let mut rng = ginbetti::seeds::rng(seed);
        let j = random_borel(&mut rng, nv, nv - 1, 2..=3, count);
        let Ok(p) = scheme_profile(&j) else { return Ok(()) };
        if !p.is_3regular || !p.nd1_holds() || p.e == 0 {
            return Ok(());
        }
        let report = analyze(&j, &p, false).unwrap();
        prop_assert!(report.consistency);
        prop_assert_eq!(report.hilbert_agrees, Some(true));
        prop_assert_eq!(report.cohomology.h1, h1_twist(&j, 2).unwrap() as i128);
        let top = j.generators().iter().filter_map(|m| m.max_index()).max().unwrap_or(0);
        let co = &report.cohomology;
        if let (Some(lo), Some(hi), Some(h2)) = (co.h3_lower_raw, co.h3_upper, co.h2) {
            prop_assert_eq!(hi - lo, h2);
            // h2 < 0 needs h0(O_X) > 1, which takes an embedded component here
            prop_assert!(h2 >= 0 || top >= p.e, "{}: h3 in [{}, {}]", j, lo, hi);
        }
        let dg = degree_genus_from_tailing(&report.b, p.n, p.e).unwrap();
        prop_assert_eq!(dg.degree, p.degree);
        let gaps = vanishing_sections(&report.h, p.e, p.pd.min(p.n));
        if gaps.is_empty() {
            prop_assert!(report.rigidity.violations().is_empty(), "{}: {:?}", j, report.rigidity);
        }
        if !report.rigidity.violations().is_empty() {
            prop_assert!(top >= p.e, "{}: unmixed ideal breaks the bounds", j);
        }
    }
}
