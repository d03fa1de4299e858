mod common;

use proptest::prelude::*;

use common::{hilbert_polynomial_at, random_borel, Q, QM};
use ginbetti::borel::MonomialIdeal;
use ginbetti::fixtures;
use ginbetti::gin::{compute_gin, GinOptions};
use ginbetti::invariants::{depth_pd, h1_oracle, h1_twist, scheme_profile};

/// Saturated Borel ideals: generators avoid the last variable.
fn saturated_borel() -> impl Strategy<Value = MonomialIdeal> {
    (any::<u64>(), 3usize..7, 1usize..5).prop_map(|(seed, nv, count)| {
        let mut rng = ginbetti::seeds::rng(seed);
        random_borel(&mut rng, nv, nv - 1, 1..=4, count)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn h1_by_strata_matches_oracle(j in saturated_borel(), d in 1u32..6) {
        prop_assume!(j.max_generator_degree().unwrap_or(0) <= d + 1);
        prop_assert_eq!(h1_twist(&j, d).unwrap(), h1_oracle(&j, d).unwrap());
    }

    #[test]
    fn profile_is_consistent(j in saturated_borel()) {
        let Ok(p) = scheme_profile(&j) else { return Ok(()) };
        let (depth, pd) = depth_pd(&j).unwrap();
        prop_assert_eq!((depth, pd), (p.depth, p.pd));
        prop_assert_eq!(depth + pd, p.n + 1);
        prop_assert!(depth >= 1, "saturated ideal has positive depth");
        for t in p.reg..=p.reg + 5 {
            prop_assert_eq!(p.hilbert_polynomial.eval(t as i64).unwrap(), j.hilbert_function(t) as i128);
        }
        for at in [-2i64, 0, 1] {
            prop_assert_eq!(p.hilbert_polynomial.eval(at).unwrap(), hilbert_polynomial_at(&j, at));
        }
        prop_assert_eq!(p.dim + p.e, p.n);
        prop_assert_eq!(p.hilbert_polynomial.dim(), p.dim);
        prop_assert_eq!(p.is_3regular, p.reg <= 3);
    }

    /// Basic inequality and vanishing of the linear strand past the
    /// codimension for ND(1) schemes.
    #[test]
    fn nd1_schemes_satisfy_basic_inequality(j in saturated_borel()) {
        let Ok(p) = scheme_profile(&j) else { return Ok(()) };
        if !p.nd1_holds() || p.e == 0 {
            return Ok(());
        }
        prop_assert!(p.degree > p.e as i128, "{}: degree {} codim {}", j, p.degree, p.e);
        let table = j.ek_betti().unwrap();
        for i in p.e + 1..=p.n + 1 {
            prop_assert_eq!(table.get(i, 1), 0, "{}: beta_({},1)", j, i);
        }
    }
}

#[test]
fn fixture_profiles() {
    let gin = |name: &str| {
        let ideal = fixtures::fixture(name).unwrap().ideal().unwrap();
        compute_gin::<Q>(&ideal, GinOptions::default()).unwrap().gin
    };
    for name in ["twisted_cubic", "monomial_curve"] {
        let p = scheme_profile(&gin(name)).unwrap();
        assert!(p.nd1_holds() && p.degree > p.e as i128, "{name}");
    }
    let planes = scheme_profile(&gin("two_planes")).unwrap();
    assert_eq!(planes.nd1_failures(), vec![2]);
    assert!(planes.degree < planes.e as i128 + 1);

    let quintic = gin("quintic");
    let p = scheme_profile(&quintic).unwrap();
    assert_eq!((p.degree, p.reg, p.dim), (5, 4, 1));
    assert_eq!(p.hilbert_polynomial.chis_descending(), vec![5, 1]);
    // HF(t) = 5t + 1 once t >= 3; HF(2) = 9 falls one short of P(2)
    assert_eq!(quintic.hilbert_function(2), 9);
    for t in 3..8u32 {
        assert_eq!(quintic.hilbert_function(t), 5 * t as u64 + 1);
    }
    let _ = QM;
}
