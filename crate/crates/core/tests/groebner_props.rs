mod common;

use proptest::prelude::*;

use common::{random_ideal, rank_hilbert_function};
use ginbetti::groebner::{buchberger, s_polynomial};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn buchberger_output_is_a_certified_basis(seed in any::<u64>(), nv in 3usize..5, cubic in any::<bool>()) {
        let mut rng = ginbetti::seeds::rng(seed);
        let degrees: &[u32] = if cubic { &[2, 3] } else { &[2, 2] };
        let ideal = random_ideal(&mut rng, nv, degrees, 3);
        let gb = buchberger(&ideal);
        prop_assert!(gb.is_groebner_basis());
        prop_assert!(gb.is_reduced());
        let elems = gb.elements();
        for (i, f) in elems.iter().enumerate() {
            for g in &elems[i + 1..] {
                prop_assert!(gb.reduce(&s_polynomial(f, g)).is_zero());
            }
        }
        for g in ideal.generators() {
            prop_assert!(gb.contains(g));
        }
        let again = buchberger(&ideal);
        prop_assert_eq!(again.elements(), elems);

        let init = gb.initial_ideal();
        for t in 0..=5 {
            prop_assert_eq!(rank_hilbert_function(&ideal, t), init.hilbert_function(t), "t = {}", t);
        }
    }
}
