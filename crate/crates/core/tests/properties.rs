use proptest::prelude::*;

use superschur::charkron::{kronecker, m_lambda};
use superschur::hookschur::{hook_schur, hook_schur_def, Alphabet};
use superschur::laurent::VarTable;
use superschur::partition::{classify_hook, partitions_of, typical_split, Hook, HookClass, Partition};
use superschur::qseries::{expand_product, ProductFactor, TruncatedSeries};
use superschur::residue::{hook_vars, inner_product};

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_hook(max: usize) -> impl Strategy<Value = Hook> {
    (0..=max, 0..=max).prop_map(|(k, l)| Hook::new(k, l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lambda in arb_partition(12)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn hooks_transpose(lambda in arb_partition(10), h in arb_hook(3)) {
        prop_assert_eq!(h.contains(&lambda), h.swapped().contains(&lambda.conjugate()));
    }

    #[test]
    fn typical_is_a_set_difference(lambda in arb_partition(10), k in 1usize..4, l in 1usize..4) {
        let h = Hook::new(k, l);
        let typical = classify_hook(&lambda, h) == HookClass::Typical;
        let smaller = Hook::new(k - 1, l - 1).contains(&lambda);
        prop_assert_eq!(typical, h.contains(&lambda) && !smaller);
        if typical {
            let (mu, nu) = typical_split(&lambda, h).unwrap();
            prop_assert_eq!(lambda.size(), k * l + mu.size() + nu.size());
        }
    }

    #[test]
    fn m_lambda_is_symmetric_in_the_hook(lambda in arb_partition(6), h in arb_hook(2)) {
        prop_assert_eq!(m_lambda(&lambda, h), m_lambda(&lambda, h.swapped()));
    }

    #[test]
    fn kronecker_with_trivial_is_identity(lambda in arb_partition(6)) {
        let n = lambda.size();
        let row = Partition::row(n);
        for mu in partitions_of(n) {
            let expected = u64::from(mu == lambda);
            prop_assert_eq!(kronecker(&lambda, &row, &mu).unwrap(), expected);
        }
    }

    #[test]
    fn fast_path_matches_definition(lambda in arb_partition(6), h in arb_hook(2)) {
        let names = VarTable::numbered("x", h.k).into_iter().chain(VarTable::numbered("y", h.l));
        let vars = VarTable::new(names).unwrap();
        let x = Alphabet::variables(&vars, 0..h.k);
        let y = Alphabet::variables(&vars, h.k..h.k + h.l);
        prop_assert_eq!(hook_schur(&lambda, &x, &y).unwrap(), hook_schur_def(&lambda, &x, &y).unwrap());
    }

    #[test]
    fn hook_schur_conjugation_swaps_alphabets(lambda in arb_partition(6), h in arb_hook(2)) {
        let vars = VarTable::new(["a1", "a2", "b1", "b2"]).unwrap();
        let x = Alphabet::variables(&vars, 0..h.k);
        let y = Alphabet::variables(&vars, 2..2 + h.l);
        prop_assert_eq!(
            hook_schur(&lambda, &x, &y).unwrap(),
            hook_schur(&lambda.conjugate(), &y, &x).unwrap()
        );
    }

    #[test]
    fn orthonormality_random_pairs(mu in arb_partition(4), nu in arb_partition(4), pick in 0usize..2) {
        let h = [Hook::new(1, 1), Hook::new(2, 1)][pick];
        let vars = hook_vars(h);
        let x = Alphabet::variables(&vars, 0..h.k);
        let y = Alphabet::variables(&vars, h.k..h.k + h.l);
        let got = inner_product(&hook_schur(&mu, &x, &y).unwrap(), &hook_schur(&nu, &x, &y).unwrap(), h).unwrap();
        let typical = classify_hook(&mu, h) == HookClass::Typical;
        prop_assert_eq!(got, i64::from(mu == nu && typical));
    }

    #[test]
    fn product_expansion_is_multiplicative(
        a in proptest::collection::vec((any::<bool>(), 1usize..6, any::<bool>()), 0..5),
        b in proptest::collection::vec((any::<bool>(), 1usize..6, any::<bool>()), 0..5),
    ) {
        let conv = |v: &Vec<(bool, usize, bool)>| -> Vec<ProductFactor> {
            v.iter().map(|&(s, e, p)| ProductFactor::new(if s { 1 } else { -1 }, e, if p { 1 } else { -1 })).collect()
        };
        let (fa, fb) = (conv(&a), conv(&b));
        let both: Vec<_> = fa.iter().chain(&fb).copied().collect();
        let sa = expand_product("u", &fa, 0, 15).unwrap();
        let sb = expand_product("u", &fb, 0, 15).unwrap();
        prop_assert_eq!(sa.mul(&sb), expand_product("u", &both, 0, 15).unwrap());
    }

    #[test]
    fn series_product_ignores_high_coefficients(
        a in proptest::collection::vec(-5i64..5, 1..12),
        b in proptest::collection::vec(-5i64..5, 1..12),
    ) {
        let d = 6;
        let long_a = TruncatedSeries::from_coeffs("u", 11, a.clone());
        let long_b = TruncatedSeries::from_coeffs("u", 11, b.clone());
        let short_a = TruncatedSeries::from_coeffs("u", d, a);
        let short_b = TruncatedSeries::from_coeffs("u", d, b);
        prop_assert_eq!(long_a.mul(&long_b).truncate(d), short_a.mul(&short_b));
    }
}
