use braid_chow::symfunc::{schur_expand, SymSeriesRecord};
use braid_chow::{partitions_of, Partition, SymSeries, TPoly};
use num_rational::BigRational;
use proptest::prelude::*;

fn factorial_inverse(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).product::<usize>().into()).recip()
}

const N: usize = 5;

fn series(min_size: usize) -> impl Strategy<Value = SymSeries> {
    let parts: Vec<Partition> = (min_size..=3).flat_map(partitions_of).collect();
    prop::collection::vec((prop::sample::select(parts), -2i64..=2, -2i64..=2), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(SymSeries::zero(N), |acc, (lam, a, b)| acc.add(&SymSeries::term(lam, TPoly::from_ints(&[a, b]), N)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn plethysm_is_additive(f in series(0), g in series(0), h in series(1)) {
        prop_assert_eq!(f.add(&g).plethysm(&h).unwrap(), f.plethysm(&h).unwrap().add(&g.plethysm(&h).unwrap()));
    }

    #[test]
    fn plethysm_is_multiplicative(f in series(0), g in series(0), h in series(1)) {
        prop_assert_eq!(f.mul(&g).plethysm(&h).unwrap(), f.plethysm(&h).unwrap().mul(&g.plethysm(&h).unwrap()));
    }

    #[test]
    fn plethysm_is_associative(f in series(1), g in series(1), h in series(1)) {
        let left = f.plethysm(&g).unwrap().plethysm(&h).unwrap();
        let right = f.plethysm(&g.plethysm(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rank_commutes_with_plethysm(f in series(1), g in series(1)) {
        // rk only sees the p_1-power part, and ψ_k kills it for k >= 2
        let restrict = |s: &SymSeries| {
            let mut r = SymSeries::zero(N);
            for (n, c) in s.rk() {
                r = r.add(&SymSeries::term(Partition::ones(n), c, N).scale(&factorial_inverse(n)));
            }
            r
        };
        let lhs = f.plethysm(&g).unwrap().rk();
        let rhs = restrict(&f).plethysm(&restrict(&g)).unwrap().rk();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(f in series(0)) {
        let rec = f.to_record();
        let text = serde_json::to_string(&rec).unwrap();
        let back: SymSeriesRecord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(SymSeries::from_record(&back).unwrap(), f);
    }

    #[test]
    fn schur_expansion_is_linear(f in series(3), g in series(3)) {
        let fh = f.component(3);
        let gh = g.component(3);
        let sum = schur_expand(&fh.add(&gh), 3).unwrap();
        let a = schur_expand(&fh, 3).unwrap();
        let b = schur_expand(&gh, 3).unwrap();
        for lam in partitions_of(3) {
            let zero = TPoly::zero();
            let expect = a.get(&lam).unwrap_or(&zero) + b.get(&lam).unwrap_or(&zero);
            prop_assert_eq!(sum.get(&lam).cloned().unwrap_or_else(TPoly::zero), expect);
        }
    }
}
